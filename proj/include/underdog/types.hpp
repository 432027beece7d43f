#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "underdog/errors.hpp"

namespace underdog
{

/// A table cell that may be absent ("NA" in the bundled files).
using Cell = std::optional<double>;

namespace detail
{
inline std::string trim(std::string_view s)
{
   const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
   while (!s.empty() && ws(s.front())) s.remove_prefix(1);
   while (!s.empty() && ws(s.back())) s.remove_suffix(1);
   return std::string(s);
}

inline std::string ascii_lower(std::string_view s)
{
   std::string out(s);
   for (auto& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
   }
   return out;
}
} // namespace detail

/// Team identity: the trimmed name as written, compared case-insensitively.
class TeamId
{
  public:
   TeamId() = default;
   explicit TeamId(std::string_view name) : name_(detail::trim(name)), key_(detail::ascii_lower(name_))
   {
      if (name_.empty()) throw ValidationError(0, "team name is empty");
   }

   const std::string& name() const noexcept { return name_; }
   /// Lower-cased form used for equality, ordering and hashing.
   const std::string& key() const noexcept { return key_; }

   friend bool operator==(const TeamId& a, const TeamId& b) noexcept { return a.key_ == b.key_; }
   friend std::strong_ordering operator<=>(const TeamId& a, const TeamId& b) noexcept { return a.key_ <=> b.key_; }

  private:
   std::string name_;
   std::string key_;
};

/// One edition of a competition. The sport is carried so a single corpus can
/// hold several sports.
struct EditionId
{
   std::string sport;
   std::string competition;
   int year = 0;

   friend bool operator==(const EditionId&, const EditionId&) = default;
   friend auto operator<=>(const EditionId&, const EditionId&) = default;
};

enum class Stage
{
   Group,
   RoundOf16,
   Quarterfinal,
   Semifinal,
   Final,
   Other,
};

constexpr std::string_view to_string(Stage s) noexcept
{
   switch (s) {
   case Stage::Group: return "Group";
   case Stage::RoundOf16: return "RoundOf16";
   case Stage::Quarterfinal: return "Quarterfinal";
   case Stage::Semifinal: return "Semifinal";
   case Stage::Final: return "Final";
   case Stage::Other: return "Other";
   }
   return "Other";
}

inline std::optional<Stage> parse_stage(std::string_view text)
{
   const auto key = detail::ascii_lower(detail::trim(text));
   if (key == "group") return Stage::Group;
   if (key == "roundof16") return Stage::RoundOf16;
   if (key == "quarterfinal") return Stage::Quarterfinal;
   if (key == "semifinal") return Stage::Semifinal;
   if (key == "final") return Stage::Final;
   if (key == "other") return Stage::Other;
   return std::nullopt;
}

struct MatchRecord
{
   EditionId edition;
   TeamId team_i;
   TeamId team_j;
   int score_i = 0;
   int score_j = 0;
   Stage stage = Stage::Group;

   bool is_draw() const noexcept { return score_i == score_j; }

   /// True when `team` won or drew this match. `team` must be one of the two sides.
   bool won_or_drew(const TeamId& team) const noexcept
   {
      return team == team_i ? score_i >= score_j : score_j >= score_i;
   }

   friend bool operator==(const MatchRecord& a, const MatchRecord& b) noexcept
   {
      return a.edition == b.edition && a.team_i == b.team_i && a.team_j == b.team_j && a.score_i == b.score_i &&
             a.score_j == b.score_j && a.stage == b.stage;
   }
};

/// Checks the per-record invariants. `line` is reported in the error (0 if unknown).
inline void validate_record(const MatchRecord& r, std::size_t line = 0)
{
   if (r.team_i.name().empty() || r.team_j.name().empty()) throw ValidationError(line, "team name is empty");
   if (r.team_i == r.team_j) throw ValidationError(line, "team_i equals team_j (" + r.team_i.name() + ")");
   if (r.score_i < 0 || r.score_j < 0) throw ValidationError(line, "negative score");
   if (r.edition.year <= 0) throw ValidationError(line, "edition year must be positive");
}

/// Match records grouped by edition. Editions keep their first-appearance
/// order; records keep file order within an edition.
class MatchScoreDataset
{
  public:
   MatchScoreDataset() = default;

   explicit MatchScoreDataset(std::vector<MatchRecord> records, const std::vector<std::size_t>& lines = {})
   {
      for (std::size_t k = 0; k < records.size(); ++k) {
         const auto line = k < lines.size() ? lines[k] : 0;
         validate_record(records[k], line);
         auto it = std::find(editions_.begin(), editions_.end(), records[k].edition);
         std::size_t slot = static_cast<std::size_t>(it - editions_.begin());
         if (it == editions_.end()) {
            editions_.push_back(records[k].edition);
            groups_.emplace_back();
         }
         for (const auto& prev : groups_[slot]) {
            if (prev == records[k]) throw ValidationError(line, "duplicate match record");
         }
         groups_[slot].push_back(std::move(records[k]));
      }
   }

   /// Editions in first-appearance order.
   const std::vector<EditionId>& editions() const noexcept { return editions_; }

   /// Editions of one sport sorted chronologically (year, then competition).
   std::vector<EditionId> chronological(std::string_view sport) const
   {
      std::vector<EditionId> out;
      for (const auto& e : editions_) {
         if (e.sport == sport) out.push_back(e);
      }
      std::sort(out.begin(), out.end(),
                [](const EditionId& a, const EditionId& b) { return std::tie(a.year, a.competition) < std::tie(b.year, b.competition); });
      return out;
   }

   const std::vector<MatchRecord>& matches(const EditionId& e) const
   {
      static const std::vector<MatchRecord> none;
      auto it = std::find(editions_.begin(), editions_.end(), e);
      return it == editions_.end() ? none : groups_[static_cast<std::size_t>(it - editions_.begin())];
   }

   /// Sports in first-appearance order.
   std::vector<std::string> sports() const
   {
      std::vector<std::string> out;
      for (const auto& e : editions_) {
         if (std::find(out.begin(), out.end(), e.sport) == out.end()) out.push_back(e.sport);
      }
      return out;
   }

   /// All records, edition by edition.
   std::vector<MatchRecord> records() const
   {
      std::vector<MatchRecord> out;
      for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
      return out;
   }

   std::size_t size() const noexcept
   {
      std::size_t n = 0;
      for (const auto& g : groups_) n += g.size();
      return n;
   }

   bool empty() const noexcept { return editions_.empty(); }

   /// Subset holding only the given sport.
   MatchScoreDataset sport(std::string_view name) const
   {
      MatchScoreDataset out;
      for (std::size_t k = 0; k < editions_.size(); ++k) {
         if (editions_[k].sport != name) continue;
         out.editions_.push_back(editions_[k]);
         out.groups_.push_back(groups_[k]);
      }
      return out;
   }

   friend bool operator==(const MatchScoreDataset&, const MatchScoreDataset&) = default;

  private:
   std::vector<EditionId> editions_;
   std::vector<std::vector<MatchRecord>> groups_;
};

struct TeamTally
{
   TeamId team;
   int played = 0;
   int wins = 0;
   int draws = 0;
   int losses = 0;
   long total_score = 0;

   friend bool operator==(const TeamTally&, const TeamTally&) = default;
};

/// Per-edition ranking; entries[0] is position 1 (strongest).
struct EditionRanking
{
   EditionId edition;
   std::vector<TeamTally> entries;

   std::size_t size() const noexcept { return entries.size(); }
   const TeamId& team_at(std::size_t k) const { return entries[k].team; }

   friend bool operator==(const EditionRanking&, const EditionRanking&) = default;
};

struct WeightedEntry
{
   TeamId team;
   double weight = 0.0;

   friend bool operator==(const WeightedEntry&, const WeightedEntry&) = default;
};

/// Decay-weighted historical ranking over every team seen up to `up_to`.
struct WeightedRanking
{
   EditionId up_to;
   std::vector<WeightedEntry> entries;
   double lambda = 1.0;

   std::size_t size() const noexcept { return entries.size(); }
   const TeamId& team_at(std::size_t k) const { return entries[k].team; }

   friend bool operator==(const WeightedRanking&, const WeightedRanking&) = default;
};

struct EditionUas
{
   EditionId edition;
   std::optional<double> uas; ///< empty when no match involved a weak team
   std::size_t weak_matches = 0;
   std::size_t weak_successes = 0;

   friend bool operator==(const EditionUas&, const EditionUas&) = default;
};

struct UasReport
{
   std::string sport;
   double lambda = 1.0;
   double tau = 1.0;
   std::vector<EditionUas> per_edition; ///< editions h = 2..|E| in chronological order
   std::optional<double> average;
   std::optional<double> aggregated;

   friend bool operator==(const UasReport&, const UasReport&) = default;
};

/// Sports x factors matrix with optional cells.
struct FactorsTable
{
   std::vector<std::string> sports;
   std::vector<std::string> factors;
   std::vector<std::vector<Cell>> cells; ///< cells[sport][factor]

   std::size_t rows() const noexcept { return sports.size(); }
   std::size_t cols() const noexcept { return factors.size(); }

   std::optional<std::size_t> sport_index(std::string_view name) const
   {
      const auto key = detail::ascii_lower(name);
      for (std::size_t k = 0; k < sports.size(); ++k) {
         if (detail::ascii_lower(sports[k]) == key) return k;
      }
      return std::nullopt;
   }

   std::optional<std::size_t> factor_index(std::string_view name) const
   {
      const auto key = detail::ascii_lower(name);
      for (std::size_t k = 0; k < factors.size(); ++k) {
         if (detail::ascii_lower(factors[k]) == key) return k;
      }
      return std::nullopt;
   }

   Cell at(std::string_view sport, std::string_view factor) const
   {
      const auto r = sport_index(sport);
      const auto c = factor_index(factor);
      if (!r || !c) throw Error(ErrorKind::Validation, "no cell " + std::string(sport) + "/" + std::string(factor));
      return cells[*r][*c];
   }

   std::vector<Cell> column(std::size_t c) const
   {
      std::vector<Cell> out;
      out.reserve(rows());
      for (const auto& row : cells) out.push_back(row.at(c));
      return out;
   }

   std::vector<Cell> column(std::string_view factor) const
   {
      const auto c = factor_index(factor);
      if (!c) throw Error(ErrorKind::Validation, "no column " + std::string(factor));
      return column(*c);
   }

   void set_column(std::size_t c, const std::vector<Cell>& values)
   {
      for (std::size_t r = 0; r < rows(); ++r) cells[r][c] = values.at(r);
   }

   friend bool operator==(const FactorsTable&, const FactorsTable&) = default;
};

/// Per-sport quantities some factors are derived from (ball weight, player ball
/// possession, player experience, scoring frequency).
struct CompanionFactors
{
   std::vector<std::string> sports;
   std::vector<Cell> ball_weight;
   std::vector<Cell> ball_possession;
   std::vector<Cell> experience;
   std::vector<Cell> scoring_frequency;

   friend bool operator==(const CompanionFactors&, const CompanionFactors&) = default;
};

} // namespace underdog
