#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "underdog/bundled_data.hpp"
#include "underdog/csv.hpp"
#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog
{

enum class MatchFormat
{
   CSV,
   JSON,
};

inline constexpr std::string_view match_csv_header = "sport,competition,edition_year,stage,team_i,team_j,score_i,score_j";

/// Competition and edition years of one sport.
struct CorpusManifest
{
   std::string sport;
   std::string competition;
   std::vector<int> edition_years;

   friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

inline void validate_manifest(const CorpusManifest& m)
{
   if (m.edition_years.empty()) throw ValidationError(0, "manifest for " + m.sport + " has no editions");
   for (std::size_t k = 1; k < m.edition_years.size(); ++k) {
      if (m.edition_years[k] <= m.edition_years[k - 1])
         throw ValidationError(0, "manifest years for " + m.sport + " are not strictly increasing");
   }
}

/// Published threshold and average underdog scores for a list of decay factors.
struct UasTableRow
{
   std::string sport;
   double tau = 0.0;
   std::vector<double> uas; ///< one value per entry of UasTable::lambdas

   friend bool operator==(const UasTableRow&, const UasTableRow&) = default;
};

struct UasTable
{
   std::vector<double> lambdas;
   std::vector<UasTableRow> rows;

   const UasTableRow* find(std::string_view sport) const
   {
      const auto key = detail::ascii_lower(sport);
      for (const auto& r : rows) {
         if (detail::ascii_lower(r.sport) == key) return &r;
      }
      return nullptr;
   }

   friend bool operator==(const UasTable&, const UasTable&) = default;
};

struct BundledFactors
{
   FactorsTable normalized;
   FactorsTable raw;
   CompanionFactors companions;
};

// ---------------------------------------------------------------- matches

namespace detail
{
inline MatchRecord make_record(std::string_view sport, std::string_view competition, long long year,
                               std::string_view stage, std::string_view team_i, std::string_view team_j,
                               long long score_i, long long score_j, std::size_t line)
{
   if (detail::trim(sport).empty()) throw ValidationError(line, "sport is empty");
   if (detail::trim(competition).empty()) throw ValidationError(line, "competition is empty");
   if (year <= 0) throw ValidationError(line, "edition_year must be positive");
   if (score_i < 0 || score_j < 0) throw ValidationError(line, "negative score");
   const auto st = parse_stage(stage);
   if (!st) throw ValidationError(line, "unknown stage '" + std::string(stage) + "'");
   if (detail::trim(team_i).empty() || detail::trim(team_j).empty()) throw ValidationError(line, "team name is empty");
   MatchRecord r;
   r.edition = {detail::trim(sport), detail::trim(competition), static_cast<int>(year)};
   r.team_i = TeamId(team_i);
   r.team_j = TeamId(team_j);
   r.score_i = static_cast<int>(score_i);
   r.score_j = static_cast<int>(score_j);
   r.stage = *st;
   validate_record(r, line);
   return r;
}
} // namespace detail

inline MatchScoreDataset parse_matches_csv(std::string_view text)
{
   const auto rows = csv::parse(text);
   if (rows.empty()) throw ParseError(0, "empty match file");
   const auto& header = rows.front();
   if (csv::join(header.fields) != match_csv_header)
      throw ParseError(header.line, "expected header '" + std::string(match_csv_header) + "'");

   std::vector<MatchRecord> records;
   std::vector<std::size_t> lines;
   for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto& row = rows[k];
      const auto& f = row.fields;
      if (f.size() != 8) throw ParseError(row.line, "expected 8 fields, got " + std::to_string(f.size()));
      const auto year = csv::parse_int(f[2]);
      if (!year) throw ParseError(row.line, "edition_year is not an integer");
      const auto si = csv::parse_int(f[6]);
      const auto sj = csv::parse_int(f[7]);
      if (!si || !sj) throw ParseError(row.line, "score is not an integer");
      records.push_back(detail::make_record(f[0], f[1], *year, f[3], f[4], f[5], *si, *sj, row.line));
      lines.push_back(row.line);
   }
   return MatchScoreDataset(std::move(records), lines);
}

/// Accepts either a top-level array of match objects or {"matches": [...]}.
/// Errors report the 1-based record index in place of a line number.
inline MatchScoreDataset parse_matches_json(std::string_view text)
{
   nlohmann::json doc;
   try {
      doc = nlohmann::json::parse(text);
   }
   catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, e.what());
   }
   const nlohmann::json* arr = &doc;
   if (doc.is_object() && doc.contains("matches")) arr = &doc["matches"];
   if (!arr->is_array()) throw ParseError(0, "expected an array of matches");

   std::vector<MatchRecord> records;
   std::vector<std::size_t> lines;
   std::size_t idx = 0;
   for (const auto& m : *arr) {
      ++idx;
      try {
         const auto year = m.at("edition_year").get<long long>();
         const auto si = m.at("score_i").get<long long>();
         const auto sj = m.at("score_j").get<long long>();
         records.push_back(detail::make_record(m.at("sport").get<std::string>(), m.at("competition").get<std::string>(),
                                               year, m.at("stage").get<std::string>(),
                                               m.at("team_i").get<std::string>(), m.at("team_j").get<std::string>(),
                                               si, sj, idx));
      }
      catch (const nlohmann::json::exception& e) {
         throw ParseError(idx, e.what());
      }
      lines.push_back(idx);
   }
   return MatchScoreDataset(std::move(records), lines);
}

inline MatchScoreDataset load_matches(const std::string& path, MatchFormat format)
{
   const auto text = csv::read_file(path);
   return format == MatchFormat::CSV ? parse_matches_csv(text) : parse_matches_json(text);
}

/// Picks the format from the file extension (".json" is JSON, anything else CSV).
inline MatchScoreDataset load_matches(const std::string& path)
{
   const auto ext = detail::ascii_lower(std::filesystem::path(path).extension().string());
   return load_matches(path, ext == ".json" ? MatchFormat::JSON : MatchFormat::CSV);
}

inline std::string write_matches_csv(const MatchScoreDataset& data)
{
   std::string out(match_csv_header);
   out.push_back('\n');
   for (const auto& e : data.editions()) {
      for (const auto& m : data.matches(e)) {
         out += csv::join({e.sport, e.competition, std::to_string(e.year), std::string(to_string(m.stage)),
                           m.team_i.name(), m.team_j.name(), std::to_string(m.score_i), std::to_string(m.score_j)});
         out.push_back('\n');
      }
   }
   return out;
}

inline std::string write_matches_json(const MatchScoreDataset& data)
{
   nlohmann::ordered_json arr = nlohmann::ordered_json::array();
   for (const auto& e : data.editions()) {
      for (const auto& m : data.matches(e)) {
         arr.push_back({{"sport", e.sport},
                        {"competition", e.competition},
                        {"edition_year", e.year},
                        {"stage", std::string(to_string(m.stage))},
                        {"team_i", m.team_i.name()},
                        {"team_j", m.team_j.name()},
                        {"score_i", m.score_i},
                        {"score_j", m.score_j}});
      }
   }
   return arr.dump(2) + "\n";
}

// ---------------------------------------------------------------- tables

inline FactorsTable parse_factors_table(std::string_view text)
{
   const auto rows = csv::parse(text);
   if (rows.empty()) throw ParseError(0, "empty factors table");
   const auto& header = rows.front().fields;
   if (header.size() < 2 || header.front() != "sport") throw ParseError(rows.front().line, "expected 'sport' first column");
   FactorsTable t;
   t.factors.assign(header.begin() + 1, header.end());
   for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto& row = rows[k];
      if (row.fields.size() != header.size())
         throw ParseError(row.line, "expected " + std::to_string(header.size()) + " fields");
      t.sports.push_back(detail::trim(row.fields[0]));
      std::vector<Cell> cells;
      for (std::size_t c = 1; c < row.fields.size(); ++c) cells.push_back(csv::parse_cell(row.fields[c], row.line));
      t.cells.push_back(std::move(cells));
   }
   return t;
}

inline std::string write_factors_table(const FactorsTable& t)
{
   std::vector<std::string> header{"sport"};
   header.insert(header.end(), t.factors.begin(), t.factors.end());
   std::string out = csv::join(header) + "\n";
   for (std::size_t r = 0; r < t.rows(); ++r) {
      std::vector<std::string> f{t.sports[r]};
      for (const auto& c : t.cells[r]) f.push_back(csv::format_cell(c));
      out += csv::join(f) + "\n";
   }
   return out;
}

inline CompanionFactors parse_companion_factors(std::string_view text)
{
   const auto t = parse_factors_table(text);
   const auto need = [&](std::string_view name) {
      const auto c = t.factor_index(name);
      if (!c) throw ParseError(0, "companion table lacks column " + std::string(name));
      return t.column(*c);
   };
   CompanionFactors out{t.sports, need("BW"), need("PBP"), need("PE"), need("SF")};
   for (const auto* col : {&out.ball_weight, &out.ball_possession, &out.experience, &out.scoring_frequency}) {
      for (const auto& c : *col) {
         if (c && *c <= 0.0) throw ValidationError(0, "companion factors must be positive");
      }
   }
   return out;
}

inline std::string write_companion_factors(const CompanionFactors& c)
{
   FactorsTable t{c.sports, {"BW", "PBP", "PE", "SF"}, {}};
   for (std::size_t r = 0; r < c.sports.size(); ++r)
      t.cells.push_back({c.ball_weight[r], c.ball_possession[r], c.experience[r], c.scoring_frequency[r]});
   return write_factors_table(t);
}

inline UasTable parse_uas_table(std::string_view text)
{
   const auto rows = csv::parse(text);
   if (rows.empty()) throw ParseError(0, "empty UAS table");
   const auto& header = rows.front().fields;
   if (header.size() < 3 || header[0] != "sport" || header[1] != "tau")
      throw ParseError(rows.front().line, "expected header 'sport,tau,uas_lambda_...'");
   UasTable t;
   for (std::size_t c = 2; c < header.size(); ++c) {
      constexpr std::string_view prefix = "uas_lambda_";
      if (!header[c].starts_with(prefix)) throw ParseError(rows.front().line, "bad column " + header[c]);
      const auto lam = csv::parse_double(std::string_view(header[c]).substr(prefix.size()));
      if (!lam) throw ParseError(rows.front().line, "bad lambda in " + header[c]);
      t.lambdas.push_back(*lam);
   }
   for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto& f = rows[k].fields;
      if (f.size() != header.size()) throw ParseError(rows[k].line, "wrong field count");
      UasTableRow row{detail::trim(f[0]), 0.0, {}};
      const auto tau = csv::parse_double(f[1]);
      if (!tau || *tau <= 0.0) throw ParseError(rows[k].line, "tau must be a positive number");
      row.tau = *tau;
      for (std::size_t c = 2; c < f.size(); ++c) {
         const auto v = csv::parse_double(f[c]);
         if (!v) throw ParseError(rows[k].line, "not a number: " + f[c]);
         row.uas.push_back(*v);
      }
      t.rows.push_back(std::move(row));
   }
   return t;
}

inline std::string write_uas_table(const UasTable& t)
{
   std::vector<std::string> header{"sport", "tau"};
   for (double l : t.lambdas) header.push_back("uas_lambda_" + csv::format_exact(l));
   std::string out = csv::join(header) + "\n";
   for (const auto& r : t.rows) {
      std::vector<std::string> f{r.sport, csv::format_exact(r.tau)};
      for (double v : r.uas) f.push_back(csv::format_exact(v));
      out += csv::join(f) + "\n";
   }
   return out;
}

inline std::vector<CorpusManifest> parse_editions(std::string_view text)
{
   const auto rows = csv::parse(text);
   if (rows.empty() || csv::join(rows.front().fields) != "sport,competition,edition_year")
      throw ParseError(rows.empty() ? 0 : rows.front().line, "expected header 'sport,competition,edition_year'");
   std::vector<CorpusManifest> out;
   for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto& f = rows[k].fields;
      if (f.size() != 3) throw ParseError(rows[k].line, "expected 3 fields");
      const auto year = csv::parse_int(f[2]);
      if (!year) throw ParseError(rows[k].line, "edition_year is not an integer");
      if (out.empty() || out.back().sport != f[0] || out.back().competition != f[1]) out.push_back({f[0], f[1], {}});
      out.back().edition_years.push_back(static_cast<int>(*year));
   }
   for (const auto& m : out) validate_manifest(m);
   return out;
}

inline std::string write_editions(const std::vector<CorpusManifest>& manifests)
{
   std::string out = "sport,competition,edition_year\n";
   for (const auto& m : manifests) {
      for (int y : m.edition_years) out += csv::join({m.sport, m.competition, std::to_string(y)}) + "\n";
   }
   return out;
}

// ---------------------------------------------------------------- bundled data

namespace detail
{
/// Reads `name` from `dir` when given, otherwise returns the embedded copy.
inline std::string bundled_text(const std::optional<std::string>& dir, std::string_view name, std::string_view embedded)
{
   if (!dir) return std::string(embedded);
   return csv::read_file((std::filesystem::path(*dir) / name).string());
}
} // namespace detail

/// Normalized and raw factor tables plus the companion quantities.
/// `data_dir` replaces the embedded copies with files of the same name.
inline BundledFactors load_bundled_factors(const std::optional<std::string>& data_dir = std::nullopt)
{
   return {
      parse_factors_table(detail::bundled_text(data_dir, "factors_normalized.csv", bundled::factors_normalized_csv)),
      parse_factors_table(detail::bundled_text(data_dir, "factors_raw.csv", bundled::factors_raw_csv)),
      parse_companion_factors(detail::bundled_text(data_dir, "companion_factors.csv", bundled::companion_factors_csv)),
   };
}

inline UasTable load_bundled_uas(const std::optional<std::string>& data_dir = std::nullopt)
{
   return parse_uas_table(detail::bundled_text(data_dir, "uas_table.csv", bundled::uas_table_csv));
}

inline std::vector<CorpusManifest> load_bundled_editions(const std::optional<std::string>& data_dir = std::nullopt)
{
   return parse_editions(detail::bundled_text(data_dir, "editions.csv", bundled::editions_csv));
}

} // namespace underdog
