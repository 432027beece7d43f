#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog::sim
{

/// splitmix64, used to expand a 64-bit seed into generator state.
inline std::uint64_t splitmix64(std::uint64_t& x) noexcept
{
   std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
   z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
   return z ^ (z >> 31);
}

/// xoshiro256** 1.0 (Blackman & Vigna). Identical output on every platform.
class Xoshiro256
{
  public:
   using result_type = std::uint64_t;

   explicit Xoshiro256(std::uint64_t seed) noexcept
   {
      for (auto& w : s_) w = splitmix64(seed);
   }

   static constexpr result_type min() noexcept { return 0; }
   static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

   result_type operator()() noexcept
   {
      const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
      const std::uint64_t t = s_[1] << 17;
      s_[2] ^= s_[0];
      s_[3] ^= s_[1];
      s_[1] ^= s_[2];
      s_[0] ^= s_[3];
      s_[2] ^= t;
      s_[3] = rotl(s_[3], 45);
      return result;
   }

   /// Uniform double in [0, 1) from the top 53 bits.
   double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

   /// Advances by 2^128 calls; used to give every edition its own stream.
   void jump() noexcept
   {
      static constexpr std::array<std::uint64_t, 4> table = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                                             0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
      std::array<std::uint64_t, 4> acc{};
      for (auto word : table) {
         for (int b = 0; b < 64; ++b) {
            if (word & (std::uint64_t{1} << b))
               for (int k = 0; k < 4; ++k) acc[k] ^= s_[k];
            (*this)();
         }
      }
      s_ = acc;
   }

  private:
   static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
   std::array<std::uint64_t, 4> s_{};
};

enum class TournamentFormat
{
   RoundRobin,
   GroupsPlusKnockout,
};

struct SimConfig
{
   int n_teams = 8;
   int n_editions = 4;
   std::vector<double> strengths;   ///< per team; empty means n_teams, n_teams - 1, ..., 1
   double upset_probability = 0.0;  ///< chance the weaker side wins a decisive match
   double draw_probability = 0.0;   ///< chance of a draw (group / round-robin matches only)
   TournamentFormat format = TournamentFormat::RoundRobin;
   std::uint64_t seed = 0;
   double participation = 1.0;      ///< round robin: chance each team enters an edition
   std::string sport = "Synthetic";
   std::string competition = "Simulated Cup";
   int first_year = 2000;
   int year_step = 4;
};

inline void validate(const SimConfig& c)
{
   const auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidConfig, m); };
   if (c.n_teams < 4) fail("n_teams must be at least 4");
   if (c.n_editions < 2) fail("n_editions must be at least 2");
   if (!c.strengths.empty() && c.strengths.size() != static_cast<std::size_t>(c.n_teams)) fail("one strength per team");
   for (double s : c.strengths)
      if (!std::isfinite(s)) fail("strengths must be finite");
   if (!(c.upset_probability >= 0.0 && c.upset_probability <= 0.5)) fail("upset_probability must lie in [0, 0.5]");
   if (!(c.draw_probability >= 0.0 && c.draw_probability < 1.0)) fail("draw_probability must lie in [0, 1)");
   if (c.upset_probability + c.draw_probability > 1.0) fail("upset_probability + draw_probability exceeds 1");
   if (!(c.participation > 0.0 && c.participation <= 1.0)) fail("participation must lie in (0, 1]");
   if (c.first_year <= 0 || c.year_step <= 0) fail("years must be positive");
   if (c.format == TournamentFormat::GroupsPlusKnockout) {
      const int groups = c.n_teams / 4;
      if (c.n_teams % 4 != 0 || groups < 2 || (groups & (groups - 1)) != 0)
         fail("groups format needs n_teams = 4 * 2^k with k >= 1");
   }
}

inline std::string team_name(int index)
{
   char buf[16];
   std::snprintf(buf, sizeof buf, "Team%03d", index + 1);
   return buf;
}

namespace detail
{
// Small nonnegative integer, P(k) = 2^-(k+1), capped.
inline int geometric(Xoshiro256& rng, int cap = 9)
{
   int k = 0;
   while (k < cap && rng.uniform() < 0.5) ++k;
   return k;
}

struct Played
{
   MatchRecord record;
   bool upset = false;
};

class EditionBuilder
{
  public:
   EditionBuilder(const SimConfig& cfg, const std::vector<double>& strength, const EditionId& edition, Xoshiro256& stream)
      : cfg_(cfg), strength_(strength), edition_(edition), stream_(stream)
   {}

   /// One match; every call consumes exactly one value of the edition stream.
   int play(int a, int b, Stage stage, bool allow_draw)
   {
      Xoshiro256 rng(stream_());
      const double u_draw = rng.uniform();
      const double u_upset = rng.uniform();
      const bool a_stronger = strength_[a] > strength_[b] || (strength_[a] == strength_[b] && a < b);
      const int strong = a_stronger ? a : b;
      const int weak = a_stronger ? b : a;

      MatchRecord m;
      m.edition = edition_;
      m.team_i = TeamId(team_name(a));
      m.team_j = TeamId(team_name(b));
      m.stage = stage;
      int winner = -1;
      if (allow_draw && u_draw < cfg_.draw_probability) {
         const int g = geometric(rng);
         m.score_i = g;
         m.score_j = g;
      }
      else {
         const bool upset = u_upset < cfg_.upset_probability;
         winner = upset ? weak : strong;
         const int lose = geometric(rng);
         const int win = lose + 1 + geometric(rng);
         m.score_i = winner == a ? win : lose;
         m.score_j = winner == a ? lose : win;
         upsets_ += upset ? 1 : 0;
      }
      matches_.push_back(std::move(m));
      return winner;
   }

   std::vector<MatchRecord>& matches() noexcept { return matches_; }
   std::size_t upsets() const noexcept { return upsets_; }

  private:
   const SimConfig& cfg_;
   const std::vector<double>& strength_;
   EditionId edition_;
   Xoshiro256& stream_;
   std::vector<MatchRecord> matches_;
   std::size_t upsets_ = 0;
};

inline Stage knockout_stage(std::size_t remaining)
{
   switch (remaining) {
   case 16: return Stage::RoundOf16;
   case 8: return Stage::Quarterfinal;
   case 4: return Stage::Semifinal;
   case 2: return Stage::Final;
   default: return Stage::Other;
   }
}
} // namespace detail

struct SimOutput
{
   MatchScoreDataset corpus;
   std::size_t upsets = 0; ///< decisive matches won by the weaker side
};

/// Corpus plus the number of upsets drawn. Edition h uses the base generator
/// advanced by h + 1 jumps; each match then draws one seed from that stream.
inline SimOutput generate(const SimConfig& cfg)
{
   validate(cfg);
   std::vector<double> strength = cfg.strengths;
   if (strength.empty())
      for (int k = 0; k < cfg.n_teams; ++k) strength.push_back(static_cast<double>(cfg.n_teams - k));

   Xoshiro256 base(cfg.seed);
   std::vector<MatchRecord> all;
   std::size_t upsets = 0;
   for (int h = 0; h < cfg.n_editions; ++h) {
      base.jump();
      Xoshiro256 stream = base;
      const EditionId edition{cfg.sport, cfg.competition, cfg.first_year + h * cfg.year_step};
      detail::EditionBuilder builder(cfg, strength, edition, stream);

      if (cfg.format == TournamentFormat::RoundRobin) {
         std::vector<int> teams;
         for (int k = 0; k < cfg.n_teams; ++k)
            if (stream.uniform() < cfg.participation) teams.push_back(k);
         for (int k = 0; teams.size() < 2; ++k)
            if (std::find(teams.begin(), teams.end(), k) == teams.end()) teams.insert(std::upper_bound(teams.begin(), teams.end(), k), k);
         for (std::size_t a = 0; a < teams.size(); ++a)
            for (std::size_t b = a + 1; b < teams.size(); ++b) builder.play(teams[a], teams[b], Stage::Group, true);
      }
      else {
         std::vector<int> order(static_cast<std::size_t>(cfg.n_teams));
         for (int k = 0; k < cfg.n_teams; ++k) order[static_cast<std::size_t>(k)] = k;
         for (std::size_t k = order.size() - 1; k > 0; --k) {
            const auto j = static_cast<std::size_t>(stream() % (k + 1));
            std::swap(order[k], order[j]);
         }
         const std::size_t groups = order.size() / 4;
         std::vector<int> qualified;
         for (std::size_t g = 0; g < groups; ++g) {
            std::map<int, std::tuple<int, int, int>> table; // team -> (points, goal diff, -index)
            for (std::size_t a = 0; a < 4; ++a) {
               const int ta = order[g * 4 + a];
               table[ta] = {0, 0, -ta};
            }
            for (std::size_t a = 0; a < 4; ++a)
               for (std::size_t b = a + 1; b < 4; ++b) {
                  const int ta = order[g * 4 + a];
                  const int tb = order[g * 4 + b];
                  const int w = builder.play(ta, tb, Stage::Group, true);
                  const auto& m = builder.matches().back();
                  std::get<1>(table[ta]) += m.score_i - m.score_j;
                  std::get<1>(table[tb]) += m.score_j - m.score_i;
                  if (w < 0) {
                     std::get<0>(table[ta]) += 1;
                     std::get<0>(table[tb]) += 1;
                  }
                  else {
                     std::get<0>(table[w]) += 3;
                  }
               }
            std::vector<std::pair<std::tuple<int, int, int>, int>> standing;
            for (const auto& [t, key] : table) standing.push_back({key, t});
            std::sort(standing.begin(), standing.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
            qualified.push_back(standing[0].second);
            qualified.push_back(standing[1].second);
         }
         // Bracket: winner of group g meets runner-up of group g ^ 1.
         std::vector<int> round;
         for (std::size_t g = 0; g < groups; g += 2) {
            round.push_back(qualified[2 * g]);
            round.push_back(qualified[2 * (g + 1) + 1]);
            round.push_back(qualified[2 * (g + 1)]);
            round.push_back(qualified[2 * g + 1]);
         }
         while (round.size() >= 2) {
            const Stage stage = detail::knockout_stage(round.size());
            std::vector<int> next;
            for (std::size_t k = 0; k + 1 < round.size(); k += 2) next.push_back(builder.play(round[k], round[k + 1], stage, false));
            round = std::move(next);
         }
      }
      upsets += builder.upsets();
      auto& ms = builder.matches();
      all.insert(all.end(), std::make_move_iterator(ms.begin()), std::make_move_iterator(ms.end()));
   }
   return {MatchScoreDataset(std::move(all)), upsets};
}

inline MatchScoreDataset generate_corpus(const SimConfig& cfg) { return generate(cfg).corpus; }

/// Exact counts behind an aggregated underdog score.
struct OracleCounts
{
   std::size_t successes = 0;
   std::size_t matches = 0;

   double ratio() const
   {
      if (matches == 0) throw Error(ErrorKind::ZeroDenominator, "no weak-team matches");
      return static_cast<double>(successes) / static_cast<double>(matches);
   }

   friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

/// Reference count by direct scanning, deliberately written without the
/// ranking/underdog modules: tallies per team by rescanning the match list,
/// positions by counting teams ordered ahead, weights by the literal recursion
/// (absent teams reset to 0, unseen teams below every known team in name order).
inline OracleCounts oracle_counts(const MatchScoreDataset& corpus, std::string_view sport, double lambda, double tau)
{
   const auto editions = corpus.chronological(sport);
   if (editions.size() < 2) throw Error(ErrorKind::NoPriorRanking, "oracle needs at least 2 editions");
   const auto lower = [](const std::string& s) { return underdog::detail::ascii_lower(s); };

   std::map<std::string, double> weight; // every team seen so far
   OracleCounts counts;
   for (std::size_t h = 0; h < editions.size(); ++h) {
      const auto& ms = corpus.matches(editions[h]);

      std::vector<std::string> teams;
      for (const auto& m : ms)
         for (const auto* t : {&m.team_i, &m.team_j})
            if (std::find(teams.begin(), teams.end(), lower(t->name())) == teams.end()) teams.push_back(lower(t->name()));

      if (h > 0) {
         const auto position = [&](const std::string& t) -> std::size_t {
            if (weight.contains(t)) {
               std::size_t ahead = 0;
               for (const auto& [o, w] : weight)
                  if (w > weight.at(t) || (w == weight.at(t) && o < t)) ++ahead;
               return ahead + 1;
            }
            std::size_t ahead = weight.size();
            for (const auto& o : teams)
               if (!weight.contains(o) && o < t) ++ahead;
            return ahead + 1;
         };
         for (const auto& m : ms) {
            const auto pi = position(lower(m.team_i.name()));
            const auto pj = position(lower(m.team_j.name()));
            const double diff = pi > pj ? double(pi - pj) : double(pj - pi);
            if (diff < tau) continue;
            counts.matches += 1;
            const bool i_weak = pi > pj;
            const int weak_score = i_weak ? m.score_i : m.score_j;
            const int strong_score = i_weak ? m.score_j : m.score_i;
            if (weak_score >= strong_score) counts.successes += 1;
         }
      }

      // Edition ranking: position = 1 + number of teams ordered ahead.
      struct Line
      {
         int played = 0, wins = 0, draws = 0, losses = 0;
         long goals = 0;
      };
      std::map<std::string, Line> line;
      for (const auto& t : teams) {
         Line l;
         for (const auto& m : ms) {
            const bool as_i = lower(m.team_i.name()) == t;
            const bool as_j = lower(m.team_j.name()) == t;
            if (!as_i && !as_j) continue;
            const int own = as_i ? m.score_i : m.score_j;
            const int opp = as_i ? m.score_j : m.score_i;
            l.played++;
            l.goals += own;
            if (own > opp) l.wins++;
            else if (own == opp) l.draws++;
            else l.losses++;
         }
         line[t] = l;
      }
      const auto key = [&](const std::string& t) {
         const auto& l = line.at(t);
         return std::make_tuple(-l.played, -l.wins, -l.draws, l.losses, -l.goals, t);
      };
      std::map<std::string, double> next;
      const double n = static_cast<double>(teams.size());
      for (const auto& t : teams) {
         std::size_t ahead = 0;
         for (const auto& o : teams)
            if (key(o) < key(t)) ++ahead;
         const double prev = weight.contains(t) ? weight.at(t) : 0.0;
         next[t] = (n - static_cast<double>(ahead + 1)) + (h == 0 ? 0.0 : lambda * prev);
      }
      for (auto& [t, w] : weight) w = next.contains(t) ? next.at(t) : 0.0;
      for (const auto& [t, w] : next) weight[t] = w;
   }
   return counts;
}

inline double oracle_uas(const MatchScoreDataset& corpus, std::string_view sport, double lambda, double tau)
{
   return oracle_counts(corpus, sport, lambda, tau).ratio();
}

} // namespace underdog::sim
