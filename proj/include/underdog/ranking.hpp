#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog
{

/// Strict "stronger than" order on tallies: more matches played, more wins,
/// more draws, fewer losses, higher total score, then team name ascending
/// (case-insensitive). Total on distinct teams.
inline bool ranks_above(const TeamTally& a, const TeamTally& b) noexcept
{
   if (a.played != b.played) return a.played > b.played;
   if (a.wins != b.wins) return a.wins > b.wins;
   if (a.draws != b.draws) return a.draws > b.draws;
   if (a.losses != b.losses) return a.losses < b.losses;
   if (a.total_score != b.total_score) return a.total_score > b.total_score;
   return a.team < b.team;
}

/// Win/draw/loss and score tallies for every team of one edition, in
/// first-appearance order.
inline std::vector<TeamTally> tally_edition(std::span<const MatchRecord> matches)
{
   std::vector<TeamTally> tallies;
   std::map<std::string, std::size_t> slot;
   const auto get = [&](const TeamId& t) {
      auto [it, fresh] = slot.try_emplace(t.key(), tallies.size());
      if (fresh) tallies.push_back({t});
      return it->second;
   };
   for (const auto& m : matches) {
      const auto ia = get(m.team_i);
      const auto ib = get(m.team_j);
      auto& a = tallies[ia];
      auto& b = tallies[ib];
      a.played += 1;
      a.total_score += m.score_i;
      b.played += 1;
      b.total_score += m.score_j;
      if (m.score_i > m.score_j) {
         a.wins += 1;
         b.losses += 1;
      }
      else if (m.score_i < m.score_j) {
         a.losses += 1;
         b.wins += 1;
      }
      else {
         a.draws += 1;
         b.draws += 1;
      }
   }
   return tallies;
}

inline EditionRanking compute_edition_ranking(const MatchScoreDataset& data, const EditionId& edition)
{
   const auto& matches = data.matches(edition);
   if (matches.empty())
      throw Error(ErrorKind::EmptyEdition, edition.sport + " " + edition.competition + " " + std::to_string(edition.year));
   EditionRanking out{edition, tally_edition(matches)};
   std::sort(out.entries.begin(), out.entries.end(), ranks_above);
   return out;
}

/// Rankings for every edition of `sport`, oldest first.
inline std::vector<EditionRanking> compute_edition_rankings(const MatchScoreDataset& data, std::string_view sport)
{
   std::vector<EditionRanking> out;
   for (const auto& e : data.chronological(sport)) out.push_back(compute_edition_ranking(data, e));
   return out;
}

struct WeightedOptions
{
   /// Keep lambda * previous weight for teams missing from an edition instead
   /// of resetting them to zero.
   bool carry_absent = false;
};

inline void check_lambda(double lambda)
{
   if (!(lambda >= 0.0 && lambda <= 1.0))
      throw Error(ErrorKind::InvalidLambda, "lambda must lie in [0, 1], got " + std::to_string(lambda));
}

namespace detail
{
inline WeightedRanking sorted_weights(const EditionId& up_to, const std::map<std::string, WeightedEntry>& weights,
                                      double lambda)
{
   WeightedRanking out{up_to, {}, lambda};
   out.entries.reserve(weights.size());
   for (const auto& [key, entry] : weights) out.entries.push_back(entry);
   std::stable_sort(out.entries.begin(), out.entries.end(), [](const WeightedEntry& a, const WeightedEntry& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.team < b.team;
   });
   return out;
}
} // namespace detail

/// Weighted rankings after each edition: element h holds the ranking over
/// editions 1..h+1. Each edition's contribution for a participating team is
/// N_e - position; earlier contributions are multiplied by lambda per edition.
inline std::vector<WeightedRanking> weighted_ranking_history(std::span<const EditionRanking> rankings, double lambda,
                                                             WeightedOptions opts = {})
{
   check_lambda(lambda);
   if (rankings.empty()) throw Error(ErrorKind::EmptyEdition, "no editions to aggregate");
   std::map<std::string, WeightedEntry> weights;
   std::vector<WeightedRanking> history;
   history.reserve(rankings.size());
   for (const auto& r : rankings) {
      std::map<std::string, double> current;
      const auto n = static_cast<double>(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) current[r.team_at(k).key()] = n - static_cast<double>(k + 1);

      for (auto& [key, entry] : weights) {
         auto it = current.find(key);
         if (it != current.end())
            entry.weight = it->second + lambda * entry.weight;
         else
            entry.weight = opts.carry_absent ? lambda * entry.weight : 0.0;
      }
      for (std::size_t k = 0; k < r.size(); ++k) {
         const auto& team = r.team_at(k);
         if (!weights.contains(team.key())) weights.emplace(team.key(), WeightedEntry{team, current[team.key()]});
      }
      history.push_back(detail::sorted_weights(r.edition, weights, lambda));
   }
   return history;
}

inline WeightedRanking compute_weighted_ranking(std::span<const EditionRanking> rankings, double lambda,
                                                WeightedOptions opts = {})
{
   return weighted_ranking_history(rankings, lambda, opts).back();
}

/// 1-based position of `team`.
template <class Ranking>
std::size_t rank_position(const TeamId& team, const Ranking& ranking)
{
   for (std::size_t k = 0; k < ranking.size(); ++k) {
      if (ranking.team_at(k) == team) return k + 1;
   }
   throw Error(ErrorKind::TeamNotFound, team.name());
}

template <class Ranking>
std::size_t rank_difference(const TeamId& i, const TeamId& j, const Ranking& ranking)
{
   const auto a = rank_position(i, ranking);
   const auto b = rank_position(j, ranking);
   return a > b ? a - b : b - a;
}

} // namespace underdog
