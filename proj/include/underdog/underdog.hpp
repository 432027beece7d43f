#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/ranking.hpp"
#include "underdog/types.hpp"

namespace underdog
{

struct RankDiffSummary
{
   std::string sport;
   double min = 0.0;
   double q1 = 0.0;
   double median = 0.0;
   double q3 = 0.0;
   double max = 0.0;
   std::size_t count = 0;

   friend bool operator==(const RankDiffSummary&, const RankDiffSummary&) = default;
};

/// Quantile by linear interpolation between order statistics at (n - 1) * q.
inline double quantile_sorted(std::span<const double> sorted, double q)
{
   if (sorted.empty()) throw Error(ErrorKind::TooFewSamples, "quantile of empty sample");
   const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
   const auto lo = static_cast<std::size_t>(std::floor(h));
   const auto hi = std::min(lo + 1, sorted.size() - 1);
   return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline RankDiffSummary summarize(std::vector<double> values, std::string sport = {})
{
   if (values.empty()) throw Error(ErrorKind::TooFewSamples, "no rank differences");
   std::sort(values.begin(), values.end());
   return {std::move(sport),           values.front(),
           quantile_sorted(values, 0.25), quantile_sorted(values, 0.5),
           quantile_sorted(values, 0.75), values.back(),
           values.size()};
}

/// |c(i, R_e) - c(j, R_e)| for every match of every edition in `rankings`.
inline std::vector<double> rank_differences(const MatchScoreDataset& data, std::span<const EditionRanking> rankings)
{
   std::vector<double> out;
   for (const auto& r : rankings) {
      for (const auto& m : data.matches(r.edition))
         out.push_back(static_cast<double>(rank_difference(m.team_i, m.team_j, r)));
   }
   return out;
}

inline RankDiffSummary rank_diff_distribution(const MatchScoreDataset& data, std::span<const EditionRanking> rankings)
{
   std::string sport = rankings.empty() ? std::string() : rankings.front().edition.sport;
   return summarize(rank_differences(data, rankings), std::move(sport));
}

/// The weak-team threshold is the median rank difference.
inline double select_tau(const RankDiffSummary& summary)
{
   if (summary.count == 0) throw Error(ErrorKind::TooFewSamples, "empty rank difference summary");
   return summary.median;
}

struct UnderdogOptions
{
   bool carry_absent = false;   ///< see WeightedOptions
   bool exclude_unseen = false; ///< skip matches with a team absent from the prior ranking
   bool strict_mean = false;    ///< average divides by |E| - 1, undefined editions count as 0
};

/// Extends `prior` with the teams of `teams` it does not contain, appended
/// below the last entry with weight 0 in name order.
inline WeightedRanking with_unseen_appended(const WeightedRanking& prior, std::span<const TeamId> teams)
{
   WeightedRanking out = prior;
   std::vector<TeamId> unseen;
   for (const auto& t : teams) {
      const bool known = std::any_of(prior.entries.begin(), prior.entries.end(), [&](const auto& e) { return e.team == t; });
      if (!known && std::find(unseen.begin(), unseen.end(), t) == unseen.end()) unseen.push_back(t);
   }
   std::sort(unseen.begin(), unseen.end());
   for (auto& t : unseen) out.entries.push_back({std::move(t), 0.0});
   return out;
}

/// The lower-ranked side of `match` when the two positions differ by at least
/// `tau`; none otherwise. Teams missing from `weighted` rank below its last entry.
inline std::optional<TeamId> identify_weak(const MatchRecord& match, const WeightedRanking& weighted, double tau)
{
   if (!(tau > 0.0)) throw Error(ErrorKind::Validation, "tau must be positive");
   const TeamId sides[] = {match.team_i, match.team_j};
   const auto ranking = with_unseen_appended(weighted, sides);
   const auto pi = rank_position(match.team_i, ranking);
   const auto pj = rank_position(match.team_j, ranking);
   const double d = pi > pj ? static_cast<double>(pi - pj) : static_cast<double>(pj - pi);
   if (d < tau) return std::nullopt;
   return pi > pj ? match.team_i : match.team_j;
}

/// Weak-team counts for one edition, judged against the ranking of earlier editions.
inline EditionUas uas_edition(const MatchScoreDataset& data, const EditionId& edition, const WeightedRanking& prior,
                              double tau, UnderdogOptions opts = {})
{
   if (prior.entries.empty()) throw Error(ErrorKind::NoPriorRanking, "edition " + std::to_string(edition.year));
   const auto& matches = data.matches(edition);
   std::vector<TeamId> teams;
   for (const auto& m : matches) {
      teams.push_back(m.team_i);
      teams.push_back(m.team_j);
   }
   const auto ranking = with_unseen_appended(prior, teams);
   const auto known = [&](const TeamId& t) {
      return std::any_of(prior.entries.begin(), prior.entries.end(), [&](const auto& e) { return e.team == t; });
   };

   EditionUas out{edition, std::nullopt, 0, 0};
   for (const auto& m : matches) {
      if (opts.exclude_unseen && (!known(m.team_i) || !known(m.team_j))) continue;
      const auto weak = identify_weak(m, ranking, tau);
      if (!weak) continue;
      out.weak_matches += 1;
      if (m.won_or_drew(*weak)) out.weak_successes += 1;
   }
   if (out.weak_matches > 0)
      out.uas = static_cast<double>(out.weak_successes) / static_cast<double>(out.weak_matches);
   return out;
}

/// Mean of the defined per-edition scores. With `strict`, the sum is divided
/// by the number of editions instead, undefined ones contributing 0.
inline double uas_average(std::span<const EditionUas> per_edition, bool strict = false)
{
   double sum = 0.0;
   std::size_t defined = 0;
   for (const auto& e : per_edition) {
      if (!e.uas) continue;
      sum += *e.uas;
      ++defined;
   }
   if (defined == 0) throw Error(ErrorKind::AllUndefined, "no edition has a weak-team match");
   return sum / static_cast<double>(strict ? per_edition.size() : defined);
}

inline double uas_aggregated(std::span<const EditionUas> per_edition)
{
   std::size_t num = 0;
   std::size_t den = 0;
   for (const auto& e : per_edition) {
      num += e.weak_successes;
      den += e.weak_matches;
   }
   if (den == 0) throw Error(ErrorKind::ZeroDenominator, "no weak-team matches in any edition");
   return static_cast<double>(num) / static_cast<double>(den);
}

/// Full per-sport report: editions 2..|E|, each judged against the weighted
/// ranking of all earlier editions. Average/aggregated stay empty when no
/// edition has a weak-team match.
inline UasReport compute_uas_report(const MatchScoreDataset& data, std::string_view sport, double lambda, double tau,
                                    UnderdogOptions opts = {})
{
   const auto rankings = compute_edition_rankings(data, sport);
   if (rankings.size() < 2) throw Error(ErrorKind::NoPriorRanking, std::string(sport) + " has fewer than 2 editions");
   const auto history = weighted_ranking_history(rankings, lambda, {opts.carry_absent});

   UasReport report{std::string(sport), lambda, tau, {}, std::nullopt, std::nullopt};
   for (std::size_t h = 1; h < rankings.size(); ++h)
      report.per_edition.push_back(uas_edition(data, rankings[h].edition, history[h - 1], tau, opts));

   const bool any = std::any_of(report.per_edition.begin(), report.per_edition.end(), [](const auto& e) { return e.uas.has_value(); });
   if (any) {
      report.average = uas_average(report.per_edition, opts.strict_mean);
      report.aggregated = uas_aggregated(report.per_edition);
   }
   return report;
}

/// Median rank difference over the sport's per-edition rankings.
inline double tau_for_sport(const MatchScoreDataset& data, std::string_view sport)
{
   const auto rankings = compute_edition_rankings(data, sport);
   return select_tau(rank_diff_distribution(data, rankings));
}

} // namespace underdog
