#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "underdog/csv.hpp"
#include "underdog/factors.hpp"
#include "underdog/ingest.hpp"
#include "underdog/multivariate.hpp"
#include "underdog/ranking.hpp"
#include "underdog/stats.hpp"
#include "underdog/underdog.hpp"

/// Pipeline drivers and their CSV/JSON renderings, shared by the CLI and tests.
/// Every float is written with six decimals so reruns are byte-identical.
namespace underdog::report
{

using Json = nlohmann::ordered_json;

inline std::string fx(double v) { return csv::format_fixed(v, 6); }
inline std::string fx(const std::optional<double>& v) { return v ? fx(*v) : std::string("NA"); }

/// JSON number rounded to six decimals (null when empty).
inline Json jnum(double v)
{
   const double r = std::round(v * 1e6) / 1e6;
   return r == 0.0 ? Json(0.0) : Json(r);
}
inline Json jnum(const std::optional<double>& v) { return v ? jnum(*v) : Json(nullptr); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- rank

struct RankOutput
{
   std::vector<EditionRanking> editions;
   std::vector<WeightedRanking> weighted; ///< one per edition prefix
};

inline std::vector<RankOutput> run_rank(const MatchScoreDataset& data, double lambda, WeightedOptions opts = {})
{
   check_lambda(lambda);
   std::vector<RankOutput> out;
   for (const auto& sport : data.sports()) {
      RankOutput r;
      r.editions = compute_edition_rankings(data, sport);
      r.weighted = weighted_ranking_history(r.editions, lambda, opts);
      out.push_back(std::move(r));
   }
   return out;
}

inline std::string edition_rankings_csv(const std::vector<RankOutput>& runs)
{
   std::string out = "sport,competition,edition_year,position,team,played,wins,draws,losses,total_score\n";
   for (const auto& run : runs)
      for (const auto& r : run.editions)
         for (std::size_t k = 0; k < r.size(); ++k) {
            const auto& t = r.entries[k];
            out += csv::join({r.edition.sport, r.edition.competition, std::to_string(r.edition.year), std::to_string(k + 1),
                              t.team.name(), std::to_string(t.played), std::to_string(t.wins), std::to_string(t.draws),
                              std::to_string(t.losses), std::to_string(t.total_score)}) +
                   "\n";
         }
   return out;
}

inline std::string weighted_rankings_csv(const std::vector<RankOutput>& runs)
{
   std::string out = "sport,competition,up_to_year,lambda,position,team,weight\n";
   for (const auto& run : runs)
      for (const auto& w : run.weighted)
         for (std::size_t k = 0; k < w.size(); ++k)
            out += csv::join({w.up_to.sport, w.up_to.competition, std::to_string(w.up_to.year), fx(w.lambda),
                              std::to_string(k + 1), w.entries[k].team.name(), fx(w.entries[k].weight)}) +
                   "\n";
   return out;
}

inline Json rank_json(const std::vector<RankOutput>& runs)
{
   Json sports = Json::array();
   for (const auto& run : runs) {
      Json eds = Json::array();
      for (const auto& r : run.editions) {
         Json entries = Json::array();
         for (const auto& t : r.entries)
            entries.push_back({{"team", t.team.name()}, {"played", t.played}, {"wins", t.wins}, {"draws", t.draws},
                               {"losses", t.losses}, {"total_score", t.total_score}});
         eds.push_back({{"competition", r.edition.competition}, {"edition_year", r.edition.year}, {"ranking", entries}});
      }
      Json ws = Json::array();
      for (const auto& w : run.weighted) {
         Json entries = Json::array();
         for (const auto& e : w.entries) entries.push_back({{"team", e.team.name()}, {"weight", jnum(e.weight)}});
         ws.push_back({{"up_to_year", w.up_to.year}, {"lambda", jnum(w.lambda)}, {"ranking", entries}});
      }
      const auto& sport = run.editions.front().edition.sport;
      sports.push_back({{"sport", sport}, {"editions", eds}, {"weighted", ws}});
   }
   return {{"sports", sports}};
}

// ---------------------------------------------------------------- uas

struct UasRunConfig
{
   std::vector<double> lambdas{1.0};
   std::optional<double> tau_override;
   UnderdogOptions options;
};

struct SportUas
{
   std::string sport;
   double tau = 0.0;
   RankDiffSummary rank_diff;
   std::vector<UasReport> reports; ///< one per lambda
};

/// Per-sport reports for every lambda; sports are evaluated concurrently and
/// returned in corpus order.
inline std::vector<SportUas> run_uas(const MatchScoreDataset& data, const UasRunConfig& cfg)
{
   for (double l : cfg.lambdas) check_lambda(l);
   if (cfg.tau_override && !(*cfg.tau_override > 0.0)) throw Error(ErrorKind::Validation, "tau must be positive");
   std::vector<std::future<SportUas>> jobs;
   for (const auto& sport : data.sports()) {
      jobs.push_back(std::async(std::launch::async, [&data, &cfg, sport] {
         SportUas s;
         s.sport = sport;
         const auto rankings = compute_edition_rankings(data, sport);
         s.rank_diff = rank_diff_distribution(data, rankings);
         s.tau = cfg.tau_override.value_or(select_tau(s.rank_diff));
         for (double l : cfg.lambdas) s.reports.push_back(compute_uas_report(data, sport, l, s.tau, cfg.options));
         return s;
      }));
   }
   std::vector<SportUas> out;
   for (auto& j : jobs) out.push_back(j.get());
   return out;
}

/// Table with one row per sport: tau and the average score for each lambda.
inline std::string uas_table_csv(const std::vector<SportUas>& runs, const std::vector<double>& lambdas)
{
   std::vector<std::string> header{"sport", "tau"};
   for (double l : lambdas) header.push_back("uas_lambda_" + csv::format_exact(l));
   std::string out = csv::join(header) + "\n";
   for (const auto& s : runs) {
      std::vector<std::string> f{s.sport, fx(s.tau)};
      for (const auto& r : s.reports) f.push_back(fx(r.average));
      out += csv::join(f) + "\n";
   }
   return out;
}

inline std::string uas_editions_csv(const std::vector<SportUas>& runs)
{
   std::string out = "sport,lambda,tau,edition_year,uas,weak_matches,weak_successes\n";
   for (const auto& s : runs)
      for (const auto& r : s.reports)
         for (const auto& e : r.per_edition)
            out += csv::join({s.sport, fx(r.lambda), fx(r.tau), std::to_string(e.edition.year), fx(e.uas),
                              std::to_string(e.weak_matches), std::to_string(e.weak_successes)}) +
                   "\n";
   return out;
}

inline Json uas_json(const std::vector<SportUas>& runs)
{
   Json sports = Json::array();
   for (const auto& s : runs) {
      Json reports = Json::array();
      for (const auto& r : s.reports) {
         Json eds = Json::array();
         for (const auto& e : r.per_edition)
            eds.push_back({{"edition_year", e.edition.year}, {"uas", jnum(e.uas)}, {"weak_matches", e.weak_matches},
                           {"weak_successes", e.weak_successes}});
         reports.push_back({{"lambda", jnum(r.lambda)}, {"average", jnum(r.average)}, {"aggregated", jnum(r.aggregated)},
                            {"per_edition", eds}});
      }
      const auto& d = s.rank_diff;
      sports.push_back({{"sport", s.sport},
                        {"tau", jnum(s.tau)},
                        {"rank_difference", {{"min", jnum(d.min)}, {"q1", jnum(d.q1)}, {"median", jnum(d.median)},
                                             {"q3", jnum(d.q3)}, {"max", jnum(d.max)}, {"count", d.count}}},
                        {"reports", reports}});
   }
   return {{"sports", sports}};
}

// ---------------------------------------------------------------- stats

struct CiRow
{
   std::string sport;
   std::size_t editions = 0;
   double mean = 0.0;
   double lo = 0.0;
   double hi = 0.0;
};

struct DunnRow
{
   std::string first;
   std::string second;
   double z = 0.0;
   double p_value = 1.0;
   double p_adjusted = 1.0;
};

struct LaneyRow
{
   std::string label;
   double successes = 0.0;
   stats::LaneyPoint point;
};

struct StatsOutput
{
   std::vector<CiRow> ci;
   stats::TestResult kruskal;
   std::vector<DunnRow> dunn; ///< ascending adjusted p
   stats::LaneyChart laney;
   std::vector<LaneyRow> laney_rows;
};

/// Laney chart over labelled (successes, trials) pairs.
inline std::pair<stats::LaneyChart, std::vector<LaneyRow>> laney_from_counts(
   const std::vector<std::tuple<std::string, double, double>>& counts)
{
   std::vector<std::pair<double, double>> pts;
   for (const auto& [label, succ, n] : counts) {
      if (!(n >= 1.0)) throw Error(ErrorKind::Validation, label + " has no weak-team matches");
      pts.push_back({succ / n, n});
   }
   auto chart = stats::laney_limits(pts);
   std::vector<LaneyRow> rows;
   for (std::size_t k = 0; k < counts.size(); ++k) rows.push_back({std::get<0>(counts[k]), std::get<1>(counts[k]), chart.per_point[k]});
   return {chart, rows};
}

inline std::vector<std::tuple<std::string, double, double>> aggregated_counts(const std::vector<SportUas>& runs)
{
   std::vector<std::tuple<std::string, double, double>> out;
   for (const auto& s : runs) {
      std::size_t num = 0, den = 0;
      for (const auto& e : s.reports.front().per_edition) {
         num += e.weak_successes;
         den += e.weak_matches;
      }
      out.push_back({s.sport, static_cast<double>(num), static_cast<double>(den)});
   }
   return out;
}

/// Confidence intervals, Kruskal-Wallis, Dunn and Laney over the per-edition
/// scores of each sport (first report of every run).
inline StatsOutput run_stats(const std::vector<SportUas>& runs, double ci_level, bool ci_normal)
{
   if (runs.size() < 2) throw Error(ErrorKind::TooFewGroups, "stats needs at least 2 sports");
   StatsOutput out;
   std::vector<std::vector<double>> groups;
   for (const auto& s : runs) {
      std::vector<double> vals;
      for (const auto& e : s.reports.front().per_edition)
         if (e.uas) vals.push_back(*e.uas);
      if (vals.empty()) throw Error(ErrorKind::AllUndefined, s.sport + " has no defined edition scores");
      CiRow row{s.sport, vals.size(), 0.0, 0.0, 0.0};
      row.mean = std::accumulate(vals.begin(), vals.end(), 0.0) / static_cast<double>(vals.size());
      if (vals.size() >= 2) std::tie(row.lo, row.hi) = stats::mean_ci(vals, ci_level, ci_normal);
      else row.lo = row.hi = row.mean;
      out.ci.push_back(row);
      groups.push_back(std::move(vals));
   }
   out.kruskal = stats::kruskal_wallis(groups);
   for (const auto& c : stats::dunn_bonferroni(groups))
      out.dunn.push_back({runs[c.first].sport, runs[c.second].sport, c.z, c.p_value, c.p_adjusted});
   std::stable_sort(out.dunn.begin(), out.dunn.end(), [](const DunnRow& a, const DunnRow& b) { return a.p_adjusted < b.p_adjusted; });
   std::tie(out.laney, out.laney_rows) = laney_from_counts(aggregated_counts(runs));
   return out;
}

inline std::string ci_csv(const StatsOutput& s)
{
   std::string out = "sport,editions,mean_uas,ci_low,ci_high\n";
   for (const auto& r : s.ci) out += csv::join({r.sport, std::to_string(r.editions), fx(r.mean), fx(r.lo), fx(r.hi)}) + "\n";
   return out;
}

inline std::string kruskal_csv(const stats::TestResult& k)
{
   return "statistic,p_value,degrees_of_freedom\n" + fx(k.statistic) + "," + csv::format_exact(k.p_value) + "," +
          std::to_string(k.degrees_of_freedom.value_or(0)) + "\n";
}

inline std::string dunn_csv(const StatsOutput& s)
{
   std::string out = "first,second,z,p_value,p_adjusted\n";
   for (const auto& d : s.dunn) out += csv::join({d.first, d.second, fx(d.z), fx(d.p_value), fx(d.p_adjusted)}) + "\n";
   return out;
}

inline std::string laney_csv(const stats::LaneyChart& chart, const std::vector<LaneyRow>& rows)
{
   std::string out = "label,proportion,n,center,sigma_z,ucl,lcl\n";
   for (const auto& r : rows)
      out += csv::join({r.label, fx(r.point.proportion), fx(r.point.n), fx(chart.center), fx(chart.sigma_z), fx(r.point.ucl),
                        fx(r.point.lcl)}) +
             "\n";
   return out;
}

inline Json laney_json(const stats::LaneyChart& chart, const std::vector<LaneyRow>& rows)
{
   Json pts = Json::array();
   for (const auto& r : rows)
      pts.push_back({{"label", r.label}, {"proportion", jnum(r.point.proportion)}, {"n", jnum(r.point.n)},
                     {"ucl", jnum(r.point.ucl)}, {"lcl", jnum(r.point.lcl)}});
   return {{"center", jnum(chart.center)}, {"sigma_z", jnum(chart.sigma_z)}, {"points", pts}};
}

inline Json stats_json(const StatsOutput& s, double ci_level)
{
   Json ci = Json::array();
   for (const auto& r : s.ci)
      ci.push_back({{"sport", r.sport}, {"editions", r.editions}, {"mean_uas", jnum(r.mean)}, {"ci_low", jnum(r.lo)},
                    {"ci_high", jnum(r.hi)}});
   Json dunn = Json::array();
   for (const auto& d : s.dunn)
      dunn.push_back({{"first", d.first}, {"second", d.second}, {"z", jnum(d.z)}, {"p_value", jnum(d.p_value)},
                      {"p_adjusted", jnum(d.p_adjusted)}});
   return {{"ci_level", jnum(ci_level)},
           {"confidence_intervals", ci},
           {"kruskal_wallis",
            {{"statistic", jnum(s.kruskal.statistic)}, {"p_value", csv::format_exact(s.kruskal.p_value)},
             {"degrees_of_freedom", s.kruskal.degrees_of_freedom.value_or(0)}}},
           {"dunn_bonferroni", dunn},
           {"laney", laney_json(s.laney, s.laney_rows)}};
}

// ---------------------------------------------------------------- factors / pca / corr

inline std::string table_csv(const FactorsTable& t)
{
   std::vector<std::string> header{"sport"};
   header.insert(header.end(), t.factors.begin(), t.factors.end());
   std::string out = csv::join(header) + "\n";
   for (std::size_t r = 0; r < t.rows(); ++r) {
      std::vector<std::string> f{t.sports[r]};
      for (const auto& c : t.cells[r]) f.push_back(fx(c));
      out += csv::join(f) + "\n";
   }
   return out;
}

/// Appends the published lambda = 1 scores as a "UAS" column (rows without a
/// published score are dropped).
inline FactorsTable join_uas(const FactorsTable& table, const UasTable& uas)
{
   const auto it = std::find(uas.lambdas.begin(), uas.lambdas.end(), 1.0);
   if (it == uas.lambdas.end()) throw Error(ErrorKind::Validation, "UAS table has no lambda = 1 column");
   const auto col = static_cast<std::size_t>(it - uas.lambdas.begin());
   FactorsTable out{{}, table.factors, {}};
   out.factors.push_back("UAS");
   for (std::size_t r = 0; r < table.rows(); ++r) {
      const auto* row = uas.find(table.sports[r]);
      if (!row) continue;
      out.sports.push_back(table.sports[r]);
      auto cells = table.cells[r];
      cells.push_back(row->uas[col]);
      out.cells.push_back(std::move(cells));
   }
   return out;
}

inline std::string correlation_csv(const stats::CorrelationMatrix& m)
{
   std::vector<std::string> header{"factor"};
   header.insert(header.end(), m.labels.begin(), m.labels.end());
   std::string out = csv::join(header) + "\n";
   for (std::size_t r = 0; r < m.labels.size(); ++r) {
      std::vector<std::string> f{m.labels[r]};
      for (const auto& v : m.values[r]) f.push_back(fx(v));
      out += csv::join(f) + "\n";
   }
   return out;
}

/// Correlations of every other column with `target`, most positive first.
inline std::vector<std::pair<std::string, double>> correlates_of(const stats::CorrelationMatrix& m, std::string_view target)
{
   std::vector<std::pair<std::string, double>> out;
   for (const auto& l : m.labels) {
      if (l == target) continue;
      if (const auto v = m.at(l, target)) out.push_back({l, *v});
   }
   std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
   return out;
}

inline std::string scree_csv(const PcaResult& p)
{
   std::string out = "component,eigenvalue,explained_ratio,cumulative_ratio\n";
   const auto cum = p.cumulative_ratio();
   for (std::size_t k = 0; k < p.eigenvalues.size(); ++k)
      out += csv::join({"PC" + std::to_string(k + 1), fx(p.eigenvalues[k]), fx(p.explained_ratio[k]), fx(cum[k])}) + "\n";
   return out;
}

inline std::string loadings_csv(const PcaResult& p, const std::vector<std::string>& factors)
{
   std::vector<std::string> header{"factor"};
   for (std::size_t k = 0; k < p.loadings.cols(); ++k) header.push_back("PC" + std::to_string(k + 1));
   std::string out = csv::join(header) + "\n";
   for (std::size_t r = 0; r < p.loadings.rows(); ++r) {
      std::vector<std::string> f{factors[r]};
      for (std::size_t k = 0; k < p.loadings.cols(); ++k) f.push_back(fx(p.loadings(r, k)));
      out += csv::join(f) + "\n";
   }
   return out;
}

inline std::string scores_csv(const PcaResult& p, const std::vector<std::string>& rows)
{
   std::vector<std::string> header{"sport"};
   for (std::size_t k = 0; k < p.scores.cols(); ++k) header.push_back("PC" + std::to_string(k + 1));
   std::string out = csv::join(header) + "\n";
   for (std::size_t r = 0; r < p.scores.rows(); ++r) {
      std::vector<std::string> f{rows[r]};
      for (std::size_t k = 0; k < p.scores.cols(); ++k) f.push_back(fx(p.scores(r, k)));
      out += csv::join(f) + "\n";
   }
   return out;
}

} // namespace underdog::report
