#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog::stats
{

// ---------------------------------------------------------------- special functions

namespace detail
{
inline constexpr double eps = 1e-16;
inline constexpr double tiny = 1e-300;
inline constexpr int max_iter = 10000;

// Series for P(a, x); converges for x < a + 1.
inline double gamma_p_series(double a, double x)
{
   double ap = a;
   double del = 1.0 / a;
   double sum = del;
   for (int n = 0; n < max_iter; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * eps) break;
   }
   return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x); converges for x >= a + 1.
inline double gamma_q_fraction(double a, double x)
{
   double b = x + 1.0 - a;
   double c = 1.0 / tiny;
   double d = 1.0 / b;
   double h = d;
   for (int i = 1; i < max_iter; ++i) {
      const double an = -i * (i - a);
      b += 2.0;
      d = an * d + b;
      if (std::fabs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::fabs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const double del = d * c;
      h *= del;
      if (std::fabs(del - 1.0) < eps) break;
   }
   return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

inline double beta_fraction(double a, double b, double x)
{
   const double qab = a + b;
   const double qap = a + 1.0;
   const double qam = a - 1.0;
   double c = 1.0;
   double d = 1.0 - qab * x / qap;
   if (std::fabs(d) < tiny) d = tiny;
   d = 1.0 / d;
   double h = d;
   for (int m = 1; m < max_iter; ++m) {
      const int m2 = 2 * m;
      double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
      d = 1.0 + aa * d;
      if (std::fabs(d) < tiny) d = tiny;
      c = 1.0 + aa / c;
      if (std::fabs(c) < tiny) c = tiny;
      d = 1.0 / d;
      h *= d * c;
      aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
      d = 1.0 + aa * d;
      if (std::fabs(d) < tiny) d = tiny;
      c = 1.0 + aa / c;
      if (std::fabs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const double del = d * c;
      h *= del;
      if (std::fabs(del - 1.0) < eps) break;
   }
   return h;
}

/// Monotone bisection for an increasing `f` on [lo, hi].
template <class F>
double bisect(F f, double target, double lo, double hi)
{
   for (int k = 0; k < 400 && hi - lo > 0.0; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (f(mid) < target ? lo : hi) = mid;
   }
   return 0.5 * (lo + hi);
}
} // namespace detail

/// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x)
{
   if (x <= 0.0) return 0.0;
   return x < a + 1.0 ? detail::gamma_p_series(a, x) : 1.0 - detail::gamma_q_fraction(a, x);
}

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x)
{
   if (x <= 0.0) return 1.0;
   return x < a + 1.0 ? 1.0 - detail::gamma_p_series(a, x) : detail::gamma_q_fraction(a, x);
}

/// Regularized incomplete beta I_x(a, b).
inline double incomplete_beta(double a, double b, double x)
{
   if (x <= 0.0) return 0.0;
   if (x >= 1.0) return 1.0;
   const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x));
   if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_fraction(a, b, x) / a;
   return 1.0 - front * detail::beta_fraction(b, a, 1.0 - x) / b;
}

inline double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

inline double normal_quantile(double p)
{
   if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::Validation, "probability must lie in (0, 1)");
   return detail::bisect(normal_cdf, p, -40.0, 40.0);
}

inline double student_t_cdf(double t, double dof)
{
   const double tail = 0.5 * incomplete_beta(0.5 * dof, 0.5, dof / (dof + t * t));
   return t >= 0.0 ? 1.0 - tail : tail;
}

inline double student_t_quantile(double p, double dof)
{
   if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::Validation, "probability must lie in (0, 1)");
   if (p == 0.5) return 0.0;
   if (p < 0.5) return -student_t_quantile(1.0 - p, dof);
   double hi = 1.0;
   while (student_t_cdf(hi, dof) < p && hi < 1e300) hi *= 2.0;
   return detail::bisect([dof](double t) { return student_t_cdf(t, dof); }, p, 0.0, hi);
}

// ---------------------------------------------------------------- tests

struct TestResult
{
   double statistic = 0.0;
   double p_value = 1.0;
   std::optional<int> degrees_of_freedom;
};

/// Mean interval: Student-t by default, normal quantile when `normal` is set.
inline std::pair<double, double> mean_ci(std::span<const double> values, double level, bool normal = false)
{
   if (values.size() < 2) throw Error(ErrorKind::TooFewSamples, "confidence interval needs at least 2 values");
   if (!(level > 0.0 && level < 1.0)) throw Error(ErrorKind::Validation, "confidence level must lie in (0, 1)");
   const double n = static_cast<double>(values.size());
   const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
   double ss = 0.0;
   for (double v : values) ss += (v - mean) * (v - mean);
   const double sd = std::sqrt(ss / (n - 1.0));
   if (sd == 0.0) return {mean, mean};
   const double q = 0.5 * (1.0 + level);
   const double crit = normal ? normal_quantile(q) : student_t_quantile(q, n - 1.0);
   const double half = crit * sd / std::sqrt(n);
   return {mean - half, mean + half};
}

/// Pooled mid-ranks (1-based) of every observation, group by group, plus the
/// tie term sum(t^3 - t).
struct PooledRanks
{
   std::vector<std::vector<double>> ranks;
   double tie_sum = 0.0;
   std::size_t total = 0;
};

inline PooledRanks pooled_ranks(std::span<const std::vector<double>> groups)
{
   std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> all;
   PooledRanks out;
   out.ranks.resize(groups.size());
   for (std::size_t g = 0; g < groups.size(); ++g) {
      out.ranks[g].resize(groups[g].size());
      for (std::size_t k = 0; k < groups[g].size(); ++k) all.push_back({groups[g][k], {g, k}});
   }
   std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
   out.total = all.size();
   for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j].first == all[i].first) ++j;
      const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
      const double t = static_cast<double>(j - i);
      out.tie_sum += t * t * t - t;
      for (std::size_t k = i; k < j; ++k) out.ranks[all[k].second.first][all[k].second.second] = rank;
      i = j;
   }
   return out;
}

namespace detail
{
inline void check_groups(std::span<const std::vector<double>> groups)
{
   if (groups.size() < 2) throw Error(ErrorKind::TooFewGroups, "need at least 2 groups");
   for (const auto& g : groups) {
      if (g.empty()) throw Error(ErrorKind::TooFewGroups, "every group must be nonempty");
   }
}
} // namespace detail

/// Kruskal-Wallis H with tie correction; p from chi-square with k - 1 dof.
/// Fully tied data gives H = 0, p = 1.
inline TestResult kruskal_wallis(std::span<const std::vector<double>> groups)
{
   detail::check_groups(groups);
   const auto pr = pooled_ranks(groups);
   const double n = static_cast<double>(pr.total);
   const int dof = static_cast<int>(groups.size()) - 1;
   const double correction = 1.0 - pr.tie_sum / (n * n * n - n);
   if (correction <= 0.0) return {0.0, 1.0, dof};
   double s = 0.0;
   for (const auto& r : pr.ranks) {
      const double sum = std::accumulate(r.begin(), r.end(), 0.0);
      s += sum * sum / static_cast<double>(r.size());
   }
   double h = (12.0 / (n * (n + 1.0)) * s - 3.0 * (n + 1.0)) / correction;
   h = std::max(h, 0.0);
   return {h, std::clamp(chi2_sf(h, dof), 0.0, 1.0), dof};
}

struct DunnComparison
{
   std::size_t first = 0;
   std::size_t second = 0;
   double z = 0.0;          ///< (mean rank first - mean rank second) / SE
   double p_value = 1.0;    ///< two-sided, unadjusted
   double p_adjusted = 1.0; ///< Bonferroni: p * k(k-1)/2, at most 1
};

/// Dunn's pairwise comparisons on pooled mean ranks with tie correction.
inline std::vector<DunnComparison> dunn_bonferroni(std::span<const std::vector<double>> groups)
{
   detail::check_groups(groups);
   const auto pr = pooled_ranks(groups);
   const double n = static_cast<double>(pr.total);
   const double k = static_cast<double>(groups.size());
   const double m = k * (k - 1.0) / 2.0;
   const double var = n * (n + 1.0) / 12.0 - pr.tie_sum / (12.0 * (n - 1.0));

   std::vector<double> mean_rank;
   for (const auto& r : pr.ranks) mean_rank.push_back(std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(r.size()));

   std::vector<DunnComparison> out;
   for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
         DunnComparison c{a, b, 0.0, 1.0, 1.0};
         const double se = std::sqrt(std::max(var, 0.0) * (1.0 / static_cast<double>(groups[a].size()) +
                                                           1.0 / static_cast<double>(groups[b].size())));
         if (se > 0.0) {
            c.z = (mean_rank[a] - mean_rank[b]) / se;
            c.p_value = std::min(1.0, 2.0 * normal_sf(std::fabs(c.z)));
            c.p_adjusted = std::min(1.0, c.p_value * m);
         }
         out.push_back(c);
      }
   }
   return out;
}

// ---------------------------------------------------------------- control chart

struct LaneyPoint
{
   double proportion = 0.0;
   double n = 0.0;
   double ucl = 0.0;
   double lcl = 0.0;
};

struct LaneyChart
{
   double center = 0.0;
   double sigma_z = 0.0;
   std::vector<LaneyPoint> per_point;
};

/// d2 constant for moving ranges of two consecutive points.
inline constexpr double laney_d2 = 1.128;

/// Laney p'-chart limits for (proportion, subgroup size) points.
inline LaneyChart laney_limits(std::span<const std::pair<double, double>> points, std::optional<double> sigma_override = {})
{
   if (points.size() < 2) throw Error(ErrorKind::TooFewSamples, "Laney chart needs at least 2 points");
   double num = 0.0;
   double den = 0.0;
   for (const auto& [p, n] : points) {
      if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::Validation, "proportion outside [0, 1]");
      if (!(n >= 1.0)) throw Error(ErrorKind::Validation, "subgroup size must be at least 1");
      num += p * n;
      den += n;
   }
   LaneyChart chart;
   chart.center = num / den;
   const double pbar = chart.center;
   if (pbar <= 0.0 || pbar >= 1.0) throw Error(ErrorKind::DegenerateCenter, "center proportion is 0 or 1");

   std::vector<double> z;
   for (const auto& [p, n] : points) z.push_back((p - pbar) / std::sqrt(pbar * (1.0 - pbar) / n));
   double mr = 0.0;
   for (std::size_t k = 1; k < z.size(); ++k) mr += std::fabs(z[k] - z[k - 1]);
   mr /= static_cast<double>(z.size() - 1);
   chart.sigma_z = sigma_override.value_or(mr / laney_d2);

   for (const auto& [p, n] : points) {
      const double spread = 3.0 * std::sqrt(pbar * (1.0 - pbar) / n) * chart.sigma_z;
      chart.per_point.push_back({p, n, std::min(1.0, pbar + spread), std::max(0.0, pbar - spread)});
   }
   return chart;
}

// ---------------------------------------------------------------- correlation

/// Pearson correlation over pairwise-complete cells; empty when fewer than 2
/// complete pairs or either side is constant.
inline std::optional<double> pearson(std::span<const Cell> x, std::span<const Cell> y)
{
   std::vector<std::pair<double, double>> pairs;
   for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
      if (x[k] && y[k]) pairs.push_back({*x[k], *y[k]});
   }
   if (pairs.size() < 2) return std::nullopt;
   double mx = 0.0, my = 0.0;
   for (const auto& [a, b] : pairs) {
      mx += a;
      my += b;
   }
   mx /= static_cast<double>(pairs.size());
   my /= static_cast<double>(pairs.size());
   double sxy = 0.0, sxx = 0.0, syy = 0.0;
   for (const auto& [a, b] : pairs) {
      sxy += (a - mx) * (b - my);
      sxx += (a - mx) * (a - mx);
      syy += (b - my) * (b - my);
   }
   if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
   return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct CorrelationMatrix
{
   std::vector<std::string> labels;
   std::vector<std::vector<Cell>> values;

   Cell at(std::string_view a, std::string_view b) const
   {
      const auto idx = [&](std::string_view name) {
         const auto it = std::find(labels.begin(), labels.end(), name);
         if (it == labels.end()) throw Error(ErrorKind::Validation, "no label " + std::string(name));
         return static_cast<std::size_t>(it - labels.begin());
      };
      return values[idx(a)][idx(b)];
   }
};

/// Column-pairwise Pearson matrix, optionally with one extra named column
/// appended (one value per table row).
inline CorrelationMatrix pearson_matrix(const FactorsTable& table,
                                        const std::optional<std::pair<std::string, std::vector<Cell>>>& extra = std::nullopt)
{
   if (table.rows() < 2) throw Error(ErrorKind::TooFewSamples, "correlation needs at least 2 rows");
   CorrelationMatrix out;
   std::vector<std::vector<Cell>> cols;
   for (std::size_t c = 0; c < table.cols(); ++c) {
      out.labels.push_back(table.factors[c]);
      cols.push_back(table.column(c));
   }
   if (extra) {
      if (extra->second.size() != table.rows()) throw Error(ErrorKind::Validation, "extra column length mismatch");
      out.labels.push_back(extra->first);
      cols.push_back(extra->second);
   }
   const auto n = cols.size();
   out.values.assign(n, std::vector<Cell>(n));
   for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
         auto r = pearson(cols[a], cols[b]);
         if (a == b && r) r = 1.0;
         out.values[a][b] = r;
         out.values[b][a] = r;
      }
   }
   return out;
}

} // namespace underdog::stats
