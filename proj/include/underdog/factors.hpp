#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/ingest.hpp"
#include "underdog/types.hpp"

namespace underdog::factors
{

using Column = std::vector<Cell>;

inline constexpr std::array<std::string_view, 14> factor_names = {
   "BL", "BV", "FS/BS", "GS/BS", "BG", "BB", "PP", "PBH", "PBD", "PI", "NP/FS", "GS/NPG", "SI", "NRAM/NRPM"};

enum class ImputePolicy
{
   MeanRaw,        ///< fill with the mean of the raw source column, before any transform
   MeanNormalized, ///< fill with the mean of the normalized column
   Published,      ///< copy the cell from the published normalized table
};

inline std::optional<ImputePolicy> parse_policy(std::string_view s)
{
   if (s == "mean-raw") return ImputePolicy::MeanRaw;
   if (s == "mean-normalized") return ImputePolicy::MeanNormalized;
   if (s == "published") return ImputePolicy::Published;
   return std::nullopt;
}

namespace detail
{
inline std::pair<double, double> range(const Column& col)
{
   std::optional<double> lo, hi;
   for (const auto& c : col) {
      if (!c) continue;
      lo = lo ? std::min(*lo, *c) : *c;
      hi = hi ? std::max(*hi, *c) : *c;
   }
   if (!lo) throw Error(ErrorKind::AllMissing, "column has no values");
   return {*lo, *hi};
}
} // namespace detail

/// max(column) - value, cell by cell; missing cells stay missing.
inline Column derive_inverse_factor(const Column& raw)
{
   const double hi = detail::range(raw).second;
   Column out;
   out.reserve(raw.size());
   for (const auto& c : raw) out.push_back(c ? Cell(hi - *c) : std::nullopt);
   return out;
}

/// (a - min) / (max - min) over the non-missing cells.
inline Column minmax_normalize(const Column& col, std::string_view name = {})
{
   const auto [lo, hi] = detail::range(col);
   if (!(hi > lo)) throw Error(ErrorKind::ConstantColumn, name.empty() ? "constant column" : std::string(name));
   Column out;
   out.reserve(col.size());
   for (const auto& c : col) out.push_back(c ? Cell((*c - lo) / (hi - lo)) : std::nullopt);
   return out;
}

/// Fills missing cells. The mean policies use the mean of the column's own
/// values; Published takes cells from `published`.
inline Column impute_missing(const Column& col, ImputePolicy policy, const Column& published = {})
{
   Column out = col;
   if (policy == ImputePolicy::Published) {
      for (std::size_t k = 0; k < out.size(); ++k) {
         if (!out[k] && k < published.size()) out[k] = published[k];
      }
      return out;
   }
   double sum = 0.0;
   std::size_t n = 0;
   for (const auto& c : col) {
      if (!c) continue;
      sum += *c;
      ++n;
   }
   if (n == 0) throw Error(ErrorKind::AllMissing, "column has no values to average");
   for (auto& c : out) {
      if (!c) c = sum / static_cast<double>(n);
   }
   return out;
}

/// Where each factor comes from: a raw-table column, or a companion quantity
/// whose inverse (max - value) is the factor.
struct FactorSource
{
   std::string_view factor;
   std::string_view source;
   bool inverse = false;
};

inline constexpr std::array<FactorSource, 14> factor_sources = {{
   {"BL", "BW", true},
   {"BV", "BV", false},
   {"FS/BS", "FS/BS", false},
   {"GS/BS", "GS/BS", false},
   {"BG", "BG", false},
   {"BB", "BB", false},
   {"PP", "PP", false},
   {"PBH", "PBH", false},
   {"PBD", "PBP", true},
   {"PI", "PE", true},
   {"NP/FS", "NP/FS", false},
   {"GS/NPG", "GS/NPG", false},
   {"SI", "SF", true},
   {"NRAM/NRPM", "NRAM/NRPM", false},
}};

namespace detail
{
inline Column companion_column(const CompanionFactors& comp, std::string_view name, const std::vector<std::string>& sports)
{
   const std::vector<Cell>* src = nullptr;
   if (name == "BW") src = &comp.ball_weight;
   else if (name == "PBP") src = &comp.ball_possession;
   else if (name == "PE") src = &comp.experience;
   else if (name == "SF") src = &comp.scoring_frequency;
   if (!src) return {};
   Column out;
   for (const auto& sport : sports) {
      const auto key = underdog::detail::ascii_lower(sport);
      auto it = std::find_if(comp.sports.begin(), comp.sports.end(),
                             [&](const std::string& s) { return underdog::detail::ascii_lower(s) == key; });
      if (it == comp.sports.end()) throw Error(ErrorKind::Validation, "no companion factors for " + sport);
      out.push_back((*src)[static_cast<std::size_t>(it - comp.sports.begin())]);
   }
   return out;
}
} // namespace detail

/// Builds the normalized 14-factor table from raw measurements. Inverse
/// factors read the companion quantities (falling back to a raw-table column
/// of the same name); every column is imputed per `policy` and min-max
/// normalized. `published` is consulted only by the Published policy.
inline FactorsTable build_factors_pipeline(const FactorsTable& raw, const CompanionFactors& companions, ImputePolicy policy,
                                           const std::optional<FactorsTable>& published = std::nullopt)
{
   FactorsTable out;
   out.sports = raw.sports;
   out.cells.assign(raw.rows(), {});
   std::vector<std::string> constant;
   std::optional<FactorsTable> ref;
   if (policy == ImputePolicy::Published) ref = published ? *published : load_bundled_factors().normalized;

   for (const auto& src : factor_sources) {
      Column col = detail::companion_column(companions, src.source, raw.sports);
      if (col.empty()) {
         if (!raw.factor_index(src.source)) throw Error(ErrorKind::Validation, "raw table lacks column " + std::string(src.source));
         col = raw.column(src.source);
      }
      if (policy == ImputePolicy::MeanRaw) col = impute_missing(col, policy);
      if (src.inverse) col = derive_inverse_factor(col);
      try {
         col = minmax_normalize(col, src.factor);
      }
      catch (const Error& e) {
         if (e.kind() != ErrorKind::ConstantColumn) throw;
         constant.emplace_back(src.factor);
         continue;
      }
      if (policy == ImputePolicy::MeanNormalized) col = impute_missing(col, policy);
      if (policy == ImputePolicy::Published) {
         const auto c = ref->factor_index(src.factor);
         Column pub;
         for (const auto& sport : raw.sports) {
            const auto r = ref->sport_index(sport);
            pub.push_back(r && c ? ref->cells[*r][*c] : std::nullopt);
         }
         col = impute_missing(col, policy, pub);
      }
      out.factors.emplace_back(src.factor);
      for (std::size_t r = 0; r < raw.rows(); ++r) out.cells[r].push_back(col[r]);
   }
   if (!constant.empty()) {
      std::string names;
      for (const auto& c : constant) names += (names.empty() ? "" : ", ") + c;
      throw Error(ErrorKind::ConstantColumn, names);
   }
   return out;
}

} // namespace underdog::factors
