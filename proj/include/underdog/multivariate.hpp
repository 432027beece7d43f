#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog
{

/// Dense row-major matrix of doubles.
class Matrix
{
  public:
   Matrix() = default;
   Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

   static Matrix identity(std::size_t n)
   {
      Matrix m(n, n);
      for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
      return m;
   }

   std::size_t rows() const noexcept { return rows_; }
   std::size_t cols() const noexcept { return cols_; }

   double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
   double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

   Matrix transpose() const
   {
      Matrix t(cols_, rows_);
      for (std::size_t r = 0; r < rows_; ++r)
         for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
      return t;
   }

   friend Matrix operator*(const Matrix& a, const Matrix& b)
   {
      if (a.cols_ != b.rows_) throw Error(ErrorKind::Internal, "matrix shape mismatch");
      Matrix out(a.rows_, b.cols_);
      for (std::size_t i = 0; i < a.rows_; ++i)
         for (std::size_t k = 0; k < a.cols_; ++k) {
            const double v = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
         }
      return out;
   }

   friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
   std::size_t rows_ = 0;
   std::size_t cols_ = 0;
   std::vector<double> data_;
};

/// Converts a table with no missing cells into a matrix.
inline Matrix to_matrix(const FactorsTable& table)
{
   Matrix m(table.rows(), table.cols());
   for (std::size_t r = 0; r < table.rows(); ++r)
      for (std::size_t c = 0; c < table.cols(); ++c) {
         const auto& cell = table.cells[r][c];
         if (!cell) throw Error(ErrorKind::DegenerateMatrix, "missing cell " + table.sports[r] + "/" + table.factors[c]);
         m(r, c) = *cell;
      }
   return m;
}

struct EigenResult
{
   std::vector<double> values; ///< descending
   Matrix vectors;             ///< column k pairs with values[k]
   int sweeps = 0;
};

inline double off_diagonal_norm(const Matrix& a)
{
   double s = 0.0;
   for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
         if (i != j) s += a(i, j) * a(i, j);
   return std::sqrt(s);
}

/// Cyclic Jacobi rotations on a symmetric matrix until the off-diagonal
/// Frobenius norm drops below `tol`.
inline EigenResult jacobi_eigen(Matrix a, double tol = 1e-12, int max_sweeps = 100)
{
   const std::size_t n = a.rows();
   if (n != a.cols()) throw Error(ErrorKind::DegenerateMatrix, "matrix is not square");
   Matrix v = Matrix::identity(n);
   int sweep = 0;
   for (; sweep < max_sweeps && off_diagonal_norm(a) >= tol; ++sweep) {
      for (std::size_t p = 0; p + 1 < n; ++p) {
         for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            for (std::size_t k = 0; k < n; ++k) {
               const double akp = a(k, p);
               const double akq = a(k, q);
               a(k, p) = c * akp - s * akq;
               a(k, q) = s * akp + c * akq;
            }
            for (std::size_t k = 0; k < n; ++k) {
               const double apk = a(p, k);
               const double aqk = a(q, k);
               a(p, k) = c * apk - s * aqk;
               a(q, k) = s * apk + c * aqk;
            }
            for (std::size_t k = 0; k < n; ++k) {
               const double vkp = v(k, p);
               const double vkq = v(k, q);
               v(k, p) = c * vkp - s * vkq;
               v(k, q) = s * vkp + c * vkq;
            }
         }
      }
   }
   if (off_diagonal_norm(a) >= tol) throw Error(ErrorKind::DegenerateMatrix, "Jacobi iteration did not converge");

   std::vector<std::size_t> order(n);
   std::iota(order.begin(), order.end(), 0);
   std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
   EigenResult out{{}, Matrix(n, n), sweep};
   for (std::size_t k = 0; k < n; ++k) {
      out.values.push_back(a(order[k], order[k]));
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
   }
   return out;
}

struct PcaResult
{
   std::vector<double> eigenvalues;     ///< descending, clamped at 0
   std::vector<double> explained_ratio; ///< eigenvalue / total variance
   Matrix loadings;                     ///< factors x components, orthonormal columns
   Matrix scores;                       ///< rows x components
   std::vector<double> mean_vector;
   std::vector<double> scale_vector;    ///< column std devs when standardized, else 1
   Matrix covariance;                   ///< matrix that was decomposed

   std::vector<double> cumulative_ratio() const
   {
      std::vector<double> out(explained_ratio.size());
      std::partial_sum(explained_ratio.begin(), explained_ratio.end(), out.begin());
      return out;
   }
};

/// Principal components of the column-centered data (and column-scaled when
/// `standardize`). Sample covariance uses n - 1. Each component is signed so
/// its largest-magnitude loading is positive.
inline PcaResult pca(const Matrix& data, bool standardize = false)
{
   const std::size_t n = data.rows();
   const std::size_t p = data.cols();
   if (n < 2 || p < 2) throw Error(ErrorKind::DegenerateMatrix, "PCA needs at least 2 rows and 2 columns");

   PcaResult out;
   out.mean_vector.assign(p, 0.0);
   out.scale_vector.assign(p, 1.0);
   for (std::size_t c = 0; c < p; ++c) {
      for (std::size_t r = 0; r < n; ++r) out.mean_vector[c] += data(r, c);
      out.mean_vector[c] /= static_cast<double>(n);
   }
   Matrix centered(n, p);
   for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < p; ++c) centered(r, c) = data(r, c) - out.mean_vector[c];
   if (standardize) {
      for (std::size_t c = 0; c < p; ++c) {
         double ss = 0.0;
         for (std::size_t r = 0; r < n; ++r) ss += centered(r, c) * centered(r, c);
         const double sd = std::sqrt(ss / static_cast<double>(n - 1));
         if (!(sd > 0.0)) throw Error(ErrorKind::DegenerateMatrix, "constant column " + std::to_string(c));
         out.scale_vector[c] = sd;
         for (std::size_t r = 0; r < n; ++r) centered(r, c) /= sd;
      }
   }

   out.covariance = centered.transpose() * centered;
   for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) out.covariance(i, j) /= static_cast<double>(n - 1);

   auto eig = jacobi_eigen(out.covariance);
   for (std::size_t k = 0; k < p; ++k) {
      std::size_t arg = 0;
      for (std::size_t r = 1; r < p; ++r)
         if (std::fabs(eig.vectors(r, k)) > std::fabs(eig.vectors(arg, k)) + 1e-15) arg = r;
      if (eig.vectors(arg, k) < 0.0)
         for (std::size_t r = 0; r < p; ++r) eig.vectors(r, k) = -eig.vectors(r, k);
   }
   out.loadings = eig.vectors;

   double total = 0.0;
   for (std::size_t k = 0; k < p; ++k) total += out.covariance(k, k);
   if (!(total > 0.0)) throw Error(ErrorKind::DegenerateMatrix, "data has zero variance");
   for (double ev : eig.values) {
      out.eigenvalues.push_back(std::max(ev, 0.0));
      out.explained_ratio.push_back(std::max(ev, 0.0) / total);
   }
   out.scores = centered * out.loadings;
   return out;
}

struct BiplotData
{
   std::vector<std::pair<double, double>> scores;   ///< one point per row
   std::vector<std::pair<double, double>> loadings; ///< one vector per factor, scaled
};

inline BiplotData biplot_data(const PcaResult& result, double loading_scale)
{
   if (result.loadings.cols() < 2) throw Error(ErrorKind::TooFewComponents, "biplot needs 2 components");
   BiplotData out;
   for (std::size_t r = 0; r < result.scores.rows(); ++r) out.scores.push_back({result.scores(r, 0), result.scores(r, 1)});
   for (std::size_t r = 0; r < result.loadings.rows(); ++r)
      out.loadings.push_back({loading_scale * result.loadings(r, 0), loading_scale * result.loadings(r, 1)});
   return out;
}

/// Minimal SVG scatter of the scores with labelled loading segments.
/// `shade` holds one class per point (0 low, 1 medium, 2 high) or is empty.
inline std::string biplot_svg(const BiplotData& data, const std::vector<std::string>& point_labels,
                              const std::vector<std::string>& vector_labels, const std::vector<int>& shade = {})
{
   double extent = 1e-9;
   for (const auto& [x, y] : data.scores) extent = std::max({extent, std::fabs(x), std::fabs(y)});
   for (const auto& [x, y] : data.loadings) extent = std::max({extent, std::fabs(x), std::fabs(y)});
   extent *= 1.1;
   constexpr double size = 600.0;
   const auto sx = [&](double x) { return size / 2.0 + x / extent * (size / 2.0 - 20.0); };
   const auto sy = [&](double y) { return size / 2.0 - y / extent * (size / 2.0 - 20.0); };
   const auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", v);
      return std::string(buf);
   };
   const auto esc = [](const std::string& s) {
      std::string o;
      for (char c : s) {
         if (c == '&') o += "&amp;";
         else if (c == '<') o += "&lt;";
         else if (c == '>') o += "&gt;";
         else o.push_back(c);
      }
      return o;
   };
   static const char* fills[] = {"#9ecae1", "#4292c6", "#08306b"};

   std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" font-size=\"10\">\n";
   svg += "<line x1=\"0\" y1=\"300.00\" x2=\"600\" y2=\"300.00\" stroke=\"#ccc\"/>\n";
   svg += "<line x1=\"300.00\" y1=\"0\" x2=\"300.00\" y2=\"600\" stroke=\"#ccc\"/>\n";
   for (std::size_t k = 0; k < data.loadings.size(); ++k) {
      const auto [x, y] = data.loadings[k];
      svg += "<line x1=\"300.00\" y1=\"300.00\" x2=\"" + num(sx(x)) + "\" y2=\"" + num(sy(y)) + "\" stroke=\"#d62728\"/>\n";
      if (k < vector_labels.size())
         svg += "<text x=\"" + num(sx(x)) + "\" y=\"" + num(sy(y)) + "\" fill=\"#d62728\">" + esc(vector_labels[k]) + "</text>\n";
   }
   for (std::size_t k = 0; k < data.scores.size(); ++k) {
      const auto [x, y] = data.scores[k];
      const int cls = k < shade.size() ? std::clamp(shade[k], 0, 2) : 1;
      svg += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"4\" fill=\"" + fills[cls] + "\"/>\n";
      if (k < point_labels.size())
         svg += "<text x=\"" + num(sx(x) + 5.0) + "\" y=\"" + num(sy(y) - 5.0) + "\">" + esc(point_labels[k]) + "</text>\n";
   }
   svg += "</svg>\n";
   return svg;
}

/// Tercile class (0 low, 1 medium, 2 high) of each value by rank.
inline std::vector<int> tercile_shades(const std::vector<double>& values)
{
   std::vector<std::size_t> order(values.size());
   std::iota(order.begin(), order.end(), 0);
   std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
   std::vector<int> out(values.size());
   for (std::size_t r = 0; r < order.size(); ++r)
      out[order[r]] = static_cast<int>(3 * r / std::max<std::size_t>(values.size(), 1));
   return out;
}

} // namespace underdog
