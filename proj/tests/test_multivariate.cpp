#include <cmath>

#include <gtest/gtest.h>

#include "underdog/ingest.hpp"
#include "underdog/multivariate.hpp"

using namespace underdog;

namespace
{
Matrix from_rows(const std::vector<std::vector<double>>& rows)
{
   Matrix m(rows.size(), rows.front().size());
   for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
   return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b)
{
   double d = 0.0;
   for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) d = std::max(d, std::fabs(a(r, c) - b(r, c)));
   return d;
}

Matrix reconstruct(const PcaResult& p)
{
   const auto n = p.eigenvalues.size();
   Matrix diag(n, n);
   for (std::size_t k = 0; k < n; ++k) diag(k, k) = p.eigenvalues[k];
   return p.loadings * diag * p.loadings.transpose();
}
} // namespace

TEST(Matrix, ProductAndTranspose)
{
   const auto a = from_rows({{1, 2}, {3, 4}});
   const auto b = a * Matrix::identity(2);
   EXPECT_EQ(a, b);
   EXPECT_EQ((a * a)(1, 0), 15.0);
   EXPECT_EQ(a.transpose()(0, 1), 3.0);
   EXPECT_THROW(a * Matrix(3, 1), Error);
}

TEST(Jacobi, KnownSpectrum)
{
   const auto a = from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 5}});
   const auto e = jacobi_eigen(a);
   ASSERT_EQ(e.values.size(), 3u);
   EXPECT_NEAR(e.values[0], 5.0, 1e-13);
   EXPECT_NEAR(e.values[1], 3.0, 1e-13);
   EXPECT_NEAR(e.values[2], 1.0, 1e-13);
   const auto vtv = e.vectors.transpose() * e.vectors;
   EXPECT_LT(max_abs_diff(vtv, Matrix::identity(3)), 1e-12);
}

TEST(Pca, CollinearPoints)
{
   const auto p = pca(from_rows({{0, 0}, {1, 2}, {2, 4}, {3, 6}}));
   EXPECT_NEAR(p.explained_ratio[0], 1.0, 1e-12);
   EXPECT_NEAR(p.explained_ratio[1], 0.0, 1e-12);
   // Sign convention: largest loading positive.
   EXPECT_GT(p.loadings(1, 0), 0.0);
   EXPECT_NEAR(p.loadings(1, 0), 2.0 / std::sqrt(5.0), 1e-12);
}

TEST(Pca, ReconstructsCovariance)
{
   const auto p = pca(from_rows({{1, 2, 0.5}, {2, 1, 0.1}, {3, 5, 0.7}, {4, 3, 0.2}, {0, 1, 0.9}}));
   EXPECT_LT(max_abs_diff(reconstruct(p), p.covariance), 1e-10);
   double sum = 0.0;
   for (double r : p.explained_ratio) sum += r;
   EXPECT_NEAR(sum, 1.0, 1e-10);
}

TEST(Pca, BundledTableTwoComponents)
{
   const auto t = load_bundled_factors().normalized;
   const auto centered = pca(to_matrix(t));
   EXPECT_NEAR(centered.cumulative_ratio()[1], 0.5578, 5e-4);
   EXPECT_LT(max_abs_diff(reconstruct(centered), centered.covariance), 1e-10);
   const auto standardized = pca(to_matrix(t), true);
   EXPECT_NEAR(standardized.cumulative_ratio()[1], 0.5426, 5e-4);
}

TEST(Pca, Errors)
{
   EXPECT_THROW(pca(from_rows({{1, 2}})), Error);
   EXPECT_THROW(pca(from_rows({{1, 2}, {1, 3}}), true), Error);
   FactorsTable gap{{"a", "b"}, {"X", "Y"}, {{1.0, std::nullopt}, {2.0, 3.0}}};
   try {
      to_matrix(gap);
      FAIL();
   }
   catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateMatrix);
   }
}

TEST(Biplot, ScalingAndShape)
{
   const auto t = load_bundled_factors().normalized;
   const auto p = pca(to_matrix(t));
   const auto one = biplot_data(p, 1.0);
   const auto two = biplot_data(p, 2.0);
   ASSERT_EQ(one.scores.size(), 12u);
   ASSERT_EQ(one.loadings.size(), 14u);
   for (std::size_t k = 0; k < 14; ++k) {
      EXPECT_EQ(one.loadings[k].first, p.loadings(k, 0));
      EXPECT_EQ(one.loadings[k].second, p.loadings(k, 1));
      EXPECT_EQ(two.loadings[k].first, 2.0 * one.loadings[k].first);
      EXPECT_EQ(two.loadings[k].second, 2.0 * one.loadings[k].second);
   }
   const auto svg = biplot_svg(two, t.sports, t.factors, tercile_shades(std::vector<double>(12, 0.5)));
   EXPECT_TRUE(svg.starts_with("<svg"));
   EXPECT_NE(svg.find("NRAM/NRPM"), std::string::npos);
   EXPECT_NE(svg.find("Water Polo"), std::string::npos);
}

TEST(Biplot, NeedsTwoComponents)
{
   PcaResult p;
   p.loadings = Matrix(3, 1);
   try {
      biplot_data(p, 2.0);
      FAIL();
   }
   catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::TooFewComponents);
   }
}

TEST(Biplot, TercileShades)
{
   EXPECT_EQ(tercile_shades({0.3, 0.1, 0.2, 0.9, 0.5, 0.4}), (std::vector<int>{1, 0, 0, 2, 2, 1}));
}
