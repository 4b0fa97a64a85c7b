#include <gtest/gtest.h>

#include <vector>

#include "tau/errors.hpp"
#include "tau/series.hpp"
#include "tau/verify/oracles.hpp"

namespace tau {
namespace {

std::vector<std::pair<std::size_t, long>> terms_of(const SparseCubeSeries& s) {
  std::vector<std::pair<std::size_t, long>> out;
  for (const auto& t : s.terms()) out.emplace_back(t.exponent, t.coefficient);
  return out;
}

TEST(JacobiCube, SmallLimits) {
  using V = std::vector<std::pair<std::size_t, long>>;
  EXPECT_EQ(terms_of(jacobi_cube(1)), (V{{0, 1}, {1, -3}}));
  EXPECT_EQ(terms_of(jacobi_cube(6)), (V{{0, 1}, {1, -3}, {3, 5}, {6, -7}}));
  EXPECT_EQ(jacobi_cube(6).coefficient(0), 1);
  EXPECT_EQ(jacobi_cube(6).coefficient(2), 0);
  EXPECT_THROW(jacobi_cube(0), DomainError);
}

TEST(JacobiCube, MatchesBruteForceProduct) {
  for (std::size_t limit : {1u, 2u, 10u, 57u, 300u}) {
    const auto dense = jacobi_cube(limit).to_dense();
    const auto oracle = oracle::naive_cube(limit);
    ASSERT_EQ(dense.size(), oracle.size());
    for (std::size_t i = 0; i < dense.size(); ++i) EXPECT_EQ(dense[i], oracle[i]) << "limit " << limit << " e " << i;
  }
}

TEST(MultiplyBySparse, HandConvolutions) {
  const std::vector<BigInt> one{1};
  const auto a = multiply_by_sparse(one, jacobi_cube(3), 3);
  EXPECT_EQ(a, (std::vector<BigInt>{1, -3, 0, 5}));

  const std::vector<BigInt> zeros(8, 0);
  for (const auto& c : multiply_by_sparse(zeros, jacobi_cube(7), 7)) EXPECT_EQ(c, 0);

  const std::vector<BigInt> cube1{1, -3};
  EXPECT_EQ(multiply_by_sparse(cube1, jacobi_cube(1), 2), (std::vector<BigInt>{1, -6, 9}));
}

TEST(DeltaSeries, KnownCoefficients) {
  const TauTable t = delta_series(9);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t[2], -24);
  EXPECT_EQ(t[3], 252);
  EXPECT_EQ(t[4], -1472);
  EXPECT_EQ(t[5], 4830);
  EXPECT_EQ(t[9], -113643);
  EXPECT_EQ(delta_series(1).limit(), 1u);
  EXPECT_EQ(delta_series(1)[1], 1);
  EXPECT_THROW(t[0], std::out_of_range);
  EXPECT_THROW(t[10], std::out_of_range);
}

TEST(DeltaSeries, MatchesNaiveProduct) {
  const std::size_t limit = 300;
  const TauTable t = delta_series(limit);
  const auto oracle = oracle::naive_delta(limit);
  for (std::size_t n = 1; n <= limit; ++n) ASSERT_EQ(t[n], oracle[n - 1]) << "n = " << n;
}

TEST(DeltaSeries, PrefixStable) {
  // A longer table agrees with a shorter one on the common range.
  const TauTable small = delta_series(97);
  const TauTable big = delta_series(400);
  for (std::size_t n = 1; n <= 97; ++n) EXPECT_EQ(small[n], big[n]);
}

TEST(DeltaSeries, Budget) {
  SeriesOptions opts;
  opts.max_limit = 100;
  EXPECT_THROW(delta_series(101, opts), BudgetExceeded);
  EXPECT_THROW(delta_series(0), DomainError);
}

}  // namespace
}  // namespace tau
