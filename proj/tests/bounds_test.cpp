#include <gtest/gtest.h>

#include "tau/bounds.hpp"
#include "tau/errors.hpp"
#include "tau/verify/oracles.hpp"

namespace tau::bounds {
namespace {

constexpr int kDigits = 50;

Real dec(const std::string& s) { return Real(s, Real::bits_for_digits(kDigits)); }

// Relative agreement to 30 significant digits.
void expect_agrees(const Real& value, const std::string& oracle_text) {
  const Real o = dec(oracle_text);
  const Real rel = abs(value - o) / abs(o);
  EXPECT_LT(rel, dec("1e-30")) << value.to_string(40) << " vs " << oracle_text;
}

TEST(KRange, Examples) {
  EXPECT_NEAR(k_range(pow_ui(10, 12)).upper.to_double(), 19.93156856932417, 1e-12);
  EXPECT_EQ(k_range(BigInt(64)).upper, dec("3"));
  EXPECT_NEAR(k_range(pow_ui(10, 6)).upper.to_double(), 9.965784284662087, 1e-12);
  EXPECT_EQ(k_range(BigInt(64)).lower, 3u);
  EXPECT_THROW(k_range(BigInt(1)), DomainError);
  EXPECT_EQ(admissible_k_count(BigInt(64)), 0u);
  EXPECT_EQ(admissible_k_count(pow_ui(10, 6)), 7u);
  EXPECT_EQ(admissible_k_count(pow_ui(10, 12)), 17u);
}

TEST(Formulas, AgreeWithDecimalOracle) {
  for (unsigned e : {6u, 9u, 10u, 12u, 30u}) {
    const BigInt N = pow_ui(10, e);
    expect_agrees(k_range(N).upper, oracle::k_hi(N));
    expect_agrees(a_bound(N), oracle::a_bound(N));
    const PiBracket b = pi_bracket(N);
    expect_agrees(b.lower, oracle::pi_bracket_lower(N));
    expect_agrees(b.upper, oracle::pi_bracket_upper(N));
  }
  for (unsigned k = 3; k <= 60; ++k) expect_agrees(bvdp_count_bound(k), oracle::bvdp_count_bound(k));
  for (unsigned M = 1; M <= 40; ++M) expect_agrees(b_bound(M), oracle::b_bound(M));
}

TEST(Formulas, Examples) {
  EXPECT_GT(bvdp_count_bound(100), bvdp_count_bound(10));
  EXPECT_THROW(bvdp_count_bound(2), DomainError);

  EXPECT_EQ(a_bound(BigInt(1)), dec("0"));
  const Real ln10 = log(dec("10"));
  const Real ln2 = log(dec("2"));
  expect_agrees(a_bound(pow_ui(10, 10)), (dec("1e9") * dec("10") * ln10 / (dec("2") * ln2)).to_string(45));
  // N^{1/10} overtakes log N / (2 log 2) only between 10^12 and 10^15, so
  // A(N) < N fails at the small end of the sampled range.
  for (unsigned e : {6u, 9u, 12u}) {
    const BigInt N = pow_ui(10, e);
    EXPECT_GT(a_bound(N), Real(N, a_bound(N).bits())) << e;
  }
  for (unsigned e = 15; e <= 60; e += 3) {
    const BigInt N = pow_ui(10, e);
    EXPECT_LT(a_bound(N), Real(N, a_bound(N).bits())) << e;
  }

  expect_agrees(b_bound(1), (dec("70") / (dec("22") * ln10)).to_string(45));
  for (unsigned M = 1; M <= 20; ++M) {
    const Real ratio = b_bound(M + 1) / b_bound(M);
    const Real expected = dec("10") * Real(static_cast<long>(M + 1), ratio.bits()) /
                          Real(static_cast<long>(M + 2), ratio.bits());
    EXPECT_LT(abs(ratio - expected), dec("1e-40"));
    EXPECT_GT(b_bound(M), dec("0"));
  }
  EXPECT_THROW(b_bound(0), DomainError);
}

TEST(PiBracket, RatioAndSieveCount) {
  const PiBracket b = pi_bracket(pow_ui(10, 6));
  EXPECT_LT(abs(b.upper / b.lower - dec("11") / dec("9")), dec("1e-45"));
  EXPECT_THROW(pi_bracket(BigInt(1)), DomainError);
  // Signed primes in P_2 with |p| <= 10^6 lie inside the bracket.
  const auto count = oracle::count_signed_primes_in_class(1'000'000, 2);
  const Real c(static_cast<long>(count), b.lower.bits());
  EXPECT_GT(c, b.lower);
  EXPECT_LT(c, b.upper);
}

TEST(Density, NineElevenths) {
  const Fraction f = density_fraction();
  EXPECT_EQ(f, (Fraction{9, 11}));
  EXPECT_EQ(f.numerator * 22, f.denominator * 18);
}

TEST(Dirichlet, PartialSums) {
  const std::vector<std::int64_t> none;
  EXPECT_EQ(dirichlet_partial_sum(none, dec("2")).sum, dec("0"));
  const std::vector<std::int64_t> threes{3, -3};
  EXPECT_LT(abs(dirichlet_partial_sum(threes, dec("2")).sum - dec("2") / dec("9")), dec("1e-45"));
  EXPECT_THROW(dirichlet_partial_sum(threes, dec("1")), DomainError);

  const auto p2 = oracle::signed_primes_in_class(1'000'000, 2);
  const DirichletSum d = dirichlet_partial_sum(p2, dec("1.1"));
  // Truncation at 10^6 is far from the limit; the ratio is small but positive.
  EXPECT_GT(d.ratio, dec("0.005"));
  EXPECT_LT(d.ratio, dec("0.05"));
  expect_agrees(d.normalizer, (dec("2") * log(dec("10"))).to_string(45));
}

TEST(Report, Contents) {
  const BoundReport r = bound_report(pow_ui(10, 12));
  EXPECT_EQ(r.k_lo, 3u);
  EXPECT_EQ(r.per_k_bound.size(), 17u);
  EXPECT_EQ(r.per_k_bound.begin()->first, 3u);
  EXPECT_EQ(r.per_k_bound.rbegin()->first, 19u);
  ASSERT_TRUE(r.M);
  EXPECT_EQ(*r.M, 11u);
  EXPECT_EQ(r.density_fraction, (Fraction{9, 11}));
  EXPECT_FALSE(r.caveats.empty());
  EXPECT_EQ(r.ceiling_half, dec("1e6"));
  EXPECT_LT(r.ceiling_half, r.ceiling_half_plus);
  EXPECT_LT(r.ceiling_half_plus, r.ceiling_nine_tenths);
  EXPECT_FALSE(bound_report(BigInt(50)).M);
}

TEST(Crossover, Monotone) {
  const Crossover plain = find_crossover(1, 200, GapKind::Plain);
  const Crossover per_k = find_crossover(1, 200, GapKind::PerK);
  ASSERT_TRUE(plain.first_positive);
  ASSERT_TRUE(per_k.first_positive);
  EXPECT_LE(*plain.first_positive, *per_k.first_positive);
  EXPECT_GT(bound_gap(*plain.first_positive, GapKind::Plain), dec("0"));
  EXPECT_LE(bound_gap(*plain.first_positive - 1, GapKind::Plain), dec("0"));
  EXPECT_GT(bound_gap(*per_k.first_positive, GapKind::PerK), dec("0"));
  EXPECT_LE(bound_gap(*per_k.first_positive - 1, GapKind::PerK), dec("0"));
  EXPECT_THROW(find_crossover(0, 10, GapKind::Plain), DomainError);
}

}  // namespace
}  // namespace tau::bounds
