#include <gtest/gtest.h>

#include "tau/congruence.hpp"
#include "tau/errors.hpp"
#include "tau/hecke.hpp"
#include "tau/primes.hpp"
#include "tau/series.hpp"

namespace tau {
namespace {

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 23), 1);
  EXPECT_EQ(legendre(5, 23), -1);
  EXPECT_EQ(legendre(23, 23), 0);
  EXPECT_EQ(legendre(-1, 23), -1);
  EXPECT_THROW(legendre(2, 22), DomainError);
}

TEST(Legendre, EulerCriterion) {
  for (long a = -60; a <= 60; ++a) {
    const unsigned r = mod_nonneg(BigInt(a), 23);
    unsigned pw = 1;
    for (int i = 0; i < 11; ++i) pw = pw * r % 23;
    const int expected = r == 0 ? 0 : (pw == 1 ? 1 : -1);
    EXPECT_EQ(legendre(a, 23), expected) << a;
  }
}

TEST(Classify, Examples) {
  const Class23 c59 = classify_mod23(59);
  EXPECT_EQ(c59.tag, Class23Tag::PrincipalForm);
  ASSERT_TRUE(c59.witness);
  EXPECT_EQ(*c59.witness, (std::pair<std::uint64_t, std::uint64_t>{6, 1}));
  EXPECT_EQ(classify_mod23(5).tag, Class23Tag::NonResidue);
  EXPECT_EQ(classify_mod23(2).tag, Class23Tag::SplitNonPrincipal);
  EXPECT_FALSE(classify_mod23(2).witness);
  EXPECT_EQ(classify_mod23(23).tag, Class23Tag::IsTwentyThree);
  EXPECT_EQ(classify_mod23(-59).tag, Class23Tag::PrincipalForm);
  EXPECT_THROW(classify_mod23(25), DomainError);
}

TEST(Classify, WitnessesAreValid) {
  for (std::uint64_t p : primes_up_to(20000)) {
    const Class23 c = classify_mod23(static_cast<std::int64_t>(p));
    if (c.tag == Class23Tag::PrincipalForm) {
      ASSERT_TRUE(c.witness);
      const auto [a, b] = *c.witness;
      EXPECT_EQ(a * a + 23 * b * b, p);
      EXPECT_GE(b, 1u);
    } else {
      EXPECT_FALSE(c.witness);
    }
  }
}

TEST(Classify, PredictsTauModulo23) {
  const TauTable t = delta_series(3000);
  for (std::uint64_t p : primes_up_to(3000)) {
    const Class23 c = classify_mod23(static_cast<std::int64_t>(p));
    if (c.tag == Class23Tag::IsTwentyThree) continue;
    EXPECT_EQ(tau_mod23(c, 1), mod_nonneg(t[p], 23)) << p;
  }
}

TEST(TauMod23, Examples) {
  EXPECT_EQ(tau_mod23({Class23Tag::PrincipalForm, std::pair<std::uint64_t, std::uint64_t>{6, 1}}, 4), 5u);
  EXPECT_EQ(tau_mod23({Class23Tag::NonResidue, {}}, 0), 1u);
  EXPECT_EQ(tau_mod23({Class23Tag::SplitNonPrincipal, {}}, 5), 0u);
  EXPECT_THROW(tau_mod23({Class23Tag::IsTwentyThree, {}}, 1), DomainError);
}

TEST(TauMod23, ClosedPatterns) {
  const Class23 principal{Class23Tag::PrincipalForm, std::pair<std::uint64_t, std::uint64_t>{6, 1}};
  const Class23 nonres{Class23Tag::NonResidue, {}};
  const Class23 split{Class23Tag::SplitNonPrincipal, {}};
  const unsigned period3[] = {1, 22, 0};
  for (std::uint64_t k = 0; k <= 500; ++k) {
    EXPECT_EQ(tau_mod23(principal, k), (k + 1) % 23);
    EXPECT_EQ(tau_mod23(nonres, k), k % 2 == 0 ? 1u : 0u);
    EXPECT_EQ(tau_mod23(split, k), period3[k % 3]);
  }
}

TEST(TauMod23, MatchesExactPowers) {
  const TauTable t = delta_series(100);
  for (std::uint64_t p : primes_up_to(100)) {
    if (p == 23) continue;
    const Class23 c = classify_mod23(static_cast<std::int64_t>(p));
    const auto powers = tau_prime_powers(make_local(t, p), 40);
    for (unsigned k = 0; k <= 40; ++k) EXPECT_EQ(tau_mod23(c, k), mod_nonneg(powers[k], 23)) << p << "^" << k;
  }
}

TEST(AllowedResidues, Examples) {
  EXPECT_EQ(allowed_residues_for_prime_value(1), (ResidueSet23{0, 1, 3, 22}));
  EXPECT_EQ(allowed_residues_for_prime_value(2), (ResidueSet23{0, 1, 5, 22}));
  EXPECT_EQ(allowed_residues_for_prime_value(11), (ResidueSet23{0, 1, 22}));
  EXPECT_THROW(allowed_residues_for_prime_value(0), DomainError);
}

TEST(ExcludedSet, Contents) {
  const ResidueSet23& b = excluded_b_set();
  EXPECT_EQ(b.size(), 18u);
  EXPECT_TRUE(b.contains(2));
  EXPECT_FALSE(b.contains(3));
  EXPECT_FALSE(b.contains(5));
  EXPECT_FALSE(b.contains(0));
  EXPECT_FALSE(b.contains(1));
  EXPECT_FALSE(b.contains(22));
  // Never reachable at k = 1 or 2.
  for (unsigned k : {1u, 2u}) {
    for (unsigned r : allowed_residues_for_prime_value(k)) EXPECT_FALSE(b.contains(r));
  }
}

TEST(Parity, Law) {
  EXPECT_TRUE(parity_law(2, -24));
  EXPECT_TRUE(parity_law(9, -113643));
  EXPECT_TRUE(parity_law(1, 1));
  EXPECT_FALSE(parity_law(2, 25));
  EXPECT_TRUE(is_odd_square(63001));
  EXPECT_FALSE(is_odd_square(4));
  EXPECT_FALSE(is_odd_square(8));
  const TauTable t = delta_series(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) EXPECT_TRUE(parity_law(n, t[n])) << n;
}

TEST(Class23Tag, RoundTripsNames) {
  for (auto tag : {Class23Tag::IsTwentyThree, Class23Tag::NonResidue, Class23Tag::PrincipalForm,
                   Class23Tag::SplitNonPrincipal}) {
    EXPECT_EQ(class23_tag_from_string(to_string(tag)), tag);
  }
  EXPECT_THROW(class23_tag_from_string("Other"), DomainError);
}

}  // namespace
}  // namespace tau
