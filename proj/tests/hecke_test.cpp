#include <gtest/gtest.h>

#include <map>

#include "tau/errors.hpp"
#include "tau/hecke.hpp"
#include "tau/primes.hpp"
#include "tau/series.hpp"

namespace tau {
namespace {

using Factors = std::vector<std::pair<std::uint64_t, unsigned>>;

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(63001).factors, (Factors{{251, 2}}));
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(6048).factors, (Factors{{2, 5}, {3, 3}, {7, 1}}));
  EXPECT_EQ(factorize(999999999989ULL).factors, (Factors{{999999999989ULL, 1}}));
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(1'000'000'000'001ULL), BudgetExceeded);
}

TEST(Factorize, ReassemblesEveryNumberUpTo5000) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : factorize(n).factors) {
      EXPECT_TRUE(is_prime_u64(p));
      EXPECT_GT(p, last);
      last = p;
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(PrimePower, Recurrence) {
  EXPECT_EQ(tau_prime_power(make_local(2, -24), 2), -1472);
  EXPECT_EQ(tau_prime_power(make_local(3, 252), 2), -113643);
  EXPECT_EQ(tau_prime_power(make_local(7, -16744), 0), 1);
  EXPECT_EQ(tau_prime_power(make_local(7, -16744), 1), -16744);
  EXPECT_THROW(make_local(4, 1), DomainError);
}

TEST(PrimePower, AgreesWithSeries) {
  const TauTable t = delta_series(2187);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
    const auto powers = tau_prime_powers(make_local(t, p), 20);
    std::uint64_t q = 1;
    for (unsigned k = 0; k < powers.size(); ++k, q *= p) {
      if (q > t.limit()) break;
      EXPECT_EQ(powers[k], t[q]) << p << "^" << k;
    }
  }
}

TEST(TauOfN, Multiplicative) {
  const std::map<std::uint64_t, BigInt> at{{2, -24}, {3, 252}};
  EXPECT_EQ(tau_of_n(factorize(6), at), -6048);
  EXPECT_EQ(tau_of_n(factorize(1), at), 1);
  EXPECT_EQ(tau_of_n(factorize(4), at), -1472);
  EXPECT_THROW(tau_of_n(factorize(10), at), MissingPrime);

  const TauTable t = delta_series(1000);
  std::map<std::uint64_t, BigInt> all;
  for (std::uint64_t p : primes_up_to(1000)) all[p] = t[p];
  for (std::uint64_t n = 1; n <= 1000; ++n) EXPECT_EQ(tau_of_n(factorize(n), all), t[n]) << n;
}

TEST(Deligne, IntegerComparison) {
  EXPECT_TRUE(deligne_check(make_local(2, -24)));
  EXPECT_FALSE(deligne_check(make_local(2, 91)));
  EXPECT_TRUE(deligne_check(make_local(2, 90)));
  EXPECT_TRUE(deligne_check(make_local(3, 0)));
  const TauTable t = delta_series(3000);
  for (std::uint64_t p : primes_up_to(3000)) EXPECT_TRUE(deligne_check(make_local(t, p))) << p;
}

TEST(ClosedForm, ResidualsAreTiny) {
  const Real tol(std::string("1e-30"), Real::bits_for_digits(40));
  EXPECT_LT(closed_form_residual(make_local(2, -24), 2, 40), tol);
  EXPECT_LT(closed_form_residual(make_local(5, 4830), 3, 40), tol);
  EXPECT_LT(closed_form_residual(make_local(2, -24), 1, 40), tol);
  const TauTable t = delta_series(60);
  for (std::uint64_t p : primes_up_to(60)) {
    for (unsigned k = 1; k <= 25; ++k) {
      EXPECT_LT(closed_form_residual(make_local(t, p), k, 80), Real(std::string("1e-60"), 300)) << p << " " << k;
    }
  }
  EXPECT_THROW(closed_form_residual(make_local(2, -24), 0, 40), DomainError);
}

TEST(LocalAngle, RejectsDegenerateDiscriminant) {
  EXPECT_THROW(local_angle(make_local(2, 91), 40), DomainError);
  const Real theta = local_angle(make_local(2, -24), 40);
  EXPECT_GT(theta, Real(0L, theta.bits()));
  EXPECT_LT(theta, Real::pi(theta.bits()));
}

}  // namespace
}  // namespace tau
