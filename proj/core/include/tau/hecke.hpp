#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tau/bigint.hpp"
#include "tau/real.hpp"
#include "tau/series.hpp"

namespace tau {

// Everything downstream needs about one prime: tau(p), x_p = p^11 and
// y_p = tau(p)^2. The local roots alpha_p, beta_p of z^2 - tau(p) z + p^11
// are implied by (tau_p, x_p).
struct PrimeLocalData {
  std::uint64_t p = 0;
  BigInt tau_p;
  BigInt x_p;
  BigInt y_p;
};

// Throws DomainError if p is not prime.
PrimeLocalData make_local(std::uint64_t p, BigInt tau_p);
// Reads tau(p) from the table; throws std::out_of_range if p > limit.
PrimeLocalData make_local(const TauTable& table, std::uint64_t p);

struct Factorization {
  std::uint64_t n = 1;
  // Strictly increasing primes with exponents >= 1.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

struct FactorizeOptions {
  std::uint64_t max_n = 1'000'000'000'000ULL;
};

// Trial division on a 2,3,5 wheel. Throws BudgetExceeded above max_n and
// DomainError for n = 0.
Factorization factorize(std::uint64_t n, const FactorizeOptions& options = {});

// tau(p^k) through tau(p^m) = tau(p) tau(p^{m-1}) - p^11 tau(p^{m-2}).
BigInt tau_prime_power(const PrimeLocalData& local, unsigned k);

// tau(p^0), ..., tau(p^k_max).
std::vector<BigInt> tau_prime_powers(const PrimeLocalData& local, unsigned k_max);

// Multiplicative reconstruction. Throws MissingPrime when a prime of f has
// no entry in tau_at_primes.
BigInt tau_of_n(const Factorization& f, const std::map<std::uint64_t, BigInt>& tau_at_primes);

// tau(p)^2 <= 4 p^11, compared exactly.
bool deligne_check(const PrimeLocalData& local);

// Relative gap between the exact tau(p^k) and the trigonometric closed form
// p^{11k/2} sin((k+1) theta) / sin(theta), theta = arccos(tau(p) / (2 p^{11/2})).
// Requires tau(p)^2 < 4 p^11 and k >= 1; throws DomainError otherwise.
Real closed_form_residual(const PrimeLocalData& local, unsigned k, int precision_digits);

// theta_p at the given precision. Same precondition as above.
Real local_angle(const PrimeLocalData& local, int precision_digits);

}  // namespace tau
