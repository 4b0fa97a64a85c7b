#include "tau/hecke.hpp"

#include <array>
#include <string>

#include "tau/errors.hpp"
#include "tau/primes.hpp"

namespace tau {

namespace {

void require_strict_deligne(const PrimeLocalData& local) {
  if (local.y_p >= 4 * local.x_p) {
    throw DomainError("degenerate discriminant: tau(" + std::to_string(local.p) +
                      ")^2 >= 4 p^11, the local roots are not complex conjugates");
  }
}

}  // namespace

PrimeLocalData make_local(std::uint64_t p, BigInt tau_p) {
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  PrimeLocalData out;
  out.p = p;
  out.x_p = pow_ui(static_cast<unsigned long>(p), 11);
  out.y_p = tau_p * tau_p;
  out.tau_p = std::move(tau_p);
  return out;
}

PrimeLocalData make_local(const TauTable& table, std::uint64_t p) {
  return make_local(p, table[static_cast<std::size_t>(p)]);
}

Factorization factorize(std::uint64_t n, const FactorizeOptions& options) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  if (n > options.max_n) {
    throw BudgetExceeded("factorize: " + std::to_string(n) + " exceeds the trial-division budget " +
                         std::to_string(options.max_n));
  }
  Factorization out;
  out.n = n;
  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(d, e);
  };
  strip(2);
  strip(3);
  strip(5);
  // Offsets between consecutive residues coprime to 30, starting at 7.
  constexpr std::array<std::uint64_t, 8> kWheel = {4, 2, 4, 2, 4, 6, 2, 6};
  std::size_t i = 0;
  for (std::uint64_t d = 7; d * d <= n; d += kWheel[i++ % kWheel.size()]) strip(d);
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> tau_prime_powers(const PrimeLocalData& local, unsigned k_max) {
  std::vector<BigInt> out;
  out.reserve(k_max + 1);
  out.emplace_back(1);
  if (k_max >= 1) out.push_back(local.tau_p);
  for (unsigned m = 2; m <= k_max; ++m) {
    out.push_back(local.tau_p * out[m - 1] - local.x_p * out[m - 2]);
  }
  return out;
}

BigInt tau_prime_power(const PrimeLocalData& local, unsigned k) {
  if (k == 0) return 1;
  BigInt prev = 1;
  BigInt cur = local.tau_p;
  for (unsigned m = 2; m <= k; ++m) {
    BigInt next = local.tau_p * cur - local.x_p * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt tau_of_n(const Factorization& f, const std::map<std::uint64_t, BigInt>& tau_at_primes) {
  BigInt out = 1;
  for (const auto& [p, e] : f.factors) {
    auto it = tau_at_primes.find(p);
    if (it == tau_at_primes.end()) throw MissingPrime(static_cast<unsigned long>(p));
    out *= tau_prime_power(make_local(p, it->second), e);
  }
  return out;
}

bool deligne_check(const PrimeLocalData& local) { return local.y_p <= 4 * local.x_p; }

Real local_angle(const PrimeLocalData& local, int precision_digits) {
  require_strict_deligne(local);
  const mpfr_prec_t bits = Real::bits_for_digits(precision_digits);
  const Real root_x = sqrt(Real(local.x_p, bits));
  return acos(Real(local.tau_p, bits) / (Real(2, bits) * root_x));
}

Real closed_form_residual(const PrimeLocalData& local, unsigned k, int precision_digits) {
  if (k == 0) throw DomainError("closed_form_residual: k must be positive");
  const Real theta = local_angle(local, precision_digits);
  const mpfr_prec_t bits = theta.bits();

  const BigInt x_pow_k = pow_ui(static_cast<unsigned long>(local.p), 11UL * k);
  const Real scale = sqrt(Real(x_pow_k, bits));  // p^{11k/2}
  const Real closed =
      scale * sin(Real(static_cast<long>(k) + 1, bits) * theta) / sin(theta);

  const BigInt exact = tau_prime_power(local, k);
  const Real exact_r(exact, bits);
  if (exact == 0) {
    const Real epsilon = scale * pow10(-(precision_digits - 5), bits);
    if (abs(closed) <= epsilon) return Real(bits);
    return abs(closed) / Real(bits);  // +inf: a zero that the closed form does not see
  }
  return abs(exact_r - closed) / abs(exact_r);
}

}  // namespace tau
