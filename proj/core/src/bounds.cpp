#include "tau/bounds.hpp"

#include <numeric>

#include "tau/congruence.hpp"
#include "tau/errors.hpp"

namespace tau::bounds {

namespace {

mpfr_prec_t bits_of(int digits) { return Real::bits_for_digits(digits); }

Real ratio(long num, long den, mpfr_prec_t bits) { return Real(num, bits) / Real(den, bits); }

}  // namespace

KRange k_range(const BigInt& N, int digits) {
  if (N < 2) throw DomainError("k_range: N must be at least 2");
  const mpfr_prec_t bits = bits_of(digits);
  return {3, log(Real(N, bits)) / (Real(2, bits) * log(Real(2, bits)))};
}

unsigned admissible_k_count(const BigInt& N, int digits) {
  const KRange range = k_range(N, digits);
  Real ceiling(range.upper.bits());
  mpfr_ceil(ceiling.get(), range.upper.get());
  const long c = mpfr_get_si(ceiling.get(), MPFR_RNDN);
  return c > 3 ? static_cast<unsigned>(c - 3) : 0U;
}

Real bvdp_count_bound(unsigned k, int digits) {
  if (k <= 2) throw DomainError("bvdp_count_bound: k must be at least 3");
  const mpfr_prec_t bits = bits_of(digits);
  const Real kk(static_cast<long>(k), bits);
  const Real log_k = log(kk);
  const Real first = Real(4, bits) * log((kk + Real(1, bits)) * log(Real(4, bits)));
  const Real second = Real(96000, bits) * log_k * log_k * log(Real(200, bits) * log_k);
  return first + second;
}

Real a_bound(const BigInt& N, int digits) {
  if (N < 1) throw DomainError("a_bound: N must be positive");
  const mpfr_prec_t bits = bits_of(digits);
  const Real n(N, bits);
  return pow(n, ratio(9, 10, bits)) * log(n) / (Real(2, bits) * log(Real(2, bits)));
}

Real b_bound(unsigned M, int digits) {
  if (M < 1) throw DomainError("b_bound: M must be at least 1");
  const mpfr_prec_t bits = bits_of(digits);
  return Real(7, bits) * pow10(static_cast<long>(M), bits) /
         (Real(11, bits) * log(Real(10, bits)) * Real(static_cast<long>(M) + 1, bits));
}

PiBracket pi_bracket(const Real& x) {
  if (x <= Real(1, x.bits())) throw DomainError("pi_bracket: x must exceed 1");
  const mpfr_prec_t bits = x.bits();
  const Real base = x / (Real(11, bits) * log(x));
  return {ratio(9, 10, bits) * base, ratio(11, 10, bits) * base};
}

PiBracket pi_bracket(const BigInt& x, int digits) { return pi_bracket(Real(x, bits_of(digits))); }

Fraction density_fraction() {
  const std::uint64_t excluded = excluded_b_set().size();
  const std::uint64_t nonzero_classes = 22;
  const std::uint64_t g = std::gcd(excluded, nonzero_classes);
  return {excluded / g, nonzero_classes / g};
}

DirichletSum dirichlet_partial_sum(std::span<const std::int64_t> signed_primes, const Real& s) {
  const mpfr_prec_t bits = s.bits();
  const Real one(1, bits);
  if (s <= one) throw DomainError("dirichlet_partial_sum: s must exceed 1");
  Real sum(bits);
  for (std::int64_t p : signed_primes) {
    const Real magnitude(p < 0 ? -p : p, bits);
    sum += one / pow(magnitude, s);
  }
  Real normalizer = Real(2, bits) * log(one / (s - one));
  Real r = sum / normalizer;
  return {std::move(sum), std::move(normalizer), std::move(r)};
}

const std::vector<std::string>& standard_caveats() {
  static const std::vector<std::string> kCaveats = {
      "per-k count bounds and N^{1/2} + N^{3/11} ceilings hold only for N > c4 (constant not explicit)",
      "pi_bracket holds only for x > c5 (constant not explicit)",
      "B - A > N / (5 log N) only for M > c6 (constant not explicit)",
      "k >= log N / (2 log 2) contributes nothing only for N > 2^{2 c1^2 - 1} (constant not explicit)",
  };
  return kCaveats;
}

BoundReport bound_report(const BigInt& N, int digits) {
  const mpfr_prec_t bits = bits_of(digits);
  BoundReport out;
  out.N = N;
  const KRange range = k_range(N, digits);
  out.k_lo = range.lower;
  out.k_hi = range.upper;
  for (unsigned k = 3; Real(static_cast<long>(k), bits) < out.k_hi; ++k) {
    out.per_k_bound.emplace(k, bvdp_count_bound(k, digits));
  }
  out.A = a_bound(N, digits);
  const auto decimal_digits = static_cast<unsigned>(to_string(abs(N)).size());
  if (decimal_digits >= 3) {
    out.M = decimal_digits - 2;
    out.B = b_bound(*out.M, digits);
  }
  out.pi_bracket = pi_bracket(N, digits);
  out.density_fraction = density_fraction();
  const Real n(N, bits);
  out.ceiling_half = sqrt(n);
  out.ceiling_half_plus = out.ceiling_half + pow(n, ratio(3, 11, bits));
  out.ceiling_nine_tenths = pow(n, ratio(9, 10, bits));
  out.caveats = standard_caveats();
  return out;
}

Real bound_gap(unsigned M, GapKind kind, int digits) {
  const BigInt N = pow_ui(10, M + 1);
  Real a = a_bound(N, digits);
  if (kind == GapKind::PerK) {
    a *= Real(static_cast<long>(admissible_k_count(N, digits)), a.bits());
  }
  return b_bound(M, digits) - a;
}

Crossover find_crossover(unsigned M_from, unsigned M_to, GapKind kind, int digits) {
  if (M_from < 1 || M_to < M_from) throw DomainError("find_crossover: need 1 <= M_from <= M_to");
  Crossover out{M_from, M_to, std::nullopt};
  for (unsigned M = M_to + 1; M-- > M_from;) {
    if (bound_gap(M, kind, digits).sign() <= 0) break;
    out.first_positive = M;
  }
  return out;
}

}  // namespace tau::bounds
