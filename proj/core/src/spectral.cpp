#include "tau/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tau/errors.hpp"

namespace tau {

int default_spectral_digits(unsigned k) { return std::max(50, static_cast<int>(4 * k)); }

EvenIndexPoly even_index_poly(unsigned k, unsigned max_k) {
  if (k > max_k) {
    throw BudgetExceeded("even_index_poly: degree " + std::to_string(k) + " exceeds the ceiling " +
                         std::to_string(max_k));
  }
  EvenIndexPoly prev;  // G_0 = 1
  if (k == 0) return prev;
  EvenIndexPoly cur{1, {BigInt(1), BigInt(-1)}};
  for (unsigned m = 2; m <= k; ++m) {
    EvenIndexPoly next{m, std::vector<BigInt>(m + 1)};
    for (unsigned i = 0; i <= m; ++i) {
      BigInt& c = next.coeffs[i];
      if (i < cur.coeffs.size()) c += cur.coeffs[i];                  // y * G_{m-1}
      if (i >= 1 && i - 1 < cur.coeffs.size()) c -= 2 * cur.coeffs[i - 1];  // -2x * G_{m-1}
      if (i >= 2 && i - 2 < prev.coeffs.size()) c -= prev.coeffs[i - 2];    // -x^2 * G_{m-2}
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt eval_even_poly(const EvenIndexPoly& poly, const BigInt& x, const BigInt& y) {
  // acc_j = acc_{j+1} * x + c_j * y^{k-j}
  const unsigned k = poly.k;
  BigInt acc = poly.coeffs[k];
  BigInt y_pow = 1;
  for (unsigned j = k; j-- > 0;) {
    y_pow *= y;
    acc = acc * x + poly.coeffs[j] * y_pow;
  }
  return acc;
}

Real eval_even_poly_on_line(const EvenIndexPoly& poly, const Real& y) {
  // G_k(1, y) = sum_i c_i y^{k-i}; Horner from the y^k coefficient down.
  // Near a root the partial sums are far larger than the result, so work with
  // enough extra bits to cover their size and round once at the end.
  const long y_exp = y.is_zero() ? 0 : std::max<long>(0, mpfr_get_exp(y.get()));
  std::size_t coeff_bits = 0;
  for (const auto& c : poly.coeffs) coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const mpfr_prec_t bits = y.bits() + static_cast<mpfr_prec_t>(poly.k * y_exp + coeff_bits + 32);
  const Real yy(y, bits);
  Real acc(poly.coeffs[0], bits);
  for (unsigned i = 1; i <= poly.k; ++i) acc = acc * yy + Real(poly.coeffs[i], bits);
  return Real(acc, y.bits());
}

BigInt coefficient_one_norm(const EvenIndexPoly& poly) {
  BigInt out = 0;
  for (const auto& c : poly.coeffs) out += abs(c);
  return out;
}

std::string format_poly(const EvenIndexPoly& poly) {
  std::string out;
  const unsigned k = poly.k;
  for (unsigned i = 0; i <= k; ++i) {
    const BigInt& c = poly.coeffs[i];
    if (c == 0) continue;
    std::string monomial;
    auto append_var = [&](char var, unsigned power) {
      if (power == 0) return;
      if (!monomial.empty()) monomial += '*';
      monomial += var;
      if (power > 1) monomial += "^" + std::to_string(power);
    };
    append_var('x', i);
    append_var('y', k - i);

    const BigInt magnitude = abs(c);
    std::string term;
    if (monomial.empty()) {
      term = to_string(magnitude);
    } else if (magnitude == 1) {
      term = monomial;
    } else {
      term = to_string(magnitude) + "*" + monomial;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

RootSet root_set(unsigned k, int precision_digits) {
  if (k == 0) throw DomainError("root_set: k must be positive");
  if (precision_digits < 20) throw DomainError("root_set: precision must be at least 20 digits");
  const mpfr_prec_t bits = Real::bits_for_digits(precision_digits);
  const Real pi = Real::pi(bits);
  const Real denom(static_cast<long>(2 * k + 1), bits);
  const Real four(4, bits);
  RootSet out{k, precision_digits, {}};
  out.alphas.reserve(k);
  for (unsigned j = 1; j <= k; ++j) {
    const Real c = cos(pi * Real(static_cast<long>(j), bits) / denom);
    out.alphas.push_back(four * c * c);
  }
  return out;
}

Real min_gap(unsigned k, int precision_digits) {
  if (k < 2) throw DomainError("min_gap: needs at least two roots (k >= 2)");
  const RootSet roots = root_set(k, precision_digits);
  // Roots are sorted, so the minimum pairwise distance is between neighbours.
  Real best = roots.alphas[0] - roots.alphas[1];
  for (unsigned j = 1; j + 1 < k; ++j) best = min(best, roots.alphas[j] - roots.alphas[j + 1]);
  return best;
}

std::vector<CyclotomicFactor> cyclotomic_factor_magnitudes(const PrimeLocalData& local, unsigned n,
                                                           int precision_digits) {
  if (n < 2) throw DomainError("cyclotomic_factor_magnitudes: n must be at least 2");
  const Real theta = local_angle(local, precision_digits);
  const mpfr_prec_t bits = theta.bits();
  const Real radius = sqrt(Real(local.x_p, bits));  // |alpha_p| = |beta_p| = p^{11/2}
  const Real pi = Real::pi(bits);
  const Real two(2, bits);

  std::vector<CyclotomicFactor> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    // alpha - zeta^j beta = r (e^{i theta} - e^{i(2 pi j/d - theta)}), whose
    // modulus is 2 r |sin(theta - pi j / d)|.
    Real product(1, bits);
    for (unsigned j = 1; j <= d; ++j) {
      if (std::gcd(j, d) != 1) continue;
      const Real angle = theta - pi * Real(static_cast<long>(j), bits) / Real(static_cast<long>(d), bits);
      product *= two * radius * abs(sin(angle));
    }
    out.push_back({d, std::move(product)});
  }
  return out;
}

std::vector<std::pair<unsigned, bool>> growth_check(const PrimeLocalData& local, unsigned k_max) {
  const std::vector<BigInt> powers = tau_prime_powers(local, k_max);
  std::vector<std::pair<unsigned, bool>> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    BigInt two_k = 1;
    two_k <<= k;
    out.emplace_back(k, abs(powers[k]) > two_k);
  }
  return out;
}

RationalApproximant make_approximant(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("make_approximant: zero denominator");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  RationalApproximant out{numerator / g, denominator / g, 0};
  if (out.denominator < 0) {
    out.numerator = -out.numerator;
    out.denominator = -out.denominator;
  }
  out.height = std::max(BigInt(abs(out.numerator)), out.denominator);
  return out;
}

ApproximationQuality approximation_quality(const PrimeLocalData& local, unsigned k,
                                           int precision_digits) {
  if (k == 0) throw DomainError("approximation_quality: k must be positive");
  const RootSet roots = root_set(k, precision_digits);
  const mpfr_prec_t bits = Real::bits_for_digits(precision_digits);

  ApproximationQuality out;
  out.approximant = make_approximant(local.y_p, local.x_p);
  const Real ratio = Real(out.approximant.numerator, bits) / Real(out.approximant.denominator, bits);
  out.best_j = 1;
  out.distance = abs(roots.alphas[0] - ratio);
  for (unsigned j = 2; j <= k; ++j) {
    Real dist = abs(roots.alphas[j - 1] - ratio);
    if (dist < out.distance) {
      out.distance = std::move(dist);
      out.best_j = j;
    }
  }
  const Real h(out.approximant.height, bits);
  out.threshold = Real(1, bits) / (Real(64, bits) * pow(h, Real("2.5", bits)));
  out.triggered = out.distance < out.threshold;
  return out;
}

}  // namespace tau
