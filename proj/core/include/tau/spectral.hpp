#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tau/bigint.hpp"
#include "tau/hecke.hpp"
#include "tau/real.hpp"

namespace tau {

// G_k(x, y) = F_{2k}(x, y), homogeneous of degree k with
// tau(p^{2k}) = G_k(p^11, tau(p)^2). coeffs[i] multiplies x^i y^{k-i}.
struct EvenIndexPoly {
  unsigned k = 0;
  std::vector<BigInt> coeffs{BigInt(1)};
};

// alpha_{j,k} = 4 cos^2(pi j / (2k + 1)) for j = 1..k, strictly decreasing.
struct RootSet {
  unsigned k = 0;
  int precision_digits = 0;
  std::vector<Real> alphas;
};

// y / x in lowest terms, denominator positive; height = max(|num|, |den|).
struct RationalApproximant {
  BigInt numerator;
  BigInt denominator;
  BigInt height;
};

struct CyclotomicFactor {
  unsigned d = 0;
  Real magnitude;  // |Phi_d(alpha_p, beta_p)|
};

struct ApproximationQuality {
  RationalApproximant approximant;
  unsigned best_j = 0;  // 1-based index of the closest root
  Real distance;
  Real threshold;  // 1 / (64 h^{5/2})
  bool triggered = false;
};

inline constexpr unsigned kMaxEvenIndexDegree = 10'000;

// max(50, 4k): root separation shrinks like k^-2.
int default_spectral_digits(unsigned k);

// Built from G_k = (y - 2x) G_{k-1} - x^2 G_{k-2}, G_0 = 1, G_1 = y - x.
// k = 0 returns the constant 1. Throws BudgetExceeded above max_k.
EvenIndexPoly even_index_poly(unsigned k, unsigned max_k = kMaxEvenIndexDegree);

BigInt eval_even_poly(const EvenIndexPoly& poly, const BigInt& x, const BigInt& y);

// G_k(1, y) at a real point.
Real eval_even_poly_on_line(const EvenIndexPoly& poly, const Real& y);

// Sum of |coefficients|.
BigInt coefficient_one_norm(const EvenIndexPoly& poly);

// "y^2 - 3*x*y + x^2" style rendering, descending powers of y.
std::string format_poly(const EvenIndexPoly& poly);

// Throws DomainError for k = 0 or precision below 20 digits.
RootSet root_set(unsigned k, int precision_digits);

// d_k = min_{i != j} |alpha_{i,k} - alpha_{j,k}|. Throws DomainError for k < 2.
Real min_gap(unsigned k, int precision_digits);
inline Real min_gap(unsigned k) { return min_gap(k, default_spectral_digits(k)); }

// For each divisor d > 1 of n, |Phi_d(alpha_p, beta_p)|, the product over the
// phi(d) primitive d-th roots zeta of |alpha_p - zeta beta_p|. The product of
// all magnitudes equals |tau(p^{n-1})|. Requires tau(p)^2 < 4 p^11 and n >= 2.
std::vector<CyclotomicFactor> cyclotomic_factor_magnitudes(const PrimeLocalData& local, unsigned n,
                                                           int precision_digits);

// (k, |tau(p^k)| > 2^k) for k = 1..k_max, exact comparisons.
std::vector<std::pair<unsigned, bool>> growth_check(const PrimeLocalData& local, unsigned k_max);

RationalApproximant make_approximant(const BigInt& numerator, const BigInt& denominator);

// Closest root alpha_{j,k} to y_p / x_p and whether it lies within the
// 1 / (64 h^{5/2}) window. Throws DomainError for k = 0.
ApproximationQuality approximation_quality(const PrimeLocalData& local, unsigned k,
                                           int precision_digits);

}  // namespace tau
