#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tau/bigint.hpp"
#include "tau/real.hpp"

// Explicit quantities of the counting argument for prime non-values of tau.
// All logarithms are natural. Conditions involving the unspecified absolute
// constants (N > c4, x > c5, M > c6) are never evaluated; they travel with
// each report as caveat strings.
namespace tau::bounds {

inline constexpr int kDefaultDigits = 50;

struct KRange {
  unsigned lower = 3;
  Real upper;  // log N / (2 log 2), exclusive
};

struct PiBracket {
  Real lower;  // (9/10) x / (11 log x)
  Real upper;  // (11/10) x / (11 log x)
};

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct DirichletSum {
  Real sum;         // sum of 1 / |p|^s
  Real normalizer;  // 2 log(1 / (s - 1))
  Real ratio;       // sum / normalizer
};

struct BoundReport {
  BigInt N;
  unsigned k_lo = 3;
  Real k_hi;
  // k in [3, k_hi) -> solution-count bound for that k.
  std::map<unsigned, Real> per_k_bound;
  Real A;
  // B at M = floor(log10 N) - 1 (N = 10^{M+1} when N is a power of ten).
  std::optional<unsigned> M;
  std::optional<Real> B;
  PiBracket pi_bracket;
  Fraction density_fraction;
  // N^{1/2}, N^{1/2} + N^{3/11}, N^{9/10}: per-k ceilings on |P cap X_{2k} cap [-N, N]|.
  Real ceiling_half;
  Real ceiling_half_plus;
  Real ceiling_nine_tenths;
  std::vector<std::string> caveats;
};

// N >= 2.
KRange k_range(const BigInt& N, int digits = kDefaultDigits);

// Number of integers k with 3 <= k < k_hi, i.e. max(0, ceil(k_hi) - 3).
unsigned admissible_k_count(const BigInt& N, int digits = kDefaultDigits);

// 4 log((k+1) log 4) + 96000 (log k)^2 log(200 log k). Throws DomainError for k <= 2.
Real bvdp_count_bound(unsigned k, int digits = kDefaultDigits);

// N^{9/10} log N / (2 log 2). N >= 1.
Real a_bound(const BigInt& N, int digits = kDefaultDigits);

// 7 * 10^M / (11 log 10 (M + 1)). M >= 1.
Real b_bound(unsigned M, int digits = kDefaultDigits);

// Throws DomainError for x <= 1.
PiBracket pi_bracket(const Real& x);
PiBracket pi_bracket(const BigInt& x, int digits = kDefaultDigits);

// |excluded residues| / 22, reduced: 9/11.
Fraction density_fraction();

// Throws DomainError for s <= 1.
DirichletSum dirichlet_partial_sum(std::span<const std::int64_t> signed_primes, const Real& s);

BoundReport bound_report(const BigInt& N, int digits = kDefaultDigits);

// B(M) - A(10^{M+1}) * factor(M), where factor is 1 for the plain gap and
// the admissible-k count for the per-k version.
enum class GapKind { Plain, PerK };
Real bound_gap(unsigned M, GapKind kind, int digits = kDefaultDigits);

struct Crossover {
  unsigned scanned_from = 0;
  unsigned scanned_to = 0;
  // Smallest M such that the gap is positive for every M' in [M, scanned_to].
  std::optional<unsigned> first_positive;
};

Crossover find_crossover(unsigned M_from, unsigned M_to, GapKind kind, int digits = kDefaultDigits);

const std::vector<std::string>& standard_caveats();

}  // namespace tau::bounds
