#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tau/bigint.hpp"

namespace tau {

// One nonzero term of the cube series.
struct SparseTerm {
  std::size_t exponent;
  long coefficient;
};

// Truncation of prod_{n>=1} (1 - q^n)^3 = sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}.
// Only the O(sqrt(limit)) nonzero terms are stored, exponents ascending.
class SparseCubeSeries {
 public:
  std::size_t limit() const { return limit_; }
  std::span<const SparseTerm> terms() const { return terms_; }
  // Coefficient of q^exponent (zero off the triangular numbers).
  long coefficient(std::size_t exponent) const;
  // Dense coefficients for degrees 0..limit.
  std::vector<BigInt> to_dense() const;

 private:
  friend SparseCubeSeries jacobi_cube(std::size_t limit);
  std::size_t limit_ = 0;
  std::vector<SparseTerm> terms_;
};

// Exact tau(1..limit). Entry n lives at index n; index 0 is unused and
// holds zero so the table can be indexed naturally.
class TauTable {
 public:
  TauTable() = default;
  // coeffs[n - 1] = tau(n). Throws DomainError on an empty vector.
  explicit TauTable(std::vector<BigInt> coeffs);

  std::size_t limit() const { return coeffs_.size() - 1; }
  // Throws std::out_of_range outside 1..limit.
  const BigInt& operator[](std::size_t n) const;
  const BigInt& at(std::size_t n) const { return (*this)[n]; }
  // tau(1..limit) in order.
  std::span<const BigInt> values() const { return std::span(coeffs_).subspan(1); }

  friend bool operator==(const TauTable& a, const TauTable& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_{BigInt(0)};
};

struct SeriesOptions {
  // Largest limit delta_series will attempt; beyond it BudgetExceeded is
  // thrown before anything is allocated.
  std::size_t max_limit = 2'000'000;
};

SparseCubeSeries jacobi_cube(std::size_t limit);

// dense * sparse truncated to degrees 0..limit. Missing dense entries count
// as zero. Cost O(limit * #sparse terms) integer multiply-adds.
std::vector<BigInt> multiply_by_sparse(std::span<const BigInt> dense, const SparseCubeSeries& sparse,
                                       std::size_t limit);

// tau(1..limit) as q * (cube series)^8, eight sparse multiplications at
// working degree limit - 1.
TauTable delta_series(std::size_t limit, const SeriesOptions& options = {});

}  // namespace tau
