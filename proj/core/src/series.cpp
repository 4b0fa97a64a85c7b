#include "tau/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tau/errors.hpp"

namespace tau {

long SparseCubeSeries::coefficient(std::size_t exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const SparseTerm& t, std::size_t e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coefficient : 0;
}

std::vector<BigInt> SparseCubeSeries::to_dense() const {
  std::vector<BigInt> out(limit_ + 1);
  for (const auto& t : terms_) out[t.exponent] = t.coefficient;
  return out;
}

TauTable::TauTable(std::vector<BigInt> coeffs) {
  if (coeffs.empty()) throw DomainError("a tau table needs at least tau(1)");
  coeffs_.reserve(coeffs.size() + 1);
  for (auto& c : coeffs) coeffs_.push_back(std::move(c));
}

const BigInt& TauTable::operator[](std::size_t n) const {
  if (n == 0 || n >= coeffs_.size()) {
    throw std::out_of_range("tau(" + std::to_string(n) + ") outside table of limit " +
                            std::to_string(limit()));
  }
  return coeffs_[n];
}

SparseCubeSeries jacobi_cube(std::size_t limit) {
  if (limit == 0) throw DomainError("jacobi_cube: limit must be positive");
  SparseCubeSeries out;
  out.limit_ = limit;
  for (std::size_t m = 0;; ++m) {
    const std::size_t e = m * (m + 1) / 2;
    if (e > limit) break;
    const long magnitude = static_cast<long>(2 * m + 1);
    out.terms_.push_back({e, (m % 2 == 0) ? magnitude : -magnitude});
  }
  return out;
}

std::vector<BigInt> multiply_by_sparse(std::span<const BigInt> dense, const SparseCubeSeries& sparse,
                                       std::size_t limit) {
  std::vector<BigInt> out(limit + 1);
  const std::size_t available = dense.size();
  if (available == 0) return out;
  for (const auto& term : sparse.terms()) {
    if (term.exponent > limit) break;
    const unsigned long c = static_cast<unsigned long>(term.coefficient < 0 ? -term.coefficient
                                                                            : term.coefficient);
    const std::size_t last = std::min(limit, term.exponent + available - 1);
    for (std::size_t n = term.exponent; n <= last; ++n) {
      mpz_srcptr src = dense[n - term.exponent].get_mpz_t();
      if (mpz_sgn(src) == 0) continue;
      if (term.coefficient < 0) {
        mpz_submul_ui(out[n].get_mpz_t(), src, c);
      } else {
        mpz_addmul_ui(out[n].get_mpz_t(), src, c);
      }
    }
  }
  return out;
}

TauTable delta_series(std::size_t limit, const SeriesOptions& options) {
  if (limit == 0) throw DomainError("delta_series: limit must be positive");
  if (limit > options.max_limit) {
    throw BudgetExceeded("delta_series: limit " + std::to_string(limit) + " exceeds the ceiling " +
                         std::to_string(options.max_limit));
  }
  const std::size_t degree = limit - 1;
  const SparseCubeSeries cube = jacobi_cube(std::max<std::size_t>(degree, 1));
  std::vector<BigInt> acc{BigInt(1)};
  for (int stage = 0; stage < 8; ++stage) acc = multiply_by_sparse(acc, cube, degree);
  return TauTable(std::move(acc));
}

}  // namespace tau
