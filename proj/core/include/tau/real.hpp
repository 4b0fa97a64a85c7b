#pragma once

#include <mpfr.h>

#include <string>

#include "tau/bigint.hpp"

namespace tau {

// Value-semantic wrapper over an MPFR float. Every object carries its own
// precision; binary operations produce a result at the larger of the two
// operand precisions, so no global precision state is involved and the
// type is safe to use from several threads at once.
class Real {
 public:
  static mpfr_prec_t bits_for_digits(int digits);

  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);
  // Rounds (or widens) `other` to the given precision.
  Real(const Real& other, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  static Real with_digits(long value, int digits) {
    return Real(value, bits_for_digits(digits));
  }

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real acos(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real min(const Real& a, const Real& b);

// 10^exponent at the given precision.
Real pow10(long exponent, mpfr_prec_t bits);

}  // namespace tau
