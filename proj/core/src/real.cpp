#include "tau/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tau/errors.hpp"

namespace tau {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.bits());
  fn(out.get(), x.get(), kRound);
  return out;
}

}  // namespace

mpfr_prec_t Real::bits_for_digits(int digits) {
  if (digits < 1) throw DomainError("precision must be at least one digit");
  // log2(10) ~ 3.3219; a few guard bits on top.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const Real& other, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  if (mpfr_set_str(value_, decimal.c_str(), 10, kRound) != 0) {
    mpfr_clear(value_);
    throw DomainError("not a decimal number: '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, kRound);
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, kRound); }

std::string Real::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&raw, fmt.c_str(), value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, kRound);
  return out;
}

Real operator-(const Real& a) { return unary(a, mpfr_neg); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }

Real pow(const Real& base, const Real& exponent) {
  Real out(wider(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), kRound);
  return out;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pow10(long exponent, mpfr_prec_t bits) {
  Real out(bits);
  Real ten(10, bits);
  mpfr_pow_si(out.get(), ten.get(), exponent, kRound);
  return out;
}

}  // namespace tau
