#include "tau/congruence.hpp"

#include <cmath>
#include <string>

#include "tau/errors.hpp"
#include "tau/primes.hpp"

namespace tau {

namespace {

constexpr unsigned kModulus = 23;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::string_view to_string(Class23Tag tag) {
  switch (tag) {
    case Class23Tag::IsTwentyThree:
      return "IsTwentyThree";
    case Class23Tag::NonResidue:
      return "NonResidue";
    case Class23Tag::PrincipalForm:
      return "PrincipalForm";
    case Class23Tag::SplitNonPrincipal:
      return "SplitNonPrincipal";
  }
  return "?";
}

Class23Tag class23_tag_from_string(std::string_view name) {
  for (auto tag : {Class23Tag::IsTwentyThree, Class23Tag::NonResidue, Class23Tag::PrincipalForm,
                   Class23Tag::SplitNonPrincipal}) {
    if (to_string(tag) == name) return tag;
  }
  throw DomainError("unknown mod-23 class '" + std::string(name) + "'");
}

int legendre(const BigInt& a, std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw DomainError("legendre: modulus must be an odd prime");
  const BigInt modulus = static_cast<unsigned long>(q);
  BigInt base = a;
  mpz_mod(base.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
  if (base == 0) return 0;
  const BigInt exponent = static_cast<unsigned long>((q - 1) / 2);
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r == 1 ? 1 : -1;
}

Class23 classify_mod23(std::int64_t signed_p) {
  const std::uint64_t p = static_cast<std::uint64_t>(signed_p < 0 ? -signed_p : signed_p);
  if (!is_prime_u64(p)) throw DomainError(std::to_string(signed_p) + " is not prime");
  if (p == kModulus) return {Class23Tag::IsTwentyThree, std::nullopt};
  if (legendre(BigInt(static_cast<unsigned long>(p)), kModulus) == -1) {
    return {Class23Tag::NonResidue, std::nullopt};
  }
  const std::uint64_t b_max = isqrt(p / kModulus);
  for (std::uint64_t b = 0; b <= b_max; ++b) {
    const std::uint64_t rest = p - kModulus * b * b;
    const std::uint64_t a = isqrt(rest);
    if (a * a == rest) {
      if (b == 0) throw InvariantViolation("prime " + std::to_string(p) + " is a perfect square");
      return {Class23Tag::PrincipalForm, std::make_pair(a, b)};
    }
  }
  return {Class23Tag::SplitNonPrincipal, std::nullopt};
}

unsigned tau_mod23(const Class23& cls, std::uint64_t k) {
  // t_m = t1 t_{m-1} - e t_{m-2}, with e = p^11 = (p/23) mod 23.
  int t1 = 0;
  int e = 0;
  switch (cls.tag) {
    case Class23Tag::IsTwentyThree:
      throw DomainError("tau_mod23: no congruence prediction for p = 23");
    case Class23Tag::NonResidue:
      t1 = 0;
      e = -1;
      break;
    case Class23Tag::PrincipalForm:
      t1 = 2;
      e = 1;
      break;
    case Class23Tag::SplitNonPrincipal:
      t1 = kModulus - 1;
      e = 1;
      break;
  }
  const int m = static_cast<int>(kModulus);
  const int ee = (e + m) % m;
  int prev = 1;
  int cur = t1;
  if (k == 0) return 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    const int next = ((t1 * cur - ee * prev) % m + m) % m;
    prev = cur;
    cur = next;
  }
  return static_cast<unsigned>(cur);
}

ResidueSet23 allowed_residues_for_prime_value(std::uint64_t k) {
  if (k == 0) throw DomainError("allowed_residues_for_prime_value: k must be positive");
  return {0, 1, kModulus - 1, static_cast<unsigned>((2 * k + 1) % kModulus)};
}

const ResidueSet23& excluded_b_set() {
  static const ResidueSet23 kExcluded = {2,  4,  6,  7,  8,  9,  10, 11, 12,
                                         13, 14, 15, 16, 17, 18, 19, 20, 21};
  return kExcluded;
}

bool is_odd_square(std::uint64_t n) {
  if (n % 2 == 0) return false;
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

bool parity_law(std::uint64_t n, const BigInt& tau_n) {
  const bool odd = mpz_odd_p(tau_n.get_mpz_t()) != 0;
  return odd == is_odd_square(n);
}

}  // namespace tau
