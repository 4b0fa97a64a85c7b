#include "tau/bigint.hpp"

#include <cctype>

#include "tau/errors.hpp"

namespace tau {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  BigInt out;
  // GMP rejects a leading '+'.
  const std::string owned(text.front() == '+' ? text.substr(1) : text);
  out.set_str(owned, 10);
  return out;
}

unsigned long mod_nonneg(const BigInt& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace tau
