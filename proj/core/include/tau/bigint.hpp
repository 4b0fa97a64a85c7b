#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tau {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// Parses an optionally signed decimal integer. Throws DomainError on
// anything else (including empty input and embedded whitespace).
BigInt parse_bigint(std::string_view text);

// n mod m in [0, m).
unsigned long mod_nonneg(const BigInt& n, unsigned long m);

BigInt pow_ui(unsigned long base, unsigned long exp);

}  // namespace tau
