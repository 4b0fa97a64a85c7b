#pragma once

#include <cstdint>
#include <vector>

#include "tau/bigint.hpp"

namespace tau {

// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

struct PrimalityOptions {
  // Additional strong probable-prime rounds with bases 3, 5, 7, 11, ...
  // on top of the BPSW core. Zero keeps the plain BPSW test.
  int extra_rounds = 0;
};

// Baillie-PSW: trial division by small primes, a strong base-2 test, then
// a strong Lucas test with Selfridge parameters. Tests |n|, so -7 counts as
// prime. No BPSW pseudoprime is known; below 2^64 the answer is exact.
bool is_probable_prime(const BigInt& n, const PrimalityOptions& options = {});

// Building blocks, exposed for testing. Both expect odd n > 2.
bool is_strong_probable_prime(const BigInt& n, unsigned long base);
bool is_strong_lucas_probable_prime(const BigInt& n);

}  // namespace tau
