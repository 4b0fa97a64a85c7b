#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

// Slow, obviously-correct reference computations. Nothing in here calls
// into tau::core, so agreement with the library is real evidence.
namespace tau::oracle {

// tau(1..limit) from q * prod_{n<=limit} (1 - q^n)^24 by repeated dense
// multiplication with (1 - q^n). O(24 limit^2).
std::vector<mpz_class> naive_delta(std::size_t limit);

// Coefficients 0..limit of prod_{n<=limit} (1 - q^n)^3, dense.
std::vector<mpz_class> naive_cube(std::size_t limit);

// Odd-only sieve of Eratosthenes.
std::vector<std::uint64_t> sieve(std::uint64_t n);

// Number of signed odd primes l with |l| <= x and l = b (mod 23); a
// negative prime -q counts when q = -b (mod 23).
std::uint64_t count_signed_primes_in_class(std::uint64_t x, unsigned b);

// Signed odd primes l with |l| <= x and l = b (mod 23).
std::vector<std::int64_t> signed_primes_in_class(std::uint64_t x, unsigned b);

// F_{2k}(x, y) from the generating function 1 / (1 - s t + x t^2) with s a
// formal square root of y: F_m = s F_{m-1} - x F_{m-2}, then s^2 -> y.
// Result indexed like EvenIndexPoly: entry i multiplies x^i y^{k-i}.
std::vector<mpz_class> symbolic_even_poly(unsigned k);

// Evaluations of the explicit bound formulas with Boost cpp_dec_float<100>,
// written in a different algebraic arrangement than the MPFR library code.
// Each returns a decimal string with 60 significant digits.
std::string k_hi(const mpz_class& N);
std::string bvdp_count_bound(unsigned k);
std::string a_bound(const mpz_class& N);
std::string b_bound(unsigned M);
std::string pi_bracket_lower(const mpz_class& x);
std::string pi_bracket_upper(const mpz_class& x);

}  // namespace tau::oracle
