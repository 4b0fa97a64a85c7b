#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tau/bigint.hpp"

namespace tau {

// Ramanujan's classes of a prime p modulo 23:
//   IsTwentyThree      p = 23 (no congruence prediction)
//   NonResidue         (p/23) = -1               -> tau(p) = 0 (mod 23)
//   PrincipalForm      p = a^2 + 23 b^2          -> tau(p) = 2 (mod 23)
//   SplitNonPrincipal  (p/23) = 1, no such a, b  -> tau(p) = -1 (mod 23)
enum class Class23Tag { IsTwentyThree, NonResidue, PrincipalForm, SplitNonPrincipal };

struct Class23 {
  Class23Tag tag = Class23Tag::NonResidue;
  // Set exactly when tag == PrincipalForm; a^2 + 23 b^2 = p with b >= 1.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;

  friend bool operator==(const Class23&, const Class23&) = default;
};

std::string_view to_string(Class23Tag tag);
// Inverse of to_string; throws DomainError on unknown names.
Class23Tag class23_tag_from_string(std::string_view name);

using ResidueSet23 = std::set<unsigned>;

// Euler's criterion a^{(q-1)/2} mod q, mapped to -1, 0, 1. q must be an odd prime.
int legendre(const BigInt& a, std::uint64_t q);

// Classifies |p|. Throws DomainError when |p| is not prime.
Class23 classify_mod23(std::int64_t p);

// tau(p^k) mod 23 predicted from the class alone. Throws DomainError for
// IsTwentyThree.
unsigned tau_mod23(const Class23& cls, std::uint64_t k);

// Union over the three classes of the predicted residue of tau(p^{2k}):
// {0, 1, 22, (2k+1) mod 23}. Throws DomainError for k = 0.
ResidueSet23 allowed_residues_for_prime_value(std::uint64_t k);

// The 18 residues b whose signed primes are mostly non-values of tau.
const ResidueSet23& excluded_b_set();

// tau(n) is odd exactly when n is an odd perfect square; true iff the pair
// is consistent with that law.
bool parity_law(std::uint64_t n, const BigInt& tau_n);

bool is_odd_square(std::uint64_t n);

}  // namespace tau
