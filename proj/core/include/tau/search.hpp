#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tau/bigint.hpp"
#include "tau/congruence.hpp"
#include "tau/primes.hpp"
#include "tau/series.hpp"

namespace tau {

enum class Verdict { ProbablePrime, Composite, PlusMinusTwo, Zero };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view name);

// One candidate tau(p^{2k}).
struct SearchHit {
  std::uint64_t p = 0;
  unsigned k = 0;  // exponent is 2k
  BigInt value;
  unsigned residue23 = 0;
  Class23 class23;
  Verdict verdict = Verdict::Composite;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchOptions {
  // k values examined after |tau(p^{2k})| first exceeds the cap.
  unsigned extra_k_after_cap = 3;
  PrimalityOptions primality;
};

struct SearchResult {
  // Every tau(p^{2k}) with |value| <= cap that was examined, sorted by (p, k).
  std::vector<SearchHit> hits;
  // Odd prime values where 2k + 1 is not prime. Reported, never thrown.
  std::vector<std::string> anomalies;
};

// Tally of ProbablePrime hits. This is a sample over a finite (p, k) grid,
// so it bounds the true counts from below only.
struct CensusReport {
  BigInt cap;
  std::array<std::size_t, 23> counts{};
  std::size_t total_prime_hits = 0;
  std::vector<SearchHit> excluded_class_hits;
  // Excluded-class hits with k < 3. Always empty unless something is wrong.
  std::vector<SearchHit> early_excluded_violations;
};

// Judges one value: PlusMinusTwo / Zero / Composite for even values, BPSW
// for odd ones.
Verdict classify_value(const BigInt& value, const PrimalityOptions& options = {});

// Builds a hit and checks it. Throws InvariantViolation when a probable
// prime lands outside the admissible mod-23 residues or has the wrong parity.
SearchHit make_hit(std::uint64_t p, unsigned k, BigInt value, const PrimalityOptions& options = {});

// Uses tau(p) from `table`; primes up to min(p_max, table.limit()).
SearchResult search_prime_tau(const TauTable& table, std::uint64_t p_max, unsigned k_max,
                              const BigInt& value_cap, const SearchOptions& options = {});
// Computes the table it needs.
SearchResult search_prime_tau(std::uint64_t p_max, unsigned k_max, const BigInt& value_cap,
                              const SearchOptions& options = {});

// First n <= table.limit() (and <= limit) whose tau(n) is prime, signed.
std::optional<std::pair<std::uint64_t, BigInt>> smallest_prime_tau(const TauTable& table,
                                                                    std::uint64_t limit);

CensusReport census_by_residue(const std::vector<SearchHit>& hits, const BigInt& cap);

}  // namespace tau
