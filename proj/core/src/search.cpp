#include "tau/search.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "tau/errors.hpp"
#include "tau/hecke.hpp"

namespace tau {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ProbablePrime:
      return "ProbablePrime";
    case Verdict::Composite:
      return "Composite";
    case Verdict::PlusMinusTwo:
      return "PlusMinusTwo";
    case Verdict::Zero:
      return "Zero";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view name) {
  for (auto v : {Verdict::ProbablePrime, Verdict::Composite, Verdict::PlusMinusTwo, Verdict::Zero}) {
    if (to_string(v) == name) return v;
  }
  throw DomainError("unknown verdict '" + std::string(name) + "'");
}

Verdict classify_value(const BigInt& value, const PrimalityOptions& options) {
  if (value == 0) return Verdict::Zero;
  if (mpz_even_p(value.get_mpz_t())) {
    return abs(value) == 2 ? Verdict::PlusMinusTwo : Verdict::Composite;
  }
  return is_probable_prime(value, options) ? Verdict::ProbablePrime : Verdict::Composite;
}

SearchHit make_hit(std::uint64_t p, unsigned k, BigInt value, const PrimalityOptions& options) {
  SearchHit hit;
  hit.p = p;
  hit.k = k;
  hit.residue23 = static_cast<unsigned>(mod_nonneg(value, 23));
  hit.class23 = classify_mod23(static_cast<std::int64_t>(p));
  hit.verdict = classify_value(value, options);
  hit.value = std::move(value);

  if (hit.verdict == Verdict::ProbablePrime) {
    const std::string where = "tau(" + std::to_string(p) + "^" + std::to_string(2 * k) + ")";
    if (p != 23 && !allowed_residues_for_prime_value(k).contains(hit.residue23)) {
      throw InvariantViolation(where + " is a probable prime with inadmissible residue " +
                               std::to_string(hit.residue23) + " mod 23");
    }
    if (p % 2 == 1 && mpz_even_p(hit.value.get_mpz_t())) {
      throw InvariantViolation(where + " is an even probable prime at an odd square");
    }
  }
  return hit;
}

SearchResult search_prime_tau(const TauTable& table, std::uint64_t p_max, unsigned k_max,
                              const BigInt& value_cap, const SearchOptions& options) {
  if (p_max < 1 || k_max < 1) throw DomainError("search_prime_tau: p_max and k_max must be >= 1");
  SearchResult out;
  const std::uint64_t top = std::min<std::uint64_t>(p_max, table.limit());
  for (std::uint64_t p : primes_up_to(top)) {
    const PrimeLocalData local = make_local(table, p);
    // tau(p^m) for consecutive m, two steps per k.
    BigInt prev = 1;
    BigInt cur = local.tau_p;
    unsigned m = 1;
    std::optional<unsigned> crossed_at;
    for (unsigned k = 1; k <= k_max; ++k) {
      while (m < 2 * k) {
        BigInt next = local.tau_p * cur - local.x_p * prev;
        prev = std::move(cur);
        cur = std::move(next);
        ++m;
      }
      if (abs(cur) > value_cap) {
        if (!crossed_at) crossed_at = k;
      } else {
        out.hits.push_back(make_hit(p, k, cur, options.primality));
        const SearchHit& hit = out.hits.back();
        if (hit.verdict == Verdict::ProbablePrime && mpz_odd_p(hit.value.get_mpz_t()) &&
            !is_prime_u64(2 * k + 1)) {
          out.anomalies.push_back("tau(" + std::to_string(p) + "^" + std::to_string(2 * k) +
                                  ") is prime but 2k+1 = " + std::to_string(2 * k + 1) +
                                  " is not");
        }
      }
      // |tau(p^{2k})| is not known to be monotone in k, so look a little past the cap.
      if (crossed_at && k >= *crossed_at + options.extra_k_after_cap) break;
    }
  }
  std::sort(out.hits.begin(), out.hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return std::tie(a.p, a.k) < std::tie(b.p, b.k); });
  return out;
}

SearchResult search_prime_tau(std::uint64_t p_max, unsigned k_max, const BigInt& value_cap,
                              const SearchOptions& options) {
  if (p_max < 2) return {};
  return search_prime_tau(delta_series(static_cast<std::size_t>(p_max)), p_max, k_max, value_cap,
                          options);
}

std::optional<std::pair<std::uint64_t, BigInt>> smallest_prime_tau(const TauTable& table,
                                                                    std::uint64_t limit) {
  const std::uint64_t top = std::min<std::uint64_t>(limit, table.limit());
  for (std::uint64_t n = 1; n <= top; ++n) {
    const BigInt& t = table[static_cast<std::size_t>(n)];
    // Odd tau(n) only occurs at odd squares; elsewhere the only even primes are +-2.
    const bool prime = is_odd_square(n) ? is_probable_prime(t) : abs(t) == 2;
    if (prime) return std::make_pair(n, t);
  }
  return std::nullopt;
}

CensusReport census_by_residue(const std::vector<SearchHit>& hits, const BigInt& cap) {
  CensusReport out;
  out.cap = cap;
  const ResidueSet23& excluded = excluded_b_set();
  for (const auto& hit : hits) {
    if (hit.verdict != Verdict::ProbablePrime || abs(hit.value) > cap) continue;
    ++out.counts[hit.residue23];
    ++out.total_prime_hits;
    if (excluded.contains(hit.residue23)) {
      out.excluded_class_hits.push_back(hit);
      if (hit.k < 3) out.early_excluded_violations.push_back(hit);
    }
  }
  return out;
}

}  // namespace tau
