#include "tau/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "tau/bounds.hpp"
#include "tau/cache.hpp"
#include "tau/congruence.hpp"
#include "tau/hecke.hpp"
#include "tau/primes.hpp"
#include "tau/search.hpp"
#include "tau/series.hpp"
#include "tau/spectral.hpp"
#include "tau/verify/oracles.hpp"

namespace tau::verify {

namespace {

constexpr const char* kLehmerValue = "-80561663527802406257321747";

// Collects failed expectations; keeps the first few messages.
class Tally {
 public:
  template <typename Msg>
  void expect(bool ok, Msg&& message) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(message());
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failed";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& m : messages_) out << "\n      - " << m;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Relative agreement to `digits` significant digits.
bool agrees(const Real& value, const std::string& oracle, int digits) {
  const Real reference(oracle, value.bits());
  if (reference.is_zero()) return value.is_zero();
  const Real tolerance = pow10(-digits, value.bits());
  return abs(value - reference) / abs(reference) < tolerance;
}

struct Context {
  const AcceptanceOptions& options;
  std::unique_ptr<TauTable> table_1e5;

  const TauTable& big_table() {
    if (!table_1e5) table_1e5 = std::make_unique<TauTable>(delta_series(100'000));
    return *table_1e5;
  }

  std::filesystem::path scratch(const std::string& name) const {
    const auto dir = options.scratch_dir.empty() ? std::filesystem::temp_directory_path()
                                                 : options.scratch_dir;
    std::filesystem::create_directories(dir);
    return dir / (name + "." + std::to_string(::getpid()));
  }

  std::string run(const std::vector<std::string>& args, int& code) const {
    if (!options.run_command) throw std::runtime_error("no command runner configured");
    std::ostringstream out;
    std::ostringstream err;
    code = options.run_command(args, out, err);
    return out.str();
  }
};

// 1
void coefficient_ground_truth(Context& ctx, Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  const std::string text = ctx.run({"series", "--limit", "5"}, code);
  const double elapsed = seconds_since(start);
  t.expect(code == 0, [&] { return "series exited with " + std::to_string(code); });
  std::istringstream in(text);
  const TauTable table = cache::read_cache(in);
  const std::vector<BigInt> expected = {1, -24, 252, -1472, 4830};
  t.expect(table.limit() == 5, [&] { return "limit " + std::to_string(table.limit()); });
  for (std::size_t n = 1; n <= 5 && n <= table.limit(); ++n) {
    t.expect(table[n] == expected[n - 1], [&] { return "tau(" + std::to_string(n) + ") = " + to_string(table[n]); });
  }
  t.expect(elapsed < 1.0, [&] { return "took " + std::to_string(elapsed) + " s"; });
}

// 2
void lehmer_reproduction(Context& ctx, Tally& t) {
  int code = 0;
  t.expect(trim(ctx.run({"tau", "63001"}, code)) == kLehmerValue && code == 0,
           [] { return "tau 63001 mismatch"; });

  const auto start = std::chrono::steady_clock::now();
  const std::string hit = trim(ctx.run({"smallest-prime", "--limit", "63001"}, code));
  const double elapsed = seconds_since(start);
  t.expect(code == 0 && hit == std::string("63001 ") + kLehmerValue,
           [&] { return "smallest-prime --limit 63001 printed '" + hit + "'"; });
  t.expect(elapsed <= 600.0, [&] { return "63001-term scan took " + std::to_string(elapsed) + " s"; });
  t.note("63001-term table + scan " + std::to_string(elapsed) + " s");

  const std::string none = trim(ctx.run({"smallest-prime", "--limit", "63000"}, code));
  t.expect(code == 0 && none == "none", [&] { return "scan to 63000 printed '" + none + "'"; });
  t.expect(is_probable_prime(BigInt(kLehmerValue)), [] { return "BPSW rejects Lehmer's value"; });
}

// 3
void series_oracle_equivalence(Context&, Tally& t) {
  const TauTable fast = delta_series(500);
  const std::vector<mpz_class> slow = oracle::naive_delta(500);
  for (std::size_t n = 1; n <= 500; ++n) {
    t.expect(fast[n] == slow[n - 1], [&] { return "tau(" + std::to_string(n) + ") differs from brute force"; });
  }
}

// 4
void hecke_consistency(Context& ctx, Tally& t) {
  const TauTable& table = ctx.big_table();
  constexpr std::uint64_t kLimit = 10'000;
  for (std::uint64_t p : primes_up_to(kLimit)) {
    const BigInt x = pow_ui(static_cast<unsigned long>(p), 11);
    std::uint64_t prev2 = 1;
    std::uint64_t prev1 = p;
    for (std::uint64_t pm = p * p; pm <= kLimit; pm *= p) {
      const BigInt expect = table[p] * table[prev1] - x * table[prev2];
      t.expect(table[pm] == expect, [&] { return "recurrence fails at " + std::to_string(pm); });
      prev2 = prev1;
      prev1 = pm;
    }
  }
  for (std::uint64_t m = 2; m * m <= kLimit; ++m) {
    for (std::uint64_t n = m + 1; m * n <= kLimit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      t.expect(table[m * n] == table[m] * table[n], [&] {
        return "multiplicativity fails for " + std::to_string(m) + " * " + std::to_string(n);
      });
    }
  }
}

// 5
void parity_law_cached(Context& ctx, Tally& t) {
  const auto path = ctx.scratch("tau-parity.cache");
  cache::write_cache(ctx.big_table(), path);
  const TauTable table = cache::read_cache(path);
  std::filesystem::remove(path);
  for (std::size_t n = 1; n <= 100'000; ++n) {
    t.expect(parity_law(n, table[n]), [&] { return "parity law fails at n = " + std::to_string(n); });
  }
}

// 6
void mod23_classification(Context& ctx, Tally& t) {
  const TauTable& table = ctx.big_table();
  for (std::uint64_t p : primes_up_to(9'999)) {
    if (p == 23) continue;
    const Class23 cls = classify_mod23(static_cast<std::int64_t>(p));
    unsigned expected = 0;
    switch (cls.tag) {
      case Class23Tag::NonResidue:
        expected = 0;
        break;
      case Class23Tag::PrincipalForm:
        expected = 2;
        t.expect(cls.witness && cls.witness->first * cls.witness->first +
                                        23 * cls.witness->second * cls.witness->second == p,
                 [&] { return "bad witness for " + std::to_string(p); });
        break;
      case Class23Tag::SplitNonPrincipal:
        expected = 22;
        break;
      case Class23Tag::IsTwentyThree:
        break;
    }
    t.expect(mod_nonneg(table[p], 23) == expected, [&] {
      return "tau(" + std::to_string(p) + ") mod 23 = " + std::to_string(mod_nonneg(table[p], 23)) +
             ", class " + std::string(to_string(cls.tag));
    });
  }
}

// 7
void prime_power_residues(Context& ctx, Tally& t) {
  const TauTable& table = ctx.big_table();
  for (std::uint64_t p : primes_up_to(299)) {
    if (p == 23) continue;
    const Class23 cls = classify_mod23(static_cast<std::int64_t>(p));
    const auto powers = tau_prime_powers(make_local(table, p), 100);
    for (unsigned k = 0; k <= 100; ++k) {
      t.expect(tau_mod23(cls, k) == mod_nonneg(powers[k], 23), [&] {
        return "tau(" + std::to_string(p) + "^" + std::to_string(k) + ") mod 23 mismatch";
      });
    }
  }
  const Class23 non_residue{Class23Tag::NonResidue, std::nullopt};
  const Class23 principal{Class23Tag::PrincipalForm, std::make_pair(6ULL, 1ULL)};
  const Class23 split{Class23Tag::SplitNonPrincipal, std::nullopt};
  constexpr unsigned kCycle[3] = {1, 22, 0};
  for (unsigned k = 0; k <= 1000; ++k) {
    t.expect(tau_mod23(non_residue, k) == (k % 2 == 0 ? 1U : 0U), [&] { return "NonResidue pattern at k = " + std::to_string(k); });
    t.expect(tau_mod23(principal, k) == (k + 1) % 23, [&] { return "PrincipalForm pattern at k = " + std::to_string(k); });
    t.expect(tau_mod23(split, k) == kCycle[k % 3], [&] { return "SplitNonPrincipal pattern at k = " + std::to_string(k); });
  }
}

// 8
void spectral_identities(Context&, Tally& t) {
  const TauTable table = delta_series(20);
  for (std::uint64_t p : primes_up_to(20)) {
    const PrimeLocalData local = make_local(table, p);
    const auto powers = tau_prime_powers(local, 16);
    for (unsigned k = 1; k <= 8; ++k) {
      t.expect(eval_even_poly(even_index_poly(k), local.x_p, local.y_p) == powers[2 * k], [&] {
        return "G_" + std::to_string(k) + " at p = " + std::to_string(p);
      });
    }
  }
  for (unsigned k = 1; k <= 50; ++k) {
    const int digits = default_spectral_digits(k);
    const EvenIndexPoly poly = even_index_poly(k);
    const RootSet roots = root_set(k, digits);
    const mpfr_prec_t bits = Real::bits_for_digits(digits);
    const Real bound = pow10(-(digits - 10), bits) * Real(coefficient_one_norm(poly), bits);
    for (unsigned j = 0; j < k; ++j) {
      const Real residual = abs(eval_even_poly_on_line(poly, roots.alphas[j]));
      t.expect(residual < bound, [&] {
        return "|G_" + std::to_string(k) + "(1, alpha_" + std::to_string(j + 1) + ")| = " + residual.to_string(5);
      });
    }
  }
  for (unsigned k = 3; k <= 200; ++k) {
    const Real gap = min_gap(k, 50);
    const Real pi = Real::pi(gap.bits());
    const Real q = pi / Real(static_cast<long>(2 * k + 1), gap.bits());
    t.expect(gap > q * q, [&] { return "gap bound fails at k = " + std::to_string(k); });
  }
}

// 9
void cyclotomic_reconstruction(Context&, Tally& t) {
  const TauTable table = delta_series(13);
  for (std::uint64_t p : primes_up_to(13)) {
    const PrimeLocalData local = make_local(table, p);
    const auto powers = tau_prime_powers(local, 19);
    for (unsigned n = 2; n <= 20; ++n) {
      const auto factors = cyclotomic_factor_magnitudes(local, n, 60);
      Real product(1, factors.front().magnitude.bits());
      for (const auto& f : factors) product *= f.magnitude;
      const Real exact(abs(powers[n - 1]), product.bits());
      const Real rel = abs(product - exact) / exact;
      t.expect(rel < Real(std::string("1e-9"), product.bits()), [&] {
        return "p = " + std::to_string(p) + ", n = " + std::to_string(n) + ": relative error " + rel.to_string(5);
      });
    }
  }
}

// 10
void growth_report(Context&, Tally& t) {
  const TauTable table = delta_series(50);
  std::size_t violations = 0;
  for (std::uint64_t p : primes_up_to(50)) {
    for (const auto& [k, ok] : growth_check(make_local(table, p), 60)) {
      if (!ok) ++violations;
      t.expect(ok, [&, k = k] { return "|tau(" + std::to_string(p) + "^" + std::to_string(k) + ")| <= 2^k"; });
    }
  }
  t.note(std::to_string(violations) + " violations");
}

// 11
void census_properties(Context&, Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  const BigInt cap = pow_ui(10, 40);
  const SearchResult result = search_prime_tau(2000, 6, cap);
  const CensusReport census = census_by_residue(result.hits, cap);
  const double elapsed = seconds_since(start);

  bool lehmer_seen = false;
  for (const auto& hit : result.hits) {
    const std::string where = "tau(" + std::to_string(hit.p) + "^" + std::to_string(2 * hit.k) + ")";
    const bool odd_value = mpz_odd_p(hit.value.get_mpz_t()) != 0;
    t.expect(odd_value == (hit.p % 2 == 1), [&] { return where + " has the wrong parity"; });
    if (hit.verdict != Verdict::ProbablePrime) continue;
    if (hit.p != 23) {
      t.expect(allowed_residues_for_prime_value(hit.k).contains(hit.residue23),
               [&] { return where + " residue not admissible"; });
    }
    if (hit.k <= 2) {
      t.expect(!excluded_b_set().contains(hit.residue23), [&] { return where + " lands in the excluded set"; });
    }
    if (odd_value) {
      t.expect(is_prime_u64(2 * hit.k + 1), [&] { return where + ": 2k+1 not prime"; });
    }
    if (hit.p == 251 && hit.k == 1) {
      lehmer_seen = to_string(hit.value) == kLehmerValue && hit.residue23 == 1;
    }
  }
  t.expect(lehmer_seen, [] { return "Lehmer hit (251, 1) with residue 1 missing"; });
  t.expect(result.anomalies.empty(), [&] { return std::to_string(result.anomalies.size()) + " footnote anomalies"; });
  t.expect(census.early_excluded_violations.empty(), [] { return "excluded-class hit with k < 3"; });
  t.expect(elapsed <= 900.0, [&] { return "search took " + std::to_string(elapsed) + " s"; });
  t.note(std::to_string(result.hits.size()) + " values, " + std::to_string(census.total_prime_hits) +
         " probable primes");
}

// 12
void bounds_arithmetic(Context&, Tally& t) {
  constexpr int kDigits = 30;
  for (unsigned e : {6U, 9U, 12U}) {
    const BigInt N = pow_ui(10, e);
    const std::string label = "N = 10^" + std::to_string(e);
    t.expect(agrees(bounds::k_range(N).upper, oracle::k_hi(N), kDigits), [&] { return label + ": k_hi"; });
    t.expect(agrees(bounds::a_bound(N), oracle::a_bound(N), kDigits), [&] { return label + ": A"; });
    const auto bracket = bounds::pi_bracket(N);
    t.expect(agrees(bracket.lower, oracle::pi_bracket_lower(N), kDigits), [&] { return label + ": bracket lower"; });
    t.expect(agrees(bracket.upper, oracle::pi_bracket_upper(N), kDigits), [&] { return label + ": bracket upper"; });
  }
  for (unsigned k = 3; k <= 40; ++k) {
    t.expect(agrees(bounds::bvdp_count_bound(k), oracle::bvdp_count_bound(k), kDigits),
             [&] { return "count bound at k = " + std::to_string(k); });
  }
  for (unsigned M = 1; M <= 12; ++M) {
    t.expect(agrees(bounds::b_bound(M), oracle::b_bound(M), kDigits), [&] { return "B at M = " + std::to_string(M); });
  }

  const bounds::Fraction frac = bounds::density_fraction();
  t.expect(frac.numerator == 9 && frac.denominator == 11 && frac.numerator * 22 == frac.denominator * 18,
           [&] { return "density fraction " + std::to_string(frac.numerator) + "/" + std::to_string(frac.denominator); });

  const BigInt x = pow_ui(10, 6);
  const auto bracket = bounds::pi_bracket(x);
  const std::uint64_t count = oracle::count_signed_primes_in_class(1'000'000, 2);
  const Real c(static_cast<long>(count), bracket.lower.bits());
  t.expect(bracket.lower < c && c < bracket.upper, [&] {
    return "signed P_2 count " + std::to_string(count) + " outside [" + bracket.lower.to_string(6) + ", " +
           bracket.upper.to_string(6) + "]";
  });

  const auto plain = bounds::find_crossover(1, 200, bounds::GapKind::Plain);
  const auto per_k = bounds::find_crossover(1, 200, bounds::GapKind::PerK);
  auto show = [](const bounds::Crossover& c) {
    return c.first_positive ? "M = " + std::to_string(*c.first_positive) : std::string("none up to 200");
  };
  t.note("P_2 count at 10^6 = " + std::to_string(count));
  t.note("B - A > 0 from " + show(plain));
  t.note("B - A*(ceil(k_hi)-3) > 0 from " + show(per_k));
}

// 13
void determinism_and_persistence(Context& ctx, Tally& t) {
  const auto path = ctx.scratch("tau-roundtrip.cache");
  cache::write_cache(ctx.big_table(), path);
  const TauTable back = cache::read_cache(path);
  std::filesystem::remove(path);
  t.expect(back == ctx.big_table(), [] { return "cache round-trip at 10^5 is not the identity"; });

  const std::vector<std::string> args = {"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--json"};
  int code_a = 0;
  int code_b = 0;
  const std::string a = ctx.run(args, code_a);
  const std::string b = ctx.run(args, code_b);
  t.expect(code_a == 0 && code_b == 0, [] { return "search failed"; });
  t.expect(!a.empty() && strip_timestamp(a) == strip_timestamp(b), [] { return "search payloads differ"; });

  const std::vector<std::string> csv = {"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--csv"};
  t.expect(ctx.run(csv, code_a) == ctx.run(csv, code_b), [] { return "CSV output differs"; });
}

struct Criterion {
  int id;
  Suite suite;
  const char* title;
  void (*run)(Context&, Tally&);
};

constexpr Criterion kCriteria[] = {
    {1, Suite::Series, "coefficient ground truth (series --limit 5)", coefficient_ground_truth},
    {2, Suite::Series, "Lehmer reproduction (tau 63001, smallest prime value)", lehmer_reproduction},
    {3, Suite::Series, "series vs brute-force expansion to 500", series_oracle_equivalence},
    {4, Suite::Series, "Hecke recurrence and multiplicativity to 10^4", hecke_consistency},
    {5, Suite::Series, "parity law to 10^5 on a cached table", parity_law_cached},
    {6, Suite::Congruence, "mod-23 classification for p < 10^4", mod23_classification},
    {7, Suite::Congruence, "prime-power residues mod 23", prime_power_residues},
    {8, Suite::Spectral, "even-index polynomial identities, roots and gaps", spectral_identities},
    {9, Suite::Spectral, "cyclotomic reconstruction of tau(p^{n-1})", cyclotomic_reconstruction},
    {10, Suite::Spectral, "growth |tau(p^k)| > 2^k", growth_report},
    {11, Suite::Search, "census properties over p <= 2000, k <= 6", census_properties},
    {12, Suite::Bounds, "bound formulas vs independent evaluation", bounds_arithmetic},
    {13, Suite::Search, "cache round-trip and search determinism", determinism_and_persistence},
};

}  // namespace

std::optional<Suite> suite_from_string(std::string_view name) {
  if (name == "series") return Suite::Series;
  if (name == "congruence") return Suite::Congruence;
  if (name == "spectral") return Suite::Spectral;
  if (name == "search") return Suite::Search;
  if (name == "bounds") return Suite::Bounds;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<CriterionResult> run_suite(Suite suite, const AcceptanceOptions& options, std::ostream* progress) {
  Context ctx{options, nullptr};
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (suite != Suite::All && suite != c.suite) continue;
    if (progress) *progress << "running criterion " << c.id << ": " << c.title << "...\n" << std::flush;
    CriterionResult r{c.id, c.title, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
      c.run(ctx, tally);
      r.passed = tally.ok();
      r.detail = tally.summary();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(start);
    out.push_back(std::move(r));
  }
  return out;
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.title << " ("
        << std::fixed << std::setprecision(2) << r.seconds << " s) -- " << r.detail << '\n';
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << passed << "/" << results.size() << " criteria passed\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string strip_timestamp(const std::string& json_text) {
  std::istringstream in(json_text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace tau::verify
