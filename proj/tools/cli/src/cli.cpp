#include "tau/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tau/bounds.hpp"
#include "tau/cache.hpp"
#include "tau/cli/report.hpp"
#include "tau/congruence.hpp"
#include "tau/errors.hpp"
#include "tau/hecke.hpp"
#include "tau/primes.hpp"
#include "tau/search.hpp"
#include "tau/series.hpp"
#include "tau/spectral.hpp"
#include "tau/verify/acceptance.hpp"

namespace tau::cli {

namespace {

namespace fs = std::filesystem;

// "12345", "-7", "1e40" or "3e5". Mantissa must be an integer.
BigInt parse_cap(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_bigint(text);
  const BigInt mantissa = parse_bigint(text.substr(0, e));
  const std::string exp_text = text.substr(e + 1);
  if (exp_text.empty() || !std::all_of(exp_text.begin(), exp_text.end(), ::isdigit) || exp_text.size() > 6) {
    throw DomainError("bad exponent in '" + text + "'");
  }
  return mantissa * pow_ui(10, static_cast<unsigned long>(std::stoul(exp_text)));
}

std::optional<fs::path> resolve_cache(const std::string& explicit_path) {
  if (!explicit_path.empty()) return fs::path(explicit_path);
  if (const char* dir = std::getenv(kCacheDirEnv); dir != nullptr && *dir != '\0') {
    return fs::path(dir) / kDefaultCacheName;
  }
  return std::nullopt;
}

// Table with limit >= `limit`. Reads the cache when it covers the request,
// otherwise computes and (when a cache path is known) refreshes the file.
TauTable load_table(std::size_t limit, const std::optional<fs::path>& cache) {
  limit = std::max<std::size_t>(limit, 1);
  if (cache && fs::exists(*cache)) {
    if (cache::peek_limit(*cache) >= limit) return cache::read_cache(*cache);
  }
  TauTable table = delta_series(limit);
  if (cache) {
    if (cache->has_parent_path()) fs::create_directories(cache->parent_path());
    cache::write_cache(table, *cache);
  }
  return table;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  const BigInt v = parse_bigint(text);
  if (v < 0 || v > BigInt(std::to_string(UINT64_MAX))) {
    throw DomainError(std::string(what) + " out of range: " + text);
  }
  return std::stoull(text);
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string class_text(const Class23& cls) {
  std::string s(to_string(cls.tag));
  if (cls.witness) s += " a=" + std::to_string(cls.witness->first) + " b=" + std::to_string(cls.witness->second);
  return s;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ramanujan tau computations, congruence classes and prime-value searches", "tau"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // Filled by the chosen subcommand and run after parsing.
  std::function<int()> action;

  // series
  std::size_t series_limit = 0;
  std::string series_out;
  auto* series = app.add_subcommand("series", "compute tau(1..N) and write a TAUCACHE file");
  series->add_option("--limit", series_limit, "N")->required()->check(CLI::PositiveNumber);
  series->add_option("--out", series_out, "output path (stdout when omitted)");
  series->callback([&] {
    action = [&] {
      const TauTable table = delta_series(series_limit);
      if (series_out.empty()) cache::write_cache(table, out);
      else cache::write_cache(table, fs::path(series_out));
      return kExitOk;
    };
  });

  // tau
  std::string tau_n;
  std::string tau_cache;
  auto* tau_cmd = app.add_subcommand("tau", "print tau(N)");
  tau_cmd->add_option("N", tau_n, "positive integer")->required();
  tau_cmd->add_option("--cache", tau_cache, "TAUCACHE file to read or create");
  tau_cmd->callback([&] {
    action = [&] {
      const std::uint64_t n = parse_u64(tau_n, "N");
      if (n == 0) throw DomainError("tau is defined for n >= 1");
      const Factorization f = factorize(n);
      const std::uint64_t largest = f.factors.empty() ? 1 : f.factors.back().first;
      const auto cache = resolve_cache(tau_cache);
      // A covering cache answers directly; otherwise only tau at the prime factors is needed.
      if (cache && fs::exists(*cache) && cache::peek_limit(*cache) >= n) {
        out << to_string(cache::read_cache(*cache)[n]) << '\n';
        return kExitOk;
      }
      const TauTable table = load_table(static_cast<std::size_t>(largest), cache);
      std::map<std::uint64_t, BigInt> at_primes;
      for (const auto& [p, e] : f.factors) at_primes[p] = table[static_cast<std::size_t>(p)];
      out << to_string(tau_of_n(f, at_primes)) << '\n';
      return kExitOk;
    };
  });

  // prime-power
  std::uint64_t pp_p = 0;
  unsigned pp_k = 0;
  auto* pp = app.add_subcommand("prime-power", "print tau(P^K)");
  pp->add_option("P", pp_p, "prime")->required();
  pp->add_option("K", pp_k, "exponent")->required();
  pp->callback([&] {
    action = [&] {
      if (!is_prime_u64(pp_p)) throw DomainError(std::to_string(pp_p) + " is not prime");
      const TauTable table = load_table(static_cast<std::size_t>(pp_p), resolve_cache(""));
      out << to_string(tau_prime_power(make_local(table, pp_p), pp_k)) << '\n';
      return kExitOk;
    };
  });

  // classify
  std::int64_t cls_p = 0;
  auto* cls = app.add_subcommand("classify", "mod-23 class of a prime");
  cls->add_option("P", cls_p, "prime (sign ignored)")->required();
  cls->callback([&] {
    action = [&] {
      out << class_text(classify_mod23(cls_p)) << '\n';
      return kExitOk;
    };
  });

  // congruence-table
  std::uint64_t ct_pmax = 0;
  bool ct_json = false;
  auto* ct = app.add_subcommand("congruence-table", "tau(p) mod 23 against the class prediction");
  ct->add_option("--pmax", ct_pmax, "largest prime")->required();
  ct->add_flag("--json", ct_json, "JSON envelope instead of text");
  ct->callback([&] {
    action = [&] {
      const TauTable table = load_table(static_cast<std::size_t>(std::max<std::uint64_t>(ct_pmax, 2)),
                                        resolve_cache(""));
      json rows = json::array();
      std::size_t mismatches = 0;
      for (std::uint64_t p : primes_up_to(ct_pmax)) {
        const Class23 c = classify_mod23(static_cast<std::int64_t>(p));
        const unsigned actual = mod_nonneg(table[static_cast<std::size_t>(p)], 23);
        json row{{"p", p}, {"class23", to_json(c)}, {"tau_mod_23", actual}};
        if (c.tag == Class23Tag::IsTwentyThree) {
          row["predicted"] = nullptr;
          row["match"] = nullptr;
        } else {
          const unsigned predicted = tau_mod23(c, 1);
          row["predicted"] = predicted;
          row["match"] = predicted == actual;
          mismatches += predicted != actual;
        }
        rows.push_back(std::move(row));
      }
      if (ct_json) {
        print_json(out, envelope("congruence-table", {{"pmax", ct_pmax}},
                                 {{"rows", rows}, {"mismatches", mismatches}}));
      } else {
        out << "p\tclass\ttau_mod_23\tpredicted\n";
        for (const auto& r : rows) {
          out << r["p"].get<std::uint64_t>() << '\t' << r["class23"]["tag"].get<std::string>() << '\t'
              << r["tau_mod_23"].get<unsigned>() << '\t'
              << (r["predicted"].is_null() ? std::string("-") : std::to_string(r["predicted"].get<unsigned>()))
              << '\n';
        }
        out << "mismatches: " << mismatches << '\n';
      }
      return mismatches == 0 ? kExitOk : kExitDomain;
    };
  });

  // poly
  unsigned poly_k = 0;
  bool poly_roots = false;
  int poly_digits = 0;
  auto* poly = app.add_subcommand("poly", "even-index polynomial G_k(x, y)");
  poly->add_option("--k", poly_k, "degree")->required();
  poly->add_flag("--roots", poly_roots, "also print the roots of G_k(1, y) and their minimum gap");
  poly->add_option("--digits", poly_digits, "decimal digits for roots (default max(50, 4k))");
  poly->callback([&] {
    action = [&] {
      const EvenIndexPoly g = even_index_poly(poly_k);
      out << format_poly(g) << '\n';
      if (poly_roots && poly_k >= 1) {
        const int digits = poly_digits > 0 ? poly_digits : default_spectral_digits(poly_k);
        const RootSet roots = root_set(poly_k, digits);
        const int shown = std::min(digits, 40);
        for (std::size_t j = 0; j < roots.alphas.size(); ++j) {
          out << "alpha_" << j + 1 << " = " << roots.alphas[j].to_string(shown) << '\n';
        }
        if (poly_k >= 2) out << "min_gap = " << min_gap(poly_k, digits).to_string(shown) << '\n';
      }
      return kExitOk;
    };
  });

  // search
  std::uint64_t s_pmax = 0;
  unsigned s_kmax = 0;
  std::string s_vmax;
  bool s_json = false;
  bool s_csv = false;
  int s_rounds = 0;
  auto* search = app.add_subcommand("search", "scan tau(p^{2k}) for probable primes");
  search->add_option("--pmax", s_pmax, "largest prime p")->required();
  search->add_option("--kmax", s_kmax, "largest k (exponent 2k)")->required()->check(CLI::PositiveNumber);
  search->add_option("--vmax", s_vmax, "value cap, integer or 1eN")->required();
  auto* json_flag = search->add_flag("--json", s_json, "JSON envelope");
  search->add_flag("--csv", s_csv, "CSV rows")->excludes(json_flag);
  search->add_option("--extra-rounds", s_rounds, "Miller-Rabin rounds on top of BPSW")->check(CLI::NonNegativeNumber);
  search->callback([&] {
    action = [&] {
      const BigInt cap = parse_cap(s_vmax);
      if (cap < 0) throw DomainError("--vmax must be non-negative");
      SearchOptions opts;
      opts.primality.extra_rounds = s_rounds;
      SearchResult result;
      if (s_pmax >= 2) {
        const TauTable table = load_table(static_cast<std::size_t>(s_pmax), resolve_cache(""));
        result = search_prime_tau(table, s_pmax, s_kmax, cap, opts);
      }
      if (s_json) {
        json params{{"pmax", s_pmax}, {"kmax", s_kmax}, {"vmax", to_string(cap)}, {"extra_rounds", s_rounds}};
        print_json(out, envelope("search", std::move(params), search_payload(result, s_pmax, s_kmax, cap)));
      } else if (s_csv) {
        out << hits_to_csv(result.hits);
      } else {
        std::size_t primes = 0;
        for (const auto& h : result.hits) {
          if (h.verdict != Verdict::ProbablePrime) continue;
          ++primes;
          out << "tau(" << h.p << "^" << 2 * h.k << ") = " << to_string(h.value) << "  [" << h.residue23
              << " mod 23, " << to_string(h.class23.tag) << "]\n";
        }
        out << result.hits.size() << " values examined, " << primes << " probable primes\n";
        for (const auto& a : result.anomalies) out << "anomaly: " << a << '\n';
      }
      return kExitOk;
    };
  });

  // smallest-prime
  std::size_t sp_limit = 0;
  std::string sp_cache;
  auto* sp = app.add_subcommand("smallest-prime", "first n <= N with tau(n) prime");
  sp->add_option("--limit", sp_limit, "N")->required()->check(CLI::PositiveNumber);
  sp->add_option("--cache", sp_cache, "TAUCACHE file to read or create");
  sp->callback([&] {
    action = [&] {
      const TauTable table = load_table(sp_limit, resolve_cache(sp_cache));
      const auto found = smallest_prime_tau(table, sp_limit);
      if (found) out << found->first << ' ' << to_string(found->second) << '\n';
      else out << "none\n";
      return kExitOk;
    };
  });

  // bounds
  std::string b_n;
  unsigned b_scan = 200;
  auto* bnd = app.add_subcommand("bounds", "explicit counting bounds at N");
  bnd->add_option("--N", b_n, "N >= 2")->required();
  bnd->add_option("--scan-to", b_scan, "largest M scanned for the B - A crossover")->check(CLI::Range(2u, 2000u));
  bnd->callback([&] {
    action = [&] {
      const BigInt n = parse_cap(b_n);
      const bounds::BoundReport report = bounds::bound_report(n);
      const auto plain = bounds::find_crossover(1, b_scan, bounds::GapKind::Plain);
      const auto per_k = bounds::find_crossover(1, b_scan, bounds::GapKind::PerK);
      print_json(out, envelope("bounds", {{"N", to_string(n)}, {"scan_to", b_scan}},
                               bounds_payload(report, plain, per_k)));
      return kExitOk;
    };
  });

  // census
  std::string c_from;
  std::string c_cap;
  auto* census = app.add_subcommand("census", "tally probable-prime hits by residue mod 23");
  census->add_option("--from", c_from, "hits JSON from `search --json`")->required();
  census->add_option("--cap", c_cap, "value cap, integer or 1eN")->required();
  census->callback([&] {
    action = [&] {
      std::ifstream in(c_from);
      if (!in) throw DomainError("cannot open " + c_from);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw DomainError("cannot parse " + c_from + ": " + e.what());
      }
      std::vector<SearchHit> hits;
      try {
        hits = hits_from_document(doc);
      } catch (const json::exception& e) {
        throw DomainError("bad hit list in " + c_from + ": " + e.what());
      }
      const BigInt cap = parse_cap(c_cap);
      const CensusReport report = census_by_residue(hits, cap);
      print_json(out, envelope("census", {{"from", c_from}, {"cap", to_string(cap)}},
                               census_payload(report, hits)));
      return report.early_excluded_violations.empty() ? kExitOk : kExitDomain;
    };
  });

  // verify
  std::string v_suite = "all";
  auto* ver = app.add_subcommand("verify", "run the acceptance checks");
  ver->add_option("--suite", v_suite, "series|congruence|spectral|search|bounds|all")
      ->check(CLI::IsMember({"series", "congruence", "spectral", "search", "bounds", "all"}));
  ver->callback([&] {
    action = [&] {
      verify::AcceptanceOptions opts;
      opts.run_command = [](const std::vector<std::string>& a, std::ostream& o, std::ostream& e) {
        return run_command(a, o, e);
      };
      const auto results = verify::run_suite(*verify::suite_from_string(v_suite), opts, &err);
      verify::print_results(results, out);
      return verify::all_passed(results) ? kExitOk : kExitDomain;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const cache::CacheError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitDomain;
}

}  // namespace tau::cli
