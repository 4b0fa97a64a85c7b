#include "tau/cli/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "tau/errors.hpp"

namespace tau::cli {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json envelope(const std::string& command, json parameters, json payload) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)},
              {"timestamp", utc_timestamp()},
              {"tool_version", kToolVersion}};
}

json to_json(const Class23& cls) {
  json j{{"tag", std::string(to_string(cls.tag))}};
  if (cls.witness) {
    j["a"] = cls.witness->first;
    j["b"] = cls.witness->second;
  }
  return j;
}

Class23 class23_from_json(const json& j) {
  Class23 cls;
  cls.tag = class23_tag_from_string(j.at("tag").get<std::string>());
  if (j.contains("a") && j.contains("b")) {
    cls.witness = std::make_pair(j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>());
  }
  return cls;
}

json to_json(const SearchHit& hit) {
  return json{{"p", hit.p},
              {"k", hit.k},
              {"exponent", 2 * hit.k},
              {"value", to_string(hit.value)},
              {"residue23", hit.residue23},
              {"class23", to_json(hit.class23)},
              {"verdict", std::string(to_string(hit.verdict))}};
}

SearchHit hit_from_json(const json& j) {
  SearchHit hit;
  hit.p = j.at("p").get<std::uint64_t>();
  hit.k = j.at("k").get<unsigned>();
  hit.value = parse_bigint(j.at("value").get<std::string>());
  hit.residue23 = j.at("residue23").get<unsigned>();
  hit.class23 = class23_from_json(j.at("class23"));
  hit.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (hit.residue23 != mod_nonneg(hit.value, 23)) {
    throw DomainError("hit for p = " + std::to_string(hit.p) + " has an inconsistent residue23");
  }
  return hit;
}

json search_payload(const SearchResult& result, std::uint64_t p_max, unsigned k_max, const BigInt& cap) {
  json hits = json::array();
  for (const auto& h : result.hits) hits.push_back(to_json(h));
  std::size_t primes = 0;
  for (const auto& h : result.hits) primes += h.verdict == Verdict::ProbablePrime;
  return json{{"grid", {{"p_max", p_max}, {"k_max", k_max}, {"value_cap", to_string(cap)}}},
              {"hits", std::move(hits)},
              {"probable_prime_count", primes},
              {"anomalies", result.anomalies},
              {"note", "finite (p_max, k_max) sample: counts are lower bounds only"}};
}

std::vector<SearchHit> hits_from_document(const json& doc) {
  const json& body = doc.contains("payload") ? doc.at("payload") : doc;
  std::vector<SearchHit> out;
  for (const auto& j : body.at("hits")) out.push_back(hit_from_json(j));
  return out;
}

std::string hits_to_csv(const std::vector<SearchHit>& hits) {
  std::ostringstream out;
  out << "p,k,exponent,value,residue23,class23,witness_a,witness_b,verdict\n";
  for (const auto& h : hits) {
    out << h.p << ',' << h.k << ',' << 2 * h.k << ',' << to_string(h.value) << ',' << h.residue23 << ','
        << to_string(h.class23.tag) << ',';
    if (h.class23.witness) out << h.class23.witness->first << ',' << h.class23.witness->second;
    else out << ',';
    out << ',' << to_string(h.verdict) << '\n';
  }
  return out.str();
}

json census_payload(const CensusReport& census, const std::vector<SearchHit>& hits) {
  json excluded = json::array();
  for (const auto& h : census.excluded_class_hits) excluded.push_back(to_json(h));
  json early = json::array();
  for (const auto& h : census.early_excluded_violations) early.push_back(to_json(h));

  // Per-k counts next to the per-k ceilings, with N = cap.
  std::map<unsigned, std::size_t> per_k;
  for (const auto& h : hits) {
    if (h.verdict == Verdict::ProbablePrime && abs(h.value) <= census.cap) ++per_k[h.k];
  }
  json ceilings = json::array();
  if (census.cap >= 2) {
    const bounds::BoundReport r = bounds::bound_report(census.cap, 30);
    for (const auto& [k, count] : per_k) {
      const Real c(static_cast<long>(count), r.ceiling_half.bits());
      ceilings.push_back({{"k", k},
                          {"count", count},
                          {"sqrt_N", r.ceiling_half.to_string(12)},
                          {"sqrt_N_plus_N_3_11", r.ceiling_half_plus.to_string(12)},
                          {"within_sqrt_N", c <= r.ceiling_half},
                          {"within_sqrt_N_plus_N_3_11", c <= r.ceiling_half_plus}});
    }
  }

  return json{{"cap", to_string(census.cap)},
              {"counts", census.counts},
              {"total_prime_hits", census.total_prime_hits},
              {"excluded_b_set", excluded_b_set()},
              {"excluded_class_hits", std::move(excluded)},
              {"early_excluded_violations", std::move(early)},
              {"per_k_ceilings", std::move(ceilings)},
              {"caveats", bounds::standard_caveats()},
              {"note", "census of a finite search grid: a lower-bound sample, not a complete count"}};
}

json bounds_payload(const bounds::BoundReport& report, const bounds::Crossover& plain,
                    const bounds::Crossover& per_k) {
  constexpr int kShown = 30;
  json per_k_bound = json::object();
  for (const auto& [k, v] : report.per_k_bound) per_k_bound[std::to_string(k)] = v.to_string(kShown);
  auto crossover = [](const bounds::Crossover& c) {
    return json{{"scanned_from", c.scanned_from},
                {"scanned_to", c.scanned_to},
                {"first_positive_M", c.first_positive ? json(*c.first_positive) : json(nullptr)}};
  };
  return json{
      {"N", to_string(report.N)},
      {"k_lo", report.k_lo},
      {"k_hi", report.k_hi.to_string(kShown)},
      {"per_k_bound", std::move(per_k_bound)},
      {"A", report.A.to_string(kShown)},
      {"M", report.M ? json(*report.M) : json(nullptr)},
      {"B", report.B ? json(report.B->to_string(kShown)) : json(nullptr)},
      {"pi_bracket", {{"lower", report.pi_bracket.lower.to_string(kShown)},
                      {"upper", report.pi_bracket.upper.to_string(kShown)}}},
      {"density_fraction", {{"numerator", report.density_fraction.numerator},
                            {"denominator", report.density_fraction.denominator}}},
      {"ceilings", {{"sqrt_N", report.ceiling_half.to_string(kShown)},
                    {"sqrt_N_plus_N_3_11", report.ceiling_half_plus.to_string(kShown)},
                    {"N_9_10", report.ceiling_nine_tenths.to_string(kShown)}}},
      {"crossover_B_minus_A", crossover(plain)},
      {"crossover_B_minus_A_times_k_count", crossover(per_k)},
      {"caveats", report.caveats}};
}

}  // namespace tau::cli
