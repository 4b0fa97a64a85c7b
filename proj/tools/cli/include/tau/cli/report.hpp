#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tau/bounds.hpp"
#include "tau/search.hpp"

// JSON and CSV encodings of the report payloads. Big integers are always
// decimal strings.
namespace tau::cli {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// {"command", "parameters", "payload", "timestamp", "tool_version"}.
json envelope(const std::string& command, json parameters, json payload);

json to_json(const Class23& cls);
Class23 class23_from_json(const json& j);

json to_json(const SearchHit& hit);
SearchHit hit_from_json(const json& j);

json search_payload(const SearchResult& result, std::uint64_t p_max, unsigned k_max, const BigInt& cap);

// Accepts a full envelope from `search --json` or a bare {"hits": [...]}.
std::vector<SearchHit> hits_from_document(const json& doc);

std::string hits_to_csv(const std::vector<SearchHit>& hits);

json census_payload(const CensusReport& census, const std::vector<SearchHit>& hits);

json bounds_payload(const bounds::BoundReport& report, const bounds::Crossover& plain,
                    const bounds::Crossover& per_k);

std::string utc_timestamp();

}  // namespace tau::cli
