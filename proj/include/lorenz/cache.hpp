#pragma once

// JSON serialization for invariant data and reports, plus the JSON Lines
// fingerprint cache (one record per orbit, schema-versioned, merged by key).

#include <string>
#include <vector>

#include <json.hpp>

#include "lorenz/catalog.hpp"
#include "lorenz/theorems.hpp"

namespace lorenz {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheRecord {
    int schema_version = kCacheSchemaVersion;
    TemplateSpec spec;
    std::string word;
    Fingerprint fp;

    friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

// Merge/dedup key: template and word identify a record.
std::string cache_key(const TemplateSpec& spec, const std::string& word);
inline std::string cache_key(const CacheRecord& r) { return cache_key(r.spec, r.word); }

// Laurent polynomials serialize as ordered [exponent, coefficient] pairs with
// the coefficient as a decimal string, so arbitrary-precision values survive.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json fingerprint_to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const CacheRecord& r);
CacheRecord record_from_json(const nlohmann::json& j);

// Report serializers; budgets are echoed into every document.
nlohmann::json inclusion_report_to_json(const InclusionReport& r);
nlohmann::json composite_reports_to_json(const TemplateSpec& spec, int max_len,
                                         int catalog_len, int jones_strand_budget,
                                         const std::vector<CompositeReport>& reports);
nlohmann::json catalog_to_json(const PrimeCatalog& catalog, int max_len,
                               int jones_strand_budget);
nlohmann::json sum_result_to_json(const OrbitWord& u, const OrbitWord& v,
                                  const TemplateSpec& target, int search_len,
                                  int jones_strand_budget,
                                  const std::optional<SumWitness>& witness);

// JSON Lines cache IO. Reading throws InvalidInput on malformed content;
// writing goes through a temporary file and an atomic rename, and removes
// the partial file if anything fails.
std::vector<CacheRecord> read_cache_file(const std::string& path);
void write_cache_file(const std::string& path, const std::vector<CacheRecord>& records);

// Order-independent merge: dedup by key, then sort by (template, word).
std::vector<CacheRecord> merge_records(const std::vector<CacheRecord>& a,
                                       const std::vector<CacheRecord>& b);

}  // namespace lorenz
