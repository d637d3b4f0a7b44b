#include "lorenz/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace lorenz {

namespace {

using nlohmann::json;

std::string spec_sort_key(const TemplateSpec& s) {
    return std::to_string(s.m) + "|" + std::to_string(s.n) + "|" +
           (s.mirrored ? "1" : "0");
}

}  // namespace

std::string cache_key(const TemplateSpec& spec, const std::string& word) {
    return spec_sort_key(spec) + "|" + word;
}

json poly_to_json(const LaurentPoly& p) {
    json pairs = json::array();
    for (const auto& [e, c] : p.terms()) pairs.push_back({e, c.str()});
    return pairs;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of pairs");
    std::vector<std::pair<long, Int>> terms;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw InvalidInput("polynomial term must be [exponent, coefficient]");
        long e = pair[0].get<long>();
        Int c;
        if (pair[1].is_string())
            c = Int(pair[1].get<std::string>());
        else
            c = Int(pair[1].get<long long>());
        terms.emplace_back(e, std::move(c));
    }
    return LaurentPoly::from_terms(terms);
}

json fingerprint_to_json(const Fingerprint& f) {
    json j;
    j["alexander"] = poly_to_json(f.alexander);
    j["determinant"] = f.determinant.str();
    j["signature"] = f.signature;
    j["exponent_sum"] = f.exponent_sum;
    j["jones"] = f.jones_computed ? poly_to_json(*f.jones) : json(nullptr);
    return j;
}

Fingerprint fingerprint_from_json(const json& j) {
    Fingerprint f;
    f.alexander = poly_from_json(j.at("alexander"));
    f.determinant = Int(j.at("determinant").get<std::string>());
    f.signature = j.at("signature").get<int>();
    f.exponent_sum = j.at("exponent_sum").get<long>();
    if (!j.at("jones").is_null()) {
        f.jones = poly_from_json(j.at("jones"));
        f.jones_computed = true;
    }
    return f;
}

json record_to_json(const CacheRecord& r) {
    json j = fingerprint_to_json(r.fp);
    j["schema_version"] = r.schema_version;
    j["m"] = r.spec.m;
    j["n"] = r.spec.n;
    j["mirrored"] = r.spec.mirrored;
    j["word"] = r.word;
    return j;
}

CacheRecord record_from_json(const json& j) {
    CacheRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kCacheSchemaVersion)
        throw InvalidInput("unsupported cache schema version " +
                           std::to_string(r.schema_version));
    r.spec = TemplateSpec{j.at("m").get<int>(), j.at("n").get<int>(),
                          j.at("mirrored").get<bool>()};
    r.word = j.at("word").get<std::string>();
    r.fp = fingerprint_from_json(j);
    return r;
}

json inclusion_report_to_json(const InclusionReport& r) {
    json matched = json::array();
    for (const MatchRecord& m : r.matched) {
        matched.push_back({{"sub_word", m.sub_word.letters()},
                           {"super_word", m.super_word.letters()},
                           {"evidence_level", to_string(m.level)}});
    }
    json unmatched = json::array();
    for (const UnmatchedRecord& u : r.unmatched) {
        unmatched.push_back(
            {{"word", u.word.letters()}, {"jones_demoted", u.jones_demoted}});
    }
    return json{{"schema_version", kCacheSchemaVersion},
                {"sub", r.sub.str()},
                {"super", r.super.str()},
                {"sub_max_len", r.sub_max_len},
                {"super_search_len", r.super_search_len},
                {"jones_strand_budget", r.jones_strand_budget},
                {"verified", r.verified()},
                {"matched", std::move(matched)},
                {"unmatched", std::move(unmatched)}};
}

namespace {

json catalog_entry_to_json(const CatalogEntry& e) {
    return json{{"name", e.name},
                {"word", e.word.letters()},
                {"template", e.source.str()},
                {"fingerprint", fingerprint_to_json(e.fp)}};
}

}  // namespace

json composite_reports_to_json(const TemplateSpec& spec, int max_len, int catalog_len,
                               int jones_strand_budget,
                               const std::vector<CompositeReport>& reports) {
    json items = json::array();
    for (const CompositeReport& r : reports) {
        items.push_back({{"word", r.word.letters()},
                         {"evidence_level", to_string(r.level)},
                         {"factor1", catalog_entry_to_json(r.factor1)},
                         {"factor2", catalog_entry_to_json(r.factor2)}});
    }
    return json{{"schema_version", kCacheSchemaVersion},
                {"template", spec.str()},
                {"max_len", max_len},
                {"catalog_len", catalog_len},
                {"jones_strand_budget", jones_strand_budget},
                {"reports", std::move(items)}};
}

json catalog_to_json(const PrimeCatalog& catalog, int max_len, int jones_strand_budget) {
    json items = json::array();
    for (const CatalogEntry& e : catalog.entries()) items.push_back(catalog_entry_to_json(e));
    return json{{"schema_version", kCacheSchemaVersion},
                {"max_len", max_len},
                {"jones_strand_budget", jones_strand_budget},
                {"entries", std::move(items)}};
}

json sum_result_to_json(const OrbitWord& u, const OrbitWord& v,
                        const TemplateSpec& target, int search_len,
                        int jones_strand_budget,
                        const std::optional<SumWitness>& witness) {
    json j{{"schema_version", kCacheSchemaVersion},
           {"u", u.letters()},
           {"v", v.letters()},
           {"target", target.str()},
           {"search_len", search_len},
           {"jones_strand_budget", jones_strand_budget},
           {"found", witness.has_value()}};
    if (witness) {
        j["witness"] = witness->word.letters();
        j["evidence_level"] = to_string(witness->level);
    }
    return j;
}

std::vector<CacheRecord> read_cache_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open cache file: " + path);
    std::vector<CacheRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw InvalidInput(path + ":" + std::to_string(line_no) +
                               ": malformed JSON line");
        try {
            records.push_back(record_from_json(j));
        } catch (const json::exception& e) {
            throw InvalidInput(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

void write_cache_file(const std::string& path, const std::vector<CacheRecord>& records) {
    const std::string tmp = path + ".tmp";
    try {
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw InvalidInput("cannot open for writing: " + tmp);
            for (const CacheRecord& r : records) out << record_to_json(r).dump() << "\n";
            out.flush();
            if (!out) throw InvalidInput("write failed: " + tmp);
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

std::vector<CacheRecord> merge_records(const std::vector<CacheRecord>& a,
                                       const std::vector<CacheRecord>& b) {
    std::vector<CacheRecord> merged;
    std::unordered_set<std::string> seen;
    for (const auto* side : {&a, &b}) {
        for (const CacheRecord& r : *side) {
            if (seen.insert(cache_key(r)).second) merged.push_back(r);
        }
    }
    std::sort(merged.begin(), merged.end(), [](const CacheRecord& x, const CacheRecord& y) {
        if (x.spec.m != y.spec.m) return x.spec.m < y.spec.m;
        if (x.spec.n != y.spec.n) return x.spec.n < y.spec.n;
        if (x.spec.mirrored != y.spec.mirrored) return y.spec.mirrored;
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return merged;
}

}  // namespace lorenz
