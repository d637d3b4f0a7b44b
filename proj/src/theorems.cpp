#include "lorenz/theorems.hpp"

#include <utility>

#include "lorenz/jones.hpp"

namespace lorenz {

std::string to_string(EvidenceLevel level) {
    switch (level) {
        case EvidenceLevel::alexander_only: return "alexander_only";
        case EvidenceLevel::alexander_signature: return "alexander_signature";
        case EvidenceLevel::full_jones: return "full_jones";
    }
    throw InternalInvariantViolation("unknown evidence level");
}

OrbitIndex::OrbitIndex(const TemplateSpec& spec, int max_len, int jones_strand_budget)
    : spec_(spec), max_len_(max_len), jones_budget_(jones_strand_budget) {
    for (OrbitWord& w : enumerate_orbits(max_len)) slots_.push_back({std::move(w)});
}

const BraidWord& OrbitIndex::raw_braid(int i) {
    Slot& s = slot(i);
    if (!s.raw) s.raw = build_braid(s.word, spec_);
    return *s.raw;
}

const BraidWord& OrbitIndex::simplified_braid(int i) {
    Slot& s = slot(i);
    if (!s.simplified) s.simplified = simplify_braid(raw_braid(i));
    return *s.simplified;
}

long OrbitIndex::exponent_sum(int i) { return raw_braid(i).exponent_sum(); }

const LaurentPoly& OrbitIndex::alexander(int i) {
    Slot& s = slot(i);
    if (!s.alexander) s.alexander = alexander_burau(simplified_braid(i));
    return *s.alexander;
}

int OrbitIndex::signature_of(int i) {
    Slot& s = slot(i);
    if (!s.signature) s.signature = signature(simplified_braid(i));
    return *s.signature;
}

bool OrbitIndex::jones_in_budget(int i) {
    return simplified_braid(i).strands() <= jones_budget_;
}

const LaurentPoly& OrbitIndex::jones_of(int i) {
    Slot& s = slot(i);
    if (!s.jones_tried) {
        s.jones = jones_tl(simplified_braid(i), jones_budget_);
        s.jones_tried = true;
    }
    return *s.jones;
}

Fingerprint OrbitIndex::full(int i) {
    Fingerprint f;
    f.alexander = alexander(i);
    f.determinant = determinant_invariant(f.alexander);
    f.signature = signature_of(i);
    f.exponent_sum = exponent_sum(i);
    if (jones_in_budget(i)) {
        f.jones = jones_of(i);
        f.jones_computed = true;
    }
    return f;
}

void OrbitIndex::ensure_alexander_table() {
    if (table_built_) return;
    for (int i = 0; i < size(); ++i) by_alexander_[alex_key(alexander(i))].push_back(i);
    table_built_ = true;
}

const std::vector<int>& OrbitIndex::with_alexander(const LaurentPoly& p) {
    ensure_alexander_table();
    auto it = by_alexander_.find(alex_key(p));
    return it == by_alexander_.end() ? no_matches_ : it->second;
}

namespace {

struct MatchOutcome {
    std::optional<int> index;
    EvidenceLevel level = EvidenceLevel::alexander_signature;
    bool jones_demoted = false;  // meaningful only when index is empty
};

// Strongest affordable match in the haystack: scan all (Alexander, signature)
// candidates for a Jones confirmation first; otherwise settle for the first
// candidate on which Jones was unavailable on either side. Candidates whose
// Jones disagrees are refuted.
MatchOutcome match_in(OrbitIndex& haystack, const LaurentPoly& alexander,
                      int signature, const std::optional<LaurentPoly>& jones) {
    MatchOutcome out;
    std::optional<int> fallback;
    for (int i : haystack.with_alexander(alexander)) {
        if (haystack.signature_of(i) != signature) continue;
        if (jones && haystack.jones_in_budget(i)) {
            if (haystack.jones_of(i) == *jones) {
                out.index = i;
                out.level = EvidenceLevel::full_jones;
                return out;
            }
            out.jones_demoted = true;
            continue;
        }
        if (!fallback) fallback = i;
    }
    if (fallback) {
        out.index = fallback;
        out.level = EvidenceLevel::alexander_signature;
        out.jones_demoted = false;
    }
    return out;
}

}  // namespace

InclusionReport verify_inclusion(const TemplateSpec& sub, const TemplateSpec& super,
                                 int sub_max_len, int super_search_len,
                                 int jones_strand_budget) {
    InclusionReport report;
    report.sub = sub;
    report.super = super;
    report.sub_max_len = sub_max_len;
    report.super_search_len = super_search_len;
    report.jones_strand_budget = jones_strand_budget;

    OrbitIndex sub_index(sub, sub_max_len, jones_strand_budget);
    OrbitIndex haystack(super, super_search_len, jones_strand_budget);
    for (int i = 0; i < sub_index.size(); ++i) {
        Fingerprint f = sub_index.full(i);
        MatchOutcome m = match_in(haystack, f.alexander, f.signature, f.jones);
        if (m.index) {
            report.matched.push_back({sub_index.word(i), haystack.word(*m.index), m.level});
        } else {
            report.unmatched.push_back({sub_index.word(i), m.jones_demoted});
        }
    }
    return report;
}

std::vector<CompositeReport> find_composites(const TemplateSpec& spec, int max_len,
                                             const PrimeCatalog& catalog,
                                             int jones_strand_budget) {
    struct FactorPair {
        int i, j;
        Fingerprint product;
    };
    std::unordered_map<std::string, std::vector<FactorPair>> by_product_alexander;
    const auto& entries = catalog.entries();
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
        if (entries[static_cast<std::size_t>(i)].fp.trivial()) continue;
        for (int j = 0; j < static_cast<int>(entries.size()); ++j) {
            if (entries[static_cast<std::size_t>(j)].fp.trivial()) continue;
            Fingerprint product = product_fingerprint(
                entries[static_cast<std::size_t>(i)].fp,
                entries[static_cast<std::size_t>(j)].fp);
            std::string key = alex_key(product.alexander);
            by_product_alexander[std::move(key)].push_back({i, j, std::move(product)});
        }
    }

    std::vector<CompositeReport> reports;
    OrbitIndex index(spec, max_len, jones_strand_budget);
    for (int k = 0; k < index.size(); ++k) {
        auto it = by_product_alexander.find(alex_key(index.alexander(k)));
        if (it == by_product_alexander.end()) continue;

        const FactorPair* best = nullptr;
        EvidenceLevel best_level = EvidenceLevel::alexander_signature;
        for (const FactorPair& pair : it->second) {
            if (pair.product.signature != index.signature_of(k)) continue;
            if (pair.product.jones_computed && index.jones_in_budget(k)) {
                if (index.jones_of(k) == *pair.product.jones) {
                    best = &pair;
                    best_level = EvidenceLevel::full_jones;
                    break;
                }
                continue;  // refuted by Jones
            }
            if (!best) {
                best = &pair;
                best_level = EvidenceLevel::alexander_signature;
            }
        }
        if (!best) continue;
        reports.push_back({spec, index.word(k),
                           entries[static_cast<std::size_t>(best->i)],
                           entries[static_cast<std::size_t>(best->j)], best_level});
    }
    return reports;
}

std::optional<SumWitness> verify_connected_sum(const OrbitWord& u, const OrbitWord& v,
                                               OrbitIndex& target_index) {
    const int budget = target_index.jones_strand_budget();
    Fingerprint fu = fingerprint(u, TemplateSpec{0, 2, false}, budget);
    Fingerprint fv = fingerprint(v, TemplateSpec{0, 2, true}, budget);
    Fingerprint product = product_fingerprint(fu, fv);
    MatchOutcome m =
        match_in(target_index, product.alexander, product.signature, product.jones);
    if (!m.index) return std::nullopt;
    return SumWitness{target_index.word(*m.index), m.level};
}

std::optional<SumWitness> verify_connected_sum(const OrbitWord& u, const OrbitWord& v,
                                               const TemplateSpec& target,
                                               int search_len, int jones_strand_budget) {
    OrbitIndex target_index(target, search_len, jones_strand_budget);
    return verify_connected_sum(u, v, target_index);
}

}  // namespace lorenz
