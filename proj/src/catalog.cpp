#include "lorenz/catalog.hpp"

namespace lorenz {

void PrimeCatalog::add(CatalogEntry e) {
    const std::string key = alex_sig_key(e.fp.alexander, e.fp.signature);
    auto it = by_key_.find(key);
    if (it == by_key_.end()) {
        by_key_.emplace(key, static_cast<int>(entries_.size()));
        entries_.push_back(std::move(e));
        return;
    }
    CatalogEntry& held = entries_[static_cast<std::size_t>(it->second)];
    if (!held.fp.jones_computed && e.fp.jones_computed) held = std::move(e);
}

const CatalogEntry* PrimeCatalog::find_by_invariants(const LaurentPoly& alexander,
                                                     int signature) const {
    auto it = by_key_.find(alex_sig_key(alexander, signature));
    if (it == by_key_.end()) return nullptr;
    return &entries_[static_cast<std::size_t>(it->second)];
}

namespace {

LaurentPoly poly_from(std::initializer_list<std::pair<long, long>> terms) {
    std::vector<std::pair<long, Int>> v;
    for (auto [e, c] : terms) v.emplace_back(e, Int(c));
    return LaurentPoly::from_terms(v);
}

struct NamedKnot {
    LaurentPoly alexander;
    int signature;
    std::string name;
};

const std::vector<NamedKnot>& named_knots() {
    static const std::vector<NamedKnot> table = [] {
        std::vector<NamedKnot> t;
        t.push_back({LaurentPoly::one(), 0, "unknot"});
        const LaurentPoly trefoil = poly_from({{1, 1}, {0, -1}, {-1, 1}});
        t.push_back({trefoil, -2, "trefoil"});
        t.push_back({trefoil, 2, "trefoil (mirror)"});
        const LaurentPoly t25 =
            poly_from({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}});
        t.push_back({t25, -4, "T(2,5)"});
        t.push_back({t25, 4, "T(2,5) (mirror)"});
        const LaurentPoly t27 = poly_from(
            {{3, 1}, {2, -1}, {1, 1}, {0, -1}, {-1, 1}, {-2, -1}, {-3, 1}});
        t.push_back({t27, -6, "T(2,7)"});
        t.push_back({t27, 6, "T(2,7) (mirror)"});
        const LaurentPoly t29 = poly_from({{4, 1},
                                           {3, -1},
                                           {2, 1},
                                           {1, -1},
                                           {0, 1},
                                           {-1, -1},
                                           {-2, 1},
                                           {-3, -1},
                                           {-4, 1}});
        t.push_back({t29, -8, "T(2,9)"});
        t.push_back({t29, 8, "T(2,9) (mirror)"});
        const LaurentPoly t34 =
            poly_from({{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}});
        t.push_back({t34, -6, "T(3,4)"});
        t.push_back({t34, 6, "T(3,4) (mirror)"});
        const LaurentPoly t35 = poly_from(
            {{4, 1}, {3, -1}, {1, 1}, {0, -1}, {-1, 1}, {-3, -1}, {-4, 1}});
        t.push_back({t35, -8, "T(3,5)"});
        t.push_back({t35, 8, "T(3,5) (mirror)"});
        return t;
    }();
    return table;
}

}  // namespace

std::string builtin_knot_name(const Fingerprint& f) {
    for (const NamedKnot& k : named_knots()) {
        if (k.signature == f.signature && k.alexander == f.alexander) return k.name;
    }
    return "";
}

PrimeCatalog build_prime_catalog(int max_len, int jones_strand_budget) {
    PrimeCatalog catalog;
    const TemplateSpec plain{0, 0, false};
    const TemplateSpec mirrored{0, 0, true};

    const OrbitWord unknot_word("x");
    Fingerprint unknot_fp = fingerprint(unknot_word, plain, jones_strand_budget);
    catalog.add({"unknot", std::move(unknot_fp), unknot_word, plain});

    for (const OrbitWord& w : enumerate_orbits(max_len)) {
        for (const TemplateSpec& spec : {plain, mirrored}) {
            Fingerprint fp = fingerprint(w, spec, jones_strand_budget);
            std::string name = builtin_knot_name(fp);
            if (name.empty())
                name = "orbit " + w.letters() + " on " + spec.str();
            catalog.add({std::move(name), std::move(fp), w, spec});
        }
    }
    return catalog;
}

}  // namespace lorenz
