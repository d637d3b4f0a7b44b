#include "lorenz/fingerprint.hpp"

#include "lorenz/jones.hpp"

namespace lorenz {

std::string alex_key(const LaurentPoly& alexander) {
    std::string key;
    for (const auto& [e, c] : alexander.terms())
        key += std::to_string(e) + ":" + c.str() + ",";
    return key;
}

std::string alex_sig_key(const LaurentPoly& alexander, int signature) {
    return "s" + std::to_string(signature) + "|" + alex_key(alexander);
}

Fingerprint fingerprint(const OrbitWord& w, const TemplateSpec& spec,
                        int jones_strand_budget) {
    BraidWord raw = build_braid(w, spec);
    BraidWord b = simplify_braid(raw);
    Fingerprint f;
    f.exponent_sum = raw.exponent_sum();
    f.alexander = alexander_burau(b);
    f.determinant = determinant_invariant(f.alexander);
    if (f.determinant % 2 == 0)
        throw InternalInvariantViolation("even determinant for a knot");
    f.signature = signature(b);
    if (f.signature % 2 != 0)
        throw InternalInvariantViolation("odd signature for a knot");
    if (b.strands() <= jones_strand_budget) {
        f.jones = jones_tl(b, jones_strand_budget);
        f.jones_computed = true;
    }
    return f;
}

Fingerprint product_fingerprint(const Fingerprint& a, const Fingerprint& b) {
    Fingerprint f;
    f.alexander = normalize_alexander(a.alexander * b.alexander);
    f.determinant = determinant_invariant(f.alexander);
    f.signature = a.signature + b.signature;
    f.exponent_sum = a.exponent_sum + b.exponent_sum;
    if (a.jones_computed && b.jones_computed) {
        f.jones = *a.jones * *b.jones;
        f.jones_computed = true;
    }
    return f;
}

}  // namespace lorenz
