#include <doctest.h>

#include <algorithm>

#include "lorenz/theorems.hpp"

using namespace lorenz;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms) {
    std::vector<std::pair<long, Int>> v;
    for (auto [e, c] : terms) v.emplace_back(e, Int(c));
    return LaurentPoly::from_terms(v);
}

const LaurentPoly kTrefoilAlex = poly({{-1, 1}, {0, -1}, {1, 1}});
const LaurentPoly kSquareAlex = poly({{-2, 1}, {-1, -2}, {0, 3}, {1, -2}, {2, 1}});

bool has_unmatched(const InclusionReport& r, const std::string& word) {
    return std::any_of(r.unmatched.begin(), r.unmatched.end(),
                       [&](const UnmatchedRecord& u) { return u.word.letters() == word; });
}

}  // namespace

TEST_CASE("evidence level names") {
    CHECK(to_string(EvidenceLevel::alexander_only) == "alexander_only");
    CHECK(to_string(EvidenceLevel::alexander_signature) == "alexander_signature");
    CHECK(to_string(EvidenceLevel::full_jones) == "full_jones");
}

TEST_CASE("orbit index memoizes invariants lazily") {
    OrbitIndex index({0, 0, false}, 5);
    CHECK(index.size() == 14);
    CHECK(index.spec() == TemplateSpec{0, 0, false});
    CHECK(index.max_len() == 5);
    CHECK(index.word(0) == OrbitWord("x"));

    // The trefoil lives at xxyxy and xyxyy; everything shorter is trivial.
    const auto& hits = index.with_alexander(kTrefoilAlex);
    REQUIRE(hits.size() == 2);
    CHECK(index.word(hits[0]).letters() == "xxyxy");
    CHECK(index.word(hits[1]).letters() == "xyxyy");
    CHECK(index.signature_of(hits[0]) == -2);
    CHECK(index.jones_in_budget(hits[0]));
    CHECK(index.jones_of(hits[0]) == poly({{1, 1}, {3, 1}, {4, -1}}));
    CHECK(index.exponent_sum(hits[0]) == 6);

    CHECK(index.with_alexander(kSquareAlex).empty());

    Fingerprint f = index.full(hits[1]);
    CHECK(f.alexander == kTrefoilAlex);
    CHECK(f.determinant == 3);
    CHECK(f.signature == -2);
    CHECK(f.jones_computed);

    // The index agrees with the one-shot pipeline.
    Fingerprint direct = fingerprint(OrbitWord("xyxyy"), {0, 0, false});
    CHECK(f == direct);
}

TEST_CASE("prime catalog construction") {
    PrimeCatalog tiny = build_prime_catalog(2);
    REQUIRE(tiny.entries().size() == 1);
    CHECK(tiny.entries()[0].name == "unknot");
    CHECK(tiny.entries()[0].fp.trivial());

    PrimeCatalog five = build_prime_catalog(5);
    REQUIRE(five.entries().size() == 3);
    CHECK(five.entries()[0].name == "unknot");
    CHECK(five.entries()[1].name == "trefoil");
    CHECK(five.entries()[2].name == "trefoil (mirror)");
    CHECK(five.entries()[1].fp.alexander == kTrefoilAlex);
    CHECK(five.entries()[1].fp.signature == -2);
    CHECK(five.entries()[2].fp.signature == 2);

    const CatalogEntry* hit = five.find_by_invariants(kTrefoilAlex, -2);
    REQUIRE(hit != nullptr);
    CHECK(hit->name == "trefoil");
    CHECK(five.find_by_invariants(kTrefoilAlex, 0) == nullptr);

    // Catalog keys are (alexander, signature); a longer enumeration keeps
    // single entries per knot type and names the small torus knots.
    PrimeCatalog seven = build_prime_catalog(7);
    int named = 0;
    for (const CatalogEntry& e : seven.entries()) {
        if (e.name == "T(2,5)" || e.name == "T(3,4)") ++named;
    }
    CHECK(named == 2);
}

TEST_CASE("identity inclusion matches everything") {
    InclusionReport r = verify_inclusion({0, -1, false}, {0, -1, false}, 5, 5);
    CHECK(r.verified());
    CHECK(r.matched.size() == 14);
    CHECK(r.unmatched.empty());
    // Every sub word appears exactly once.
    CHECK(r.matched.size() + r.unmatched.size() == 14);
    // An orbit always matches itself at the strongest level its budget allows.
    for (const MatchRecord& m : r.matched) CHECK(m.level == EvidenceLevel::full_jones);
}

TEST_CASE("twist reduction: knots of L(0,2) appear in L(0,0)") {
    InclusionReport r = verify_inclusion({0, 2, false}, {0, 0, false}, 6, 12);
    CHECK(r.verified());
    CHECK(r.matched.size() == 23);
    CHECK(r.sub_max_len == 6);
    CHECK(r.super_search_len == 12);
}

TEST_CASE("negative-braid witness: xyyy of L(0,-2) is not a positive-template knot") {
    InclusionReport r = verify_inclusion({0, -2, false}, {0, 0, false}, 4, 12);
    CHECK_FALSE(r.verified());
    CHECK(r.matched.size() == 7);
    REQUIRE(r.unmatched.size() == 1);
    CHECK(has_unmatched(r, "xyyy"));
}

TEST_CASE("twist reduction chain holds at desk scale") {
    // L(0,n) knots appear in L(0,n-2), for n = 1 and n = -1.
    CHECK(verify_inclusion({0, 1, false}, {0, -1, false}, 6, 12).verified());
    CHECK(verify_inclusion({0, -1, false}, {0, -3, false}, 6, 12).verified());
}

TEST_CASE("no composites among untwisted-template orbits") {
    PrimeCatalog catalog = build_prime_catalog(5);
    CHECK(find_composites({0, 0, false}, 8, catalog).empty());
    CHECK(find_composites({0, 1, false}, 8, catalog).empty());
}

TEST_CASE("square knot found as a composite of L(0,-1)") {
    PrimeCatalog catalog = build_prime_catalog(5);
    std::vector<CompositeReport> reports = find_composites({0, -1, false}, 9, catalog);
    REQUIRE(reports.size() == 1);
    const CompositeReport& r = reports[0];
    CHECK(r.word.letters() == "xxyxxyyyy");
    CHECK(r.level == EvidenceLevel::full_jones);
    // Factors are the two trefoil chiralities, in catalog order.
    CHECK(r.factor1.name == "trefoil");
    CHECK(r.factor2.name == "trefoil (mirror)");

    // The factor product reproduces the orbit fingerprint exactly.
    Fingerprint orbit_fp = fingerprint(r.word, {0, -1, false});
    Fingerprint product = product_fingerprint(r.factor1.fp, r.factor2.fp);
    CHECK(orbit_fp.alexander == product.alexander);
    CHECK(orbit_fp.alexander == kSquareAlex);
    CHECK(orbit_fp.signature == product.signature);
    CHECK(orbit_fp.determinant == 9);
    REQUIRE(orbit_fp.jones_computed);
    REQUIRE(product.jones_computed);
    CHECK(*orbit_fp.jones == *product.jones);
}

TEST_CASE("degenerate connected sum: unknot plus unknot") {
    auto witness = verify_connected_sum(OrbitWord("x"), OrbitWord("x"));
    REQUIRE(witness.has_value());
    CHECK(witness->word == OrbitWord("x"));
    CHECK(witness->level == EvidenceLevel::full_jones);
}

TEST_CASE("smallest nontrivial connected sum lands in the target template") {
    // xyy on L(0,2) is a trefoil; its mirror pairs to the square knot.
    auto witness = verify_connected_sum(OrbitWord("xyy"), OrbitWord("xyy"),
                                        {0, -2, false}, 14);
    REQUIRE(witness.has_value());
    CHECK(witness->word.length() <= 14);

    // The same search through a shared index gives the same answer.
    OrbitIndex shared({0, -2, false}, 14, 12);
    auto again = verify_connected_sum(OrbitWord("xyy"), OrbitWord("xyy"), shared);
    REQUIRE(again.has_value());
    CHECK(again->word == witness->word);
    CHECK(again->level == witness->level);
}

TEST_CASE("no nontrivial sums inside the untwisted template") {
    auto witness =
        verify_connected_sum(OrbitWord("xyy"), OrbitWord("xyy"), {0, 0, false}, 12);
    CHECK_FALSE(witness.has_value());
}
