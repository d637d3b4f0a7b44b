#pragma once

// Fingerprint-evidence verification of knot-set relations between templates:
// inclusion of one template's knot types in another's, detection of composite
// knots, and realization of connected sums.
//
// "Evidence" is matching by exact invariants, strongest affordable first:
// Alexander polynomial and signature always; Jones as confirmation whenever
// both sides fit the strand budget. A candidate whose Jones disagrees is
// refuted and skipped, never reported as a match.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lorenz/catalog.hpp"

namespace lorenz {

enum class EvidenceLevel {
    alexander_only,       // matched on Alexander alone (not used for matches;
                          // kept for reporting candidate filters)
    alexander_signature,  // Alexander + signature agree, Jones unavailable
    full_jones,           // Alexander + signature + Jones agree
};

std::string to_string(EvidenceLevel level);

// All orbits of one template up to max_len, with invariants computed lazily
// and memoized: building/simplifying the braid and the Alexander polynomial
// happen on first use of a word, signature and Jones only when asked for.
// The Alexander lookup table for with_alexander() is filled on first query.
class OrbitIndex {
  public:
    OrbitIndex(const TemplateSpec& spec, int max_len, int jones_strand_budget = 12);

    const TemplateSpec& spec() const { return spec_; }
    int max_len() const { return max_len_; }
    int jones_strand_budget() const { return jones_budget_; }
    int size() const { return static_cast<int>(slots_.size()); }
    const OrbitWord& word(int i) const { return slots_[static_cast<std::size_t>(i)].word; }

    const BraidWord& simplified_braid(int i);
    long exponent_sum(int i);  // of the raw braid, before simplification
    const LaurentPoly& alexander(int i);
    int signature_of(int i);
    bool jones_in_budget(int i);
    const LaurentPoly& jones_of(int i);  // precondition: jones_in_budget(i)
    Fingerprint full(int i);

    // Indices of all words with this Alexander polynomial, ascending.
    // Empty vector when none.
    const std::vector<int>& with_alexander(const LaurentPoly& p);

  private:
    struct Slot {
        OrbitWord word;
        std::optional<BraidWord> raw;
        std::optional<BraidWord> simplified;
        std::optional<LaurentPoly> alexander;
        std::optional<int> signature;
        std::optional<LaurentPoly> jones;
        bool jones_tried = false;
    };

    Slot& slot(int i) { return slots_[static_cast<std::size_t>(i)]; }
    const BraidWord& raw_braid(int i);
    void ensure_alexander_table();

    TemplateSpec spec_;
    int max_len_;
    int jones_budget_;
    std::vector<Slot> slots_;
    std::unordered_map<std::string, std::vector<int>> by_alexander_;
    bool table_built_ = false;
    std::vector<int> no_matches_;
};

// One matched orbit pair in an inclusion check.
struct MatchRecord {
    OrbitWord sub_word;
    OrbitWord super_word;
    EvidenceLevel level;
};

// An orbit for which no candidate survived. jones_demoted records that at
// least one (Alexander, signature) candidate existed but was refuted by
// Jones, so the failure is sharper than "nothing similar found".
struct UnmatchedRecord {
    OrbitWord word;
    bool jones_demoted;
};

struct InclusionReport {
    TemplateSpec sub;
    TemplateSpec super;
    int sub_max_len = 0;
    int super_search_len = 0;
    int jones_strand_budget = 12;
    std::vector<MatchRecord> matched;
    std::vector<UnmatchedRecord> unmatched;

    bool verified() const { return unmatched.empty(); }
};

// For every orbit of `sub` up to sub_max_len, search the orbits of `super`
// up to super_search_len for one with the same knot invariants.
InclusionReport verify_inclusion(const TemplateSpec& sub, const TemplateSpec& super,
                                 int sub_max_len, int super_search_len,
                                 int jones_strand_budget = 12);

// A `word` on `tmpl` whose invariants equal those of the connected sum of two
// nontrivial catalog entries (Alexander is multiplicative, signature and
// Jones likewise combine; the match level says how much was checked).
struct CompositeReport {
    TemplateSpec tmpl;
    OrbitWord word;
    CatalogEntry factor1;
    CatalogEntry factor2;
    EvidenceLevel level;
};

std::vector<CompositeReport> find_composites(const TemplateSpec& spec, int max_len,
                                             const PrimeCatalog& catalog,
                                             int jones_strand_budget = 12);

struct SumWitness {
    OrbitWord word;
    EvidenceLevel level;
};

// Fingerprint u as an orbit of L(0,2) and v as an orbit of the mirror
// template ~L(0,2), form the connected-sum fingerprint, and search the
// target template for an orbit realizing it.
std::optional<SumWitness> verify_connected_sum(const OrbitWord& u, const OrbitWord& v,
                                               OrbitIndex& target_index);
std::optional<SumWitness> verify_connected_sum(
    const OrbitWord& u, const OrbitWord& v,
    const TemplateSpec& target = TemplateSpec{0, -2, false}, int search_len = 14,
    int jones_strand_budget = 12);

}  // namespace lorenz
