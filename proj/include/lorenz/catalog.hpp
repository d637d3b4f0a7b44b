#pragma once

// Catalog of candidate prime factors: fingerprints of L(0,0) orbits and their
// mirrors, with names for the knots the built-in table recognizes. This is
// the factor-identification target for composite detection.

#include <map>
#include <string>
#include <vector>

#include "lorenz/fingerprint.hpp"

namespace lorenz {

struct CatalogEntry {
    std::string name;
    Fingerprint fp;
    OrbitWord word;       // a source orbit realizing the fingerprint
    TemplateSpec source;  // template the source word lives on
};

class PrimeCatalog {
  public:
    // Deduplicates on (alexander, signature); an entry carrying Jones data
    // replaces a Jones-less duplicate, otherwise the first entry wins.
    void add(CatalogEntry e);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    const CatalogEntry* find_by_invariants(const LaurentPoly& alexander,
                                           int signature) const;

  private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, int> by_key_;
};

// Name from the built-in (Alexander, signature) table: unknot, trefoils and a
// few torus knots; empty string when unrecognized.
std::string builtin_knot_name(const Fingerprint& f);

// Fingerprints of all L(0,0) orbits up to max_len plus their mirrors, with
// the unknot entry forced.
PrimeCatalog build_prime_catalog(int max_len, int jones_strand_budget = 12);

}  // namespace lorenz
