#pragma once

#include "chm/mappings.hpp"
#include "chm/rng.hpp"

namespace chm {

struct CatalogEntry {
    HarmonicMap f;
    ClassMembership cert;
    bool expected_member = true;  ///< entries expected to fail are kept as controls
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    int order = kDefaultOrder;
    int random_extra = 6;  ///< RNG-drawn strip shears on top of the fixed catalog
};

/// Deterministic catalog of harmonic mappings with certified membership:
/// analytic convex maps, L and its rotations, strip shears across dilatation
/// families, plus a few known non-members kept as negative controls.
std::vector<CatalogEntry> build_sample_catalog(const SamplerConfig& cfg = {});

/// Entries of the catalog whose membership certificate places them in K_H^0.
std::vector<CatalogEntry> certified_members(const std::vector<CatalogEntry>& catalog);

}  // namespace chm
