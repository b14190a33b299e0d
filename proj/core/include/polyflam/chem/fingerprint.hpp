#pragma once

#include <cstdint>
#include <vector>

#include "polyflam/chem/molgraph.hpp"

namespace polyflam::chem {

struct Fingerprint {
    std::vector<std::uint32_t> counts;
    int radius = 2;

    bool operator==(const Fingerprint&) const = default;
};

// Count-based circular fingerprint: for every atom and every environment
// radius r <= radius, the invariant hash of the r-neighborhood increments one
// bin. Hashing is order-independent (neighbor multisets are sorted), so equal
// labeled graphs give equal vectors no matter how atoms are numbered.
Fingerprint fingerprint(const MolecularGraph& g, int radius = 2, int n_bits = 2048);

}  // namespace polyflam::chem
