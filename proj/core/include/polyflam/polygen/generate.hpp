#pragma once

#include <vector>

#include "polyflam/polygen/record.hpp"

namespace polyflam::polygen {

// One record per admissible composition: fragments concatenated in
// lexicographic id order, fused, canonicalized, labeled with GC properties.
// Records whose repeat units collapse to the same canonical SMILES are
// deduplicated (first composition in enumeration order wins). Surrogate and
// label fields are left empty.
std::vector<PolymerRecord> generate_polymers(const groups::GroupTable& table, int max_size = 3);

// Keeps exactly the records passing the physicality filter. Every record
// must carry dT (throws MissingField otherwise).
std::vector<PolymerRecord> apply_filter(const std::vector<PolymerRecord>& records);

// Per-rule drop counts from the last apply_filter-style pass.
struct FilterSummary {
    std::size_t kept = 0;
    std::size_t dropped_mu = 0;
    std::size_t dropped_h_c = 0;
    std::size_t dropped_eta_c = 0;
    std::size_t dropped_dT = 0;
};

std::vector<PolymerRecord> apply_filter(const std::vector<PolymerRecord>& records,
                                        FilterSummary& summary);

}  // namespace polyflam::polygen
