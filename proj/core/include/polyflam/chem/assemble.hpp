#pragma once

#include <string>
#include <vector>

#include "polyflam/chem/molgraph.hpp"

namespace polyflam::chem {

// Chains divalent fragments head-to-tail by fusing wildcard bonds: each
// fusion removes two wildcard atoms and bonds their attachment neighbors.
// The repeat unit keeps the first fragment's head and the last fragment's
// tail as its two polymerization points. Throws BadValence when a fragment
// does not carry exactly two single-bonded wildcards or when fused bond
// orders disagree.
MolecularGraph fuse_fragments(const std::vector<MolecularGraph>& fragments);

// fuse_fragments followed by canonicalization.
std::string assemble_polymer(const std::vector<MolecularGraph>& fragments);

}  // namespace polyflam::chem
