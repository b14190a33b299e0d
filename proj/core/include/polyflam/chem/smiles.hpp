#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyflam/chem/molgraph.hpp"

namespace polyflam::chem {

struct ParseOptions {
    // When set, atoms whose valence_sum exceeds the element table raise
    // ValenceViolation, and wildcards must carry exactly one bond.
    bool strict_valence = false;
};

// Supported subset: organic-subset atoms (B,C,N,O,P,S,F,Cl,Br,I), aromatic
// lowercase forms, bracket atoms with charge and H count, bonds - = # :,
// branches, ring closures (digit and %nn), dots, wildcard '*'.
// No stereochemistry, no isotopes.
MolecularGraph parse_smiles(std::string_view text, const ParseOptions& opts = {});

// Serialization with the graph's natural atom order. parse(write(g)) is
// graph-isomorphic to g.
std::string write_smiles(const MolecularGraph& g);

// Serialization driven by an arbitrary total order on atoms (lower rank emits
// first). Canonicalization and the permutation tests both run through this.
std::string write_smiles_ranked(const MolecularGraph& g, const std::vector<int>& rank);

// Unique string per labeled molecular graph: Morgan-style iterative
// invariant refinement with deterministic tie-breaking (branch on the
// smallest ambiguous class, keep the lexicographically smallest emission).
// Components are canonicalized independently, sorted, and joined with '.'.
std::string canonicalize(const MolecularGraph& g);

inline std::string canonicalize(std::string_view smiles) {
    return canonicalize(parse_smiles(smiles));
}

// Throws ValenceViolation if any atom exceeds the valence table or any
// wildcard has degree != 1.
void check_valences(const MolecularGraph& g);

namespace detail {
// Emits the connected component containing `start`; `rank` drives the
// traversal (lowest-ranked neighbor first).
std::string emit_component(const MolecularGraph& g, const std::vector<int>& rank, int start);
}  // namespace detail

}  // namespace polyflam::chem
