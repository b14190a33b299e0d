#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polyflam::chem {

enum class BondOrder : std::uint8_t {
    Single = 1,
    Double = 2,
    Triple = 3,
    Aromatic = 4,
};

// Numeric sort key; aromatic sorts after the covalent orders.
inline int bond_code(BondOrder o) { return static_cast<int>(o); }

struct Atom {
    std::string element;  // "C", "Cl", "*", ...
    int charge = 0;
    int explicit_h = 0;   // H count given in brackets; 0 for subset atoms
    bool aromatic = false;

    bool is_wildcard() const { return element == "*"; }

    bool operator==(const Atom&) const = default;
};

struct Bond {
    int a = 0;
    int b = 0;
    BondOrder order = BondOrder::Single;

    int other(int atom) const { return atom == a ? b : a; }
};

class MolecularGraph {
public:
    std::vector<Atom> atoms;
    std::vector<Bond> bonds;

    int add_atom(Atom atom) {
        atoms.push_back(std::move(atom));
        return static_cast<int>(atoms.size()) - 1;
    }

    // Rejects self-bonds and duplicate bonds; returns false on rejection so
    // the parser can raise a contextual error.
    bool add_bond(int a, int b, BondOrder order);

    bool has_bond(int a, int b) const;

    std::size_t size() const { return atoms.size(); }

    int degree(int atom) const;

    // (neighbor, bond index) lists per atom.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    // Connected components (dot-separated inputs stay disconnected unless a
    // ring closure bridges them). Returns per-atom component id, components
    // numbered by their lowest atom index.
    std::vector<int> components() const;
    int component_count() const;

    std::vector<int> wildcard_indices() const;
};

// Sum of bond orders plus explicit hydrogens, the quantity checked against
// the valence table. Aromatic bonds count 1 each plus 1 overall, a crude
// Kekule allowance that admits fused rings without perceiving them.
int valence_sum(const MolecularGraph& g, int atom);

// Maximum allowed valence for an element, or -1 if the element is not in the
// supported set.
int max_valence(const std::string& element);

}  // namespace polyflam::chem
