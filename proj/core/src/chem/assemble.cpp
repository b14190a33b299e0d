#include "polyflam/chem/assemble.hpp"

#include <string>

#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/error.hpp"

namespace polyflam::chem {

namespace {

struct FragmentEnds {
    int head_wildcard;
    int tail_wildcard;
};

FragmentEnds fragment_ends(const MolecularGraph& frag, std::size_t index) {
    const auto wildcards = frag.wildcard_indices();
    if (wildcards.size() != 2) {
        throw BadValence("fragment " + std::to_string(index) + " has " +
                         std::to_string(wildcards.size()) + " wildcards, expected 2");
    }
    for (const int w : wildcards) {
        if (frag.degree(w) != 1) {
            throw BadValence("fragment " + std::to_string(index) +
                             ": wildcard must carry exactly one bond");
        }
    }
    return FragmentEnds{wildcards[0], wildcards[1]};
}

// The unique bond at a degree-1 atom.
const Bond& attachment_bond(const MolecularGraph& g, int wildcard) {
    for (const auto& bond : g.bonds) {
        if (bond.a == wildcard || bond.b == wildcard) return bond;
    }
    throw BadValence("wildcard atom has no bond");
}

}  // namespace

MolecularGraph fuse_fragments(const std::vector<MolecularGraph>& fragments) {
    if (fragments.empty()) throw BadValence("no fragments to assemble");

    // Concatenate all fragments into one graph, tracking global indices of
    // each fragment's head/tail wildcards.
    MolecularGraph whole;
    std::vector<FragmentEnds> ends;
    ends.reserve(fragments.size());
    for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
        const auto& frag = fragments[fi];
        const FragmentEnds local = fragment_ends(frag, fi);
        const int offset = static_cast<int>(whole.size());
        for (const auto& atom : frag.atoms) whole.add_atom(atom);
        for (const auto& bond : frag.bonds) {
            whole.add_bond(bond.a + offset, bond.b + offset, bond.order);
        }
        ends.push_back(FragmentEnds{local.head_wildcard + offset, local.tail_wildcard + offset});
    }

    // Fuse fragment i's tail with fragment i+1's head.
    std::vector<bool> removed(whole.size(), false);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        const int tail = ends[i].tail_wildcard;
        const int head = ends[i + 1].head_wildcard;
        const Bond& tb = attachment_bond(whole, tail);
        const Bond& hb = attachment_bond(whole, head);
        if (tb.order != hb.order) {
            throw BadValence("cannot fuse fragments " + std::to_string(i) + " and " +
                             std::to_string(i + 1) + ": wildcard bond orders differ");
        }
        whole.add_bond(tb.other(tail), hb.other(head), tb.order);
        removed[static_cast<std::size_t>(tail)] = true;
        removed[static_cast<std::size_t>(head)] = true;
    }

    // Compact: drop fused wildcards, remap bonds.
    MolecularGraph out;
    std::vector<int> remap(whole.size(), -1);
    for (std::size_t i = 0; i < whole.size(); ++i) {
        if (!removed[i]) remap[i] = out.add_atom(whole.atoms[i]);
    }
    for (const auto& bond : whole.bonds) {
        const int a = remap[static_cast<std::size_t>(bond.a)];
        const int b = remap[static_cast<std::size_t>(bond.b)];
        if (a >= 0 && b >= 0) out.add_bond(a, b, bond.order);
    }
    return out;
}

std::string assemble_polymer(const std::vector<MolecularGraph>& fragments) {
    return canonicalize(fuse_fragments(fragments));
}

}  // namespace polyflam::chem
