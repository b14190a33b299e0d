#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/error.hpp"

namespace polyflam::chem {

namespace {

bool is_bare_token(const Atom& atom) {
    if (atom.charge != 0 || atom.explicit_h != 0) return false;
    if (atom.is_wildcard()) return true;
    static const std::set<std::string> subset = {"B", "C", "N", "O", "P",
                                                 "S", "F", "Cl", "Br", "I"};
    if (!subset.count(atom.element)) return false;
    if (atom.aromatic) {
        return atom.element.size() == 1;  // b,c,n,o,p,s only
    }
    return true;
}

std::string atom_token(const Atom& atom) {
    std::string sym = atom.element;
    if (atom.aromatic) {
        for (auto& ch : sym) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (is_bare_token(atom)) return sym;

    std::string out = "[" + sym;
    if (atom.explicit_h == 1) {
        out += "H";
    } else if (atom.explicit_h > 1) {
        out += "H" + std::to_string(atom.explicit_h);
    }
    if (atom.charge != 0) {
        out += atom.charge > 0 ? "+" : "-";
        const int mag = std::abs(atom.charge);
        if (mag > 1) out += std::to_string(mag);
    }
    out += "]";
    return out;
}

// Symbol for a bond between u and v, empty when the default order applies.
std::string bond_token(const MolecularGraph& g, const Bond& bond) {
    const bool both_aromatic = g.atoms[static_cast<std::size_t>(bond.a)].aromatic &&
                               g.atoms[static_cast<std::size_t>(bond.b)].aromatic;
    switch (bond.order) {
        case BondOrder::Single:
            return both_aromatic ? "-" : "";
        case BondOrder::Double:
            return "=";
        case BondOrder::Triple:
            return "#";
        case BondOrder::Aromatic:
            return both_aromatic ? "" : ":";
    }
    return "";
}

std::string ring_digit(int number) {
    if (number <= 9) return std::to_string(number);
    if (number <= 99) return "%" + std::to_string(number);
    throw Error("more than 99 simultaneously open ring bonds");
}

struct Emitter {
    const MolecularGraph& g;
    const std::vector<int>& rank;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, bond idx)
    std::vector<bool> visited;
    std::vector<std::vector<std::pair<int, int>>> tree_children;  // per atom
    std::vector<std::vector<int>> ring_bonds;                     // per atom, bond indices
    std::vector<int> bond_state;  // 0 unseen, 1 tree, 2 ring
    std::map<int, int> open_ring_number;                          // bond idx -> digit
    std::set<int> used_numbers;
    std::string out;

    Emitter(const MolecularGraph& graph, const std::vector<int>& ranking)
        : g(graph),
          rank(ranking),
          adj(graph.adjacency()),
          visited(graph.size(), false),
          tree_children(graph.size()),
          ring_bonds(graph.size()),
          bond_state(graph.bonds.size(), 0) {
        for (auto& neighbors : adj) {
            std::sort(neighbors.begin(), neighbors.end(), [&](const auto& x, const auto& y) {
                return rank[static_cast<std::size_t>(x.first)] <
                       rank[static_cast<std::size_t>(y.first)];
            });
        }
    }

    void classify(int start) {
        // Iterative DFS in rank order; splits edges into tree and ring sets.
        std::vector<std::pair<int, std::size_t>> stack;  // (atom, next neighbor slot)
        visited[static_cast<std::size_t>(start)] = true;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& [u, slot] = stack.back();
            if (slot >= adj[static_cast<std::size_t>(u)].size()) {
                stack.pop_back();
                continue;
            }
            const auto [v, bidx] = adj[static_cast<std::size_t>(u)][slot];
            ++slot;
            if (bond_state[static_cast<std::size_t>(bidx)] != 0) continue;
            if (!visited[static_cast<std::size_t>(v)]) {
                bond_state[static_cast<std::size_t>(bidx)] = 1;
                tree_children[static_cast<std::size_t>(u)].emplace_back(v, bidx);
                visited[static_cast<std::size_t>(v)] = true;
                stack.emplace_back(v, 0);
            } else {
                bond_state[static_cast<std::size_t>(bidx)] = 2;
                ring_bonds[static_cast<std::size_t>(u)].push_back(bidx);
                ring_bonds[static_cast<std::size_t>(v)].push_back(bidx);
            }
        }
    }

    int allocate_number() {
        int n = 1;
        while (used_numbers.count(n)) ++n;
        used_numbers.insert(n);
        return n;
    }

    void emit_atom(int u) {
        out += atom_token(g.atoms[static_cast<std::size_t>(u)]);
        // Ring closures, ordered by the rank of the far endpoint.
        auto& rings = ring_bonds[static_cast<std::size_t>(u)];
        std::sort(rings.begin(), rings.end(), [&](int x, int y) {
            const int ox = g.bonds[static_cast<std::size_t>(x)].other(u);
            const int oy = g.bonds[static_cast<std::size_t>(y)].other(u);
            return rank[static_cast<std::size_t>(ox)] < rank[static_cast<std::size_t>(oy)];
        });
        for (const int bidx : rings) {
            const auto it = open_ring_number.find(bidx);
            if (it == open_ring_number.end()) {
                const int number = allocate_number();
                open_ring_number[bidx] = number;
                out += bond_token(g, g.bonds[static_cast<std::size_t>(bidx)]);
                out += ring_digit(number);
            } else {
                out += ring_digit(it->second);
                used_numbers.erase(it->second);
                open_ring_number.erase(it);
            }
        }
    }

    void emit_subtree(int u) {
        emit_atom(u);
        const auto& children = tree_children[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < children.size(); ++i) {
            const auto [v, bidx] = children[i];
            const std::string bond = bond_token(g, g.bonds[static_cast<std::size_t>(bidx)]);
            if (i + 1 < children.size()) {
                out += "(";
                out += bond;
                emit_subtree(v);
                out += ")";
            } else {
                out += bond;
                emit_subtree(v);
            }
        }
    }

    std::string run(int start) {
        classify(start);
        emit_subtree(start);
        return std::move(out);
    }
};

}  // namespace

namespace detail {

std::string emit_component(const MolecularGraph& g, const std::vector<int>& rank, int start) {
    Emitter emitter(g, rank);
    return emitter.run(start);
}

}  // namespace detail

std::string write_smiles_ranked(const MolecularGraph& g, const std::vector<int>& rank) {
    if (g.atoms.empty()) throw Error("cannot serialize an empty graph");
    const auto comp = g.components();
    const int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;

    // Start atom per component: the lowest-ranked one.
    std::vector<int> start(static_cast<std::size_t>(n_comp), -1);
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        const auto c = static_cast<std::size_t>(comp[i]);
        if (start[c] < 0 || rank[i] < rank[static_cast<std::size_t>(start[c])]) {
            start[c] = static_cast<int>(i);
        }
    }
    // Components ordered by their start atom's rank.
    std::vector<int> order(static_cast<std::size_t>(n_comp));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rank[static_cast<std::size_t>(start[static_cast<std::size_t>(a)])] <
               rank[static_cast<std::size_t>(start[static_cast<std::size_t>(b)])];
    });

    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ".";
        out += detail::emit_component(g, rank, start[static_cast<std::size_t>(order[i])]);
    }
    return out;
}

std::string write_smiles(const MolecularGraph& g) {
    std::vector<int> rank(g.size());
    std::iota(rank.begin(), rank.end(), 0);
    return write_smiles_ranked(g, rank);
}

}  // namespace polyflam::chem
