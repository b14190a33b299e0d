#include "polyflam/chem/molgraph.hpp"

#include <algorithm>
#include <map>

namespace polyflam::chem {

bool MolecularGraph::add_bond(int a, int b, BondOrder order) {
    if (a == b) return false;
    if (has_bond(a, b)) return false;
    bonds.push_back(Bond{a, b, order});
    return true;
}

bool MolecularGraph::has_bond(int a, int b) const {
    for (const auto& bond : bonds) {
        if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a)) return true;
    }
    return false;
}

int MolecularGraph::degree(int atom) const {
    int d = 0;
    for (const auto& bond : bonds) {
        if (bond.a == atom || bond.b == atom) ++d;
    }
    return d;
}

std::vector<std::vector<std::pair<int, int>>> MolecularGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(atoms.size());
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        const auto& bond = bonds[i];
        adj[static_cast<std::size_t>(bond.a)].emplace_back(bond.b, static_cast<int>(i));
        adj[static_cast<std::size_t>(bond.b)].emplace_back(bond.a, static_cast<int>(i));
    }
    return adj;
}

std::vector<int> MolecularGraph::components() const {
    std::vector<int> comp(atoms.size(), -1);
    const auto adj = adjacency();
    int next_id = 0;
    std::vector<int> stack;
    for (std::size_t start = 0; start < atoms.size(); ++start) {
        if (comp[start] >= 0) continue;
        const int id = next_id++;
        stack.push_back(static_cast<int>(start));
        comp[start] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& [v, bidx] : adj[static_cast<std::size_t>(u)]) {
                (void)bidx;
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return comp;
}

int MolecularGraph::component_count() const {
    const auto comp = components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<int> MolecularGraph::wildcard_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_wildcard()) out.push_back(static_cast<int>(i));
    }
    return out;
}

int valence_sum(const MolecularGraph& g, int atom) {
    int sum = g.atoms[static_cast<std::size_t>(atom)].explicit_h;
    int aromatic_bonds = 0;
    for (const auto& bond : g.bonds) {
        if (bond.a != atom && bond.b != atom) continue;
        if (bond.order == BondOrder::Aromatic) {
            ++aromatic_bonds;
        } else {
            sum += static_cast<int>(bond.order);
        }
    }
    if (aromatic_bonds > 0) sum += aromatic_bonds + 1;
    return sum;
}

int max_valence(const std::string& element) {
    static const std::map<std::string, int> table = {
        {"*", 1},  {"H", 1},  {"B", 3},  {"C", 4},  {"N", 5},  {"O", 2},
        {"F", 1},  {"Si", 4}, {"P", 5},  {"S", 6},  {"Cl", 1}, {"Br", 1},
        {"I", 1},
    };
    const auto it = table.find(element);
    return it == table.end() ? -1 : it->second;
}

}  // namespace polyflam::chem
