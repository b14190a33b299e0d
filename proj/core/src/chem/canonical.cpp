#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/error.hpp"

namespace polyflam::chem {

namespace {

using Key = std::vector<std::uint64_t>;

int dense_rank(const std::vector<Key>& keys, std::vector<int>& rank) {
    const std::size_t n = keys.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    int classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys[static_cast<std::size_t>(order[i])] !=
                         keys[static_cast<std::size_t>(order[i - 1])]) {
            ++classes;
        }
        rank[static_cast<std::size_t>(order[i])] = classes;
    }
    return classes + 1;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const MolecularGraph& g) : g_(g), adj_(g.adjacency()) {}

    std::string run() {
        std::vector<int> rank(g_.size());
        initial_ranks(rank);
        refine(rank);
        best_.clear();
        search(rank);
        return best_;
    }

private:
    void initial_ranks(std::vector<int>& rank) {
        // Element codes local to this graph: index into the sorted set of
        // element symbols, which is invariant under atom relabeling.
        std::set<std::string> symbols;
        for (const auto& atom : g_.atoms) symbols.insert(atom.element);
        std::vector<std::string> sorted_symbols(symbols.begin(), symbols.end());

        std::vector<Key> keys(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) {
            const Atom& atom = g_.atoms[i];
            const auto elem = static_cast<std::uint64_t>(
                std::lower_bound(sorted_symbols.begin(), sorted_symbols.end(), atom.element) -
                sorted_symbols.begin());
            keys[i] = {elem,
                       static_cast<std::uint64_t>(atom.charge + 1024),
                       static_cast<std::uint64_t>(atom.explicit_h),
                       static_cast<std::uint64_t>(atom.aromatic ? 1 : 0),
                       static_cast<std::uint64_t>(g_.degree(static_cast<int>(i)))};
        }
        dense_rank(keys, rank);
    }

    void refine(std::vector<int>& rank) {
        const std::size_t n = g_.size();
        std::vector<Key> keys(n);
        int classes = 0;
        for (;;) {
            for (std::size_t i = 0; i < n; ++i) {
                Key key;
                key.push_back(static_cast<std::uint64_t>(rank[i]));
                std::vector<std::uint64_t> neigh;
                neigh.reserve(adj_[i].size());
                for (const auto& [v, bidx] : adj_[i]) {
                    const auto code = static_cast<std::uint64_t>(
                        bond_code(g_.bonds[static_cast<std::size_t>(bidx)].order));
                    neigh.push_back((code << 32) |
                                    static_cast<std::uint64_t>(rank[static_cast<std::size_t>(v)]));
                }
                std::sort(neigh.begin(), neigh.end());
                key.insert(key.end(), neigh.begin(), neigh.end());
                keys[i] = std::move(key);
            }
            const int new_classes = dense_rank(keys, rank);
            if (new_classes == classes) break;
            classes = new_classes;
        }
    }

    // Smallest tied class; -1 when the ranking is discrete.
    int find_tied_class(const std::vector<int>& rank) const {
        std::vector<int> count(g_.size(), 0);
        for (const int r : rank) ++count[static_cast<std::size_t>(r)];
        for (std::size_t r = 0; r < count.size(); ++r) {
            if (count[r] > 1) return static_cast<int>(r);
        }
        return -1;
    }

    void search(const std::vector<int>& rank) {
        const int tied = find_tied_class(rank);
        if (tied < 0) {
            int start = 0;
            for (std::size_t i = 0; i < g_.size(); ++i) {
                if (rank[i] == 0) start = static_cast<int>(i);
            }
            std::string emitted = detail::emit_component(g_, rank, start);
            if (best_.empty() || emitted < best_) best_ = std::move(emitted);
            return;
        }
        for (std::size_t a = 0; a < g_.size(); ++a) {
            if (rank[a] != tied) continue;
            std::vector<int> next = rank;
            for (std::size_t j = 0; j < g_.size(); ++j) {
                if (j != a && next[j] >= tied) ++next[j];
            }
            refine(next);
            search(next);
        }
    }

    const MolecularGraph& g_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::string best_;
};

MolecularGraph extract_component(const MolecularGraph& g, const std::vector<int>& comp, int id) {
    MolecularGraph sub;
    std::vector<int> remap(g.size(), -1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (comp[i] == id) remap[i] = sub.add_atom(g.atoms[i]);
    }
    for (const auto& bond : g.bonds) {
        const int a = remap[static_cast<std::size_t>(bond.a)];
        const int b = remap[static_cast<std::size_t>(bond.b)];
        if (a >= 0 && b >= 0) sub.add_bond(a, b, bond.order);
    }
    return sub;
}

}  // namespace

std::string canonicalize(const MolecularGraph& g) {
    if (g.atoms.empty()) throw Error("cannot canonicalize an empty graph");
    const auto comp = g.components();
    const int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;

    std::vector<std::string> parts;
    parts.reserve(static_cast<std::size_t>(n_comp));
    for (int id = 0; id < n_comp; ++id) {
        const MolecularGraph sub = extract_component(g, comp, id);
        parts.push_back(Canonicalizer(sub).run());
    }
    std::sort(parts.begin(), parts.end());

    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ".";
        out += parts[i];
    }
    return out;
}

}  // namespace polyflam::chem
