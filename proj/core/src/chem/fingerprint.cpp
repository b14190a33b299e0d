#include "polyflam/chem/fingerprint.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polyflam/common/error.hpp"

namespace polyflam::chem {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffULL;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

}  // namespace

Fingerprint fingerprint(const MolecularGraph& g, int radius, int n_bits) {
    if (radius < 0) throw DomainError("fingerprint radius must be >= 0");
    if (n_bits < 16) throw DomainError("fingerprint size must be >= 16 bins");

    // Element codes local to the graph, invariant under relabeling.
    std::set<std::string> symbols;
    for (const auto& atom : g.atoms) symbols.insert(atom.element);
    const std::vector<std::string> sorted_symbols(symbols.begin(), symbols.end());

    const std::size_t n = g.size();
    std::vector<std::uint64_t> env(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Atom& atom = g.atoms[i];
        // Element identity enters through a hash of the symbol characters so
        // codes do not depend on which other elements appear in the graph.
        std::uint64_t sym_hash = kFnvOffset;
        for (const char c : atom.element) sym_hash = fnv1a(sym_hash, static_cast<std::uint64_t>(c));
        std::uint64_t h = kFnvOffset;
        h = fnv1a(h, sym_hash);
        h = fnv1a(h, static_cast<std::uint64_t>(atom.charge + 1024));
        h = fnv1a(h, static_cast<std::uint64_t>(atom.explicit_h));
        h = fnv1a(h, static_cast<std::uint64_t>(atom.aromatic ? 1 : 0));
        h = fnv1a(h, static_cast<std::uint64_t>(g.degree(static_cast<int>(i))));
        env[i] = h;
    }

    Fingerprint fp;
    fp.radius = radius;
    fp.counts.assign(static_cast<std::size_t>(n_bits), 0);

    const auto adj = g.adjacency();
    const auto record = [&](std::uint64_t h) {
        ++fp.counts[static_cast<std::size_t>(h % static_cast<std::uint64_t>(n_bits))];
    };

    for (std::size_t i = 0; i < n; ++i) record(env[i]);
    for (int r = 1; r <= radius; ++r) {
        std::vector<std::uint64_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint64_t> neigh;
            neigh.reserve(adj[i].size());
            for (const auto& [v, bidx] : adj[i]) {
                const auto code = static_cast<std::uint64_t>(
                    bond_code(g.bonds[static_cast<std::size_t>(bidx)].order));
                std::uint64_t h = kFnvOffset;
                h = fnv1a(h, code);
                h = fnv1a(h, env[static_cast<std::size_t>(v)]);
                neigh.push_back(h);
            }
            std::sort(neigh.begin(), neigh.end());
            std::uint64_t h = kFnvOffset;
            h = fnv1a(h, static_cast<std::uint64_t>(r));
            h = fnv1a(h, env[i]);
            for (const auto nh : neigh) h = fnv1a(h, nh);
            next[i] = h;
        }
        env = std::move(next);
        for (std::size_t i = 0; i < n; ++i) record(env[i]);
    }
    return fp;
}

}  // namespace polyflam::chem
