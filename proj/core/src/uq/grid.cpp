#include <cmath>
#include <map>
#include <vector>

#include "polyflam/common/error.hpp"
#include "polyflam/uq/quadrature.hpp"

namespace polyflam::uq {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int j = 1; j <= k; ++j) {
        c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    }
    return c;
}

// Multi-indices l in N_0^d with lo <= |l| <= hi.
void enumerate_levels(int dim, int lo, int hi, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == dim) {
        int sum = 0;
        for (const int v : current) sum += v;
        if (sum >= lo && sum <= hi) out.push_back(current);
        return;
    }
    int remaining = hi;
    for (const int v : current) remaining -= v;
    for (int l = 0; l <= remaining; ++l) {
        current.push_back(l);
        enumerate_levels(dim, lo, hi, current, out);
        current.pop_back();
    }
}

}  // namespace

CollocationGrid tensor_grid(const std::vector<int>& levels, std::size_t node_budget) {
    if (levels.empty()) throw DomainError("tensor_grid needs at least one dimension");
    std::size_t total = 1;
    for (const int n : levels) {
        if (n < 1) throw DomainError("tensor_grid levels must be >= 1");
        if (total > node_budget / static_cast<std::size_t>(n)) {
            throw SizeOverflow("tensor grid exceeds the node budget of " +
                               std::to_string(node_budget));
        }
        total *= static_cast<std::size_t>(n);
    }

    std::vector<Rule1D> rules;
    rules.reserve(levels.size());
    for (const int n : levels) rules.push_back(gauss_hermite(n));

    CollocationGrid grid;
    grid.dim = levels.size();
    grid.kind = GridKind::Tensor;
    grid.level = 0;
    grid.nodes.reserve(total);
    grid.weights.reserve(total);

    std::vector<std::size_t> idx(levels.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<double> node(grid.dim);
        double weight = 1.0;
        for (std::size_t dim = 0; dim < grid.dim; ++dim) {
            node[dim] = rules[dim].nodes[idx[dim]];
            weight *= rules[dim].weights[idx[dim]];
        }
        grid.nodes.push_back(std::move(node));
        grid.weights.push_back(weight);
        // Odometer increment, last dimension fastest.
        for (std::size_t dim = grid.dim; dim-- > 0;) {
            if (++idx[dim] < static_cast<std::size_t>(levels[dim])) break;
            idx[dim] = 0;
        }
    }
    return grid;
}

CollocationGrid smolyak_grid(int dim, int level, std::size_t node_budget) {
    if (dim < 1) throw DomainError("smolyak_grid needs dim >= 1");
    if (level < 0) throw DomainError("smolyak_grid needs level >= 0");

    // 1D sequence m_l = 2l + 1; all rules share the center node.
    std::vector<Rule1D> rules;
    rules.reserve(static_cast<std::size_t>(level) + 1);
    for (int l = 0; l <= level; ++l) rules.push_back(gauss_hermite(2 * l + 1));

    const int lo = std::max(0, level - dim + 1);
    std::vector<std::vector<int>> level_sets;
    std::vector<int> current;
    enumerate_levels(dim, lo, level, current, level_sets);

    // Budget check on the raw (pre-merge) node count.
    std::size_t raw_total = 0;
    for (const auto& ls : level_sets) {
        std::size_t count = 1;
        for (const int l : ls) count *= rules[static_cast<std::size_t>(l)].nodes.size();
        raw_total += count;
        if (raw_total > node_budget) {
            throw SizeOverflow("Smolyak grid exceeds the node budget of " +
                               std::to_string(node_budget));
        }
    }

    std::map<std::vector<double>, double> merged;
    const int total_level = level;
    for (const auto& ls : level_sets) {
        int sum = 0;
        for (const int l : ls) sum += l;
        const int deficit = total_level - sum;  // 0 <= deficit <= dim-1
        const double sign = (deficit % 2 == 0) ? 1.0 : -1.0;
        const double coeff =
            sign * static_cast<double>(binomial(dim - 1, deficit));
        if (coeff == 0.0) continue;

        // Tensor product of the selected per-dimension rules.
        std::size_t count = 1;
        for (const int l : ls) count *= rules[static_cast<std::size_t>(l)].nodes.size();
        std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<double> node(static_cast<std::size_t>(dim));
            double weight = coeff;
            for (std::size_t d = 0; d < static_cast<std::size_t>(dim); ++d) {
                const Rule1D& rule = rules[static_cast<std::size_t>(ls[d])];
                node[d] = rule.nodes[idx[d]];
                weight *= rule.weights[idx[d]];
            }
            merged[node] += weight;
            for (std::size_t d = static_cast<std::size_t>(dim); d-- > 0;) {
                if (++idx[d] < rules[static_cast<std::size_t>(ls[d])].nodes.size()) break;
                idx[d] = 0;
            }
        }
    }

    CollocationGrid grid;
    grid.dim = static_cast<std::size_t>(dim);
    grid.kind = GridKind::Smolyak;
    grid.level = level;
    grid.nodes.reserve(merged.size());
    grid.weights.reserve(merged.size());
    for (const auto& [node, weight] : merged) {
        grid.nodes.push_back(node);
        grid.weights.push_back(weight);
    }
    return grid;
}

std::vector<std::vector<double>> transform_nodes(const CollocationGrid& grid,
                                                 const std::vector<RandomInput>& inputs) {
    if (grid.dim != inputs.size()) {
        throw DimensionMismatch("grid has " + std::to_string(grid.dim) + " dimensions, " +
                                std::to_string(inputs.size()) + " inputs given");
    }
    for (const auto& input : inputs) {
        if (!(input.scale >= 0.0)) {
            throw DomainError("input '" + input.name + "' has negative scale");
        }
    }
    std::vector<std::vector<double>> out;
    out.reserve(grid.nodes.size());
    for (const auto& node : grid.nodes) {
        std::vector<double> x(grid.dim);
        for (std::size_t d = 0; d < grid.dim; ++d) {
            const auto& input = inputs[d];
            if (input.kind == RandomInput::Kind::Normal) {
                x[d] = input.location + input.scale * node[d];
            } else {
                x[d] = std::exp(input.location + input.scale * node[d]);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace polyflam::uq
