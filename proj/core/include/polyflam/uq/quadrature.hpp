#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polyflam::uq {

struct Rule1D {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // positive, sum to 1
};

// Probabilists' Gauss-Hermite rule: exact for polynomials of degree <= 2n-1
// against the standard normal density. 1 <= n <= 50.
Rule1D gauss_hermite(int n);

enum class GridKind { Tensor, Smolyak };

struct CollocationGrid {
    std::size_t dim = 0;
    std::vector<std::vector<double>> nodes;  // standard-normal space
    std::vector<double> weights;             // sum to 1; Smolyak may go negative
    GridKind kind = GridKind::Tensor;
    int level = 0;
};

// Full tensor product; levels[i] is the 1D node count in dimension i.
// Throws SizeOverflow when the node count exceeds node_budget.
CollocationGrid tensor_grid(const std::vector<int>& levels,
                            std::size_t node_budget = 1000000);

// Smolyak combination over the odd-sized Gauss-Hermite sequence
// m_l = 2l + 1 (every level shares the center node). Exact for total degree
// 2*level + 1; far fewer nodes than the matching tensor grid for d >= 2.
CollocationGrid smolyak_grid(int dim, int level, std::size_t node_budget = 1000000);

struct RandomInput {
    std::string name;
    enum class Kind { Normal, LogNormal } kind = Kind::Normal;
    // Normal: location = mean, scale = std (std >= 0; 0 collapses the
    // dimension). LogNormal: location = mean of ln, scale = std of ln.
    double location = 0.0;
    double scale = 1.0;
};

// Log-normal parameters matching a target mean and standard deviation.
RandomInput lognormal_from_moments(const std::string& name, double mean, double stddev);

// Standard-normal nodes -> physical space. Normal: x = loc + scale*xi;
// LogNormal: x = exp(loc + scale*xi). Weights are unchanged.
std::vector<std::vector<double>> transform_nodes(const CollocationGrid& grid,
                                                 const std::vector<RandomInput>& inputs);

}  // namespace polyflam::uq
