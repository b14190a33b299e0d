#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyflam/polygen/record.hpp"
#include "polyflam/rompyro/cone.hpp"
#include "polyflam/uq/quadrature.hpp"

namespace polyflam::uq {

struct OutputStats {
    std::string name;
    double mean = 0.0;
    double stddev = 0.0;
    double lo = 0.0;  // mean - 2*std
    double hi = 0.0;  // mean + 2*std
    bool variance_clamped = false;  // E[f^2]-E[f]^2 < 0 within round-off
};

struct UQResult {
    std::vector<OutputStats> outputs;
    std::size_t node_evaluations = 0;
};

using VectorModel = std::function<std::vector<double>(const std::vector<double>&)>;

// Weighted quadrature sums over the grid: E[f] = sum w_k f(x_k), variance from
// E[f^2] - E[f]^2 (clamped at 0). Node evaluations may run on a worker pool;
// the accumulation itself is a fixed-order compensated sum, so results do not
// depend on the worker count. Model exceptions surface as ModelFailure naming
// the node.
UQResult propagate(const VectorModel& model, const std::vector<RandomInput>& inputs,
                   const CollocationGrid& grid, const std::vector<std::string>& output_names,
                   int workers = 1);

// Per-input uncertainty: exactly one of std / rel_std must be set.
struct InputErrorSpec {
    RandomInput::Kind kind = RandomInput::Kind::Normal;
    std::optional<double> std;
    std::optional<double> rel_std;
};

// Keys: rho, kappa, c_p, h_c, mu, dT, T_p (all seven simulator inputs).
using ErrorModel = std::map<std::string, InputErrorSpec>;

ErrorModel load_error_model(const std::filesystem::path& path);

struct UqConfig {
    int smolyak_level = 2;
    int tensor_points = 3;           // per-dimension rule when tensoring
    std::size_t node_budget = 1000000;
    bool force_tensor = false;       // default: tensor for d <= 3, Smolyak above
    int workers = 1;
};

// Builds the 7-dimensional input distribution around the record's point
// estimates (mu log-normal via moment matching, the rest normal), runs the
// cone simulator at every node, and reports mean/std/trust region for t_ig
// and phrr.
UQResult quantify_polymer(const polygen::PolymerRecord& record, const ErrorModel& errors,
                          const rompyro::SimConfig& sim, const UqConfig& cfg);

// Trust-region membership for a reference measurement.
struct TrustCheck {
    bool inside = false;          // |measured - mean| <= 2*std
    double sigma_distance = 0.0;  // |measured - mean| / std; inf when std = 0
};

TrustCheck check_reference(const OutputStats& stats, double measured);

}  // namespace polyflam::uq
