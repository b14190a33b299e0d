#include "polyflam/uq/propagate.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "polyflam/common/csv.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/common/parallel.hpp"

namespace polyflam::uq {

namespace {

// Fixed-order Kahan summation; bitwise deterministic for a given node order.
double compensated_sum(const std::vector<double>& values) {
    double sum = 0.0, c = 0.0;
    for (const double v : values) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

UQResult propagate(const VectorModel& model, const std::vector<RandomInput>& inputs,
                   const CollocationGrid& grid, const std::vector<std::string>& output_names,
                   int workers) {
    const auto points = transform_nodes(grid, inputs);
    const std::size_t n_nodes = points.size();
    const std::size_t n_out = output_names.size();

    std::vector<std::vector<double>> values(n_nodes);
    std::vector<std::string> failures(n_nodes);
    parallel_for(n_nodes, workers, [&](std::size_t k) {
        try {
            values[k] = model(points[k]);
            if (values[k].size() != n_out) {
                failures[k] = "model returned " + std::to_string(values[k].size()) +
                              " outputs, expected " + std::to_string(n_out);
            }
        } catch (const std::exception& e) {
            failures[k] = e.what();
        }
    });
    for (std::size_t k = 0; k < n_nodes; ++k) {
        if (!failures[k].empty()) {
            throw ModelFailure("model failed at node " + std::to_string(k) + ": " + failures[k]);
        }
    }

    UQResult result;
    result.node_evaluations = n_nodes;
    result.outputs.reserve(n_out);
    std::vector<double> terms(n_nodes);
    for (std::size_t o = 0; o < n_out; ++o) {
        for (std::size_t k = 0; k < n_nodes; ++k) terms[k] = grid.weights[k] * values[k][o];
        const double mean = compensated_sum(terms);
        for (std::size_t k = 0; k < n_nodes; ++k) {
            terms[k] = grid.weights[k] * values[k][o] * values[k][o];
        }
        const double second = compensated_sum(terms);

        OutputStats stats;
        stats.name = output_names[o];
        stats.mean = mean;
        double variance = second - mean * mean;
        if (variance < 0.0) {
            stats.variance_clamped = true;
            variance = 0.0;
        }
        stats.stddev = std::sqrt(variance);
        stats.lo = mean - 2.0 * stats.stddev;
        stats.hi = mean + 2.0 * stats.stddev;
        result.outputs.push_back(std::move(stats));
    }
    return result;
}

ErrorModel load_error_model(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const std::exception& e) {
        throw ConfigError("invalid error model JSON " + path.string() + ": " + e.what());
    }
    ErrorModel model;
    for (const auto& [name, spec] : j.items()) {
        InputErrorSpec entry;
        const auto kind = spec.value("kind", std::string("normal"));
        if (kind == "normal") {
            entry.kind = RandomInput::Kind::Normal;
        } else if (kind == "lognormal") {
            entry.kind = RandomInput::Kind::LogNormal;
        } else {
            throw ConfigError("error model input '" + name + "': unknown kind '" + kind + "'");
        }
        if (spec.contains("std")) entry.std = spec["std"].get<double>();
        if (spec.contains("rel_std")) entry.rel_std = spec["rel_std"].get<double>();
        if (entry.std.has_value() == entry.rel_std.has_value()) {
            throw ConfigError("error model input '" + name +
                              "': exactly one of std / rel_std required");
        }
        model[name] = entry;
    }
    return model;
}

UQResult quantify_polymer(const polygen::PolymerRecord& record, const ErrorModel& errors,
                          const rompyro::SimConfig& sim, const UqConfig& cfg) {
    if (!record.labels) {
        throw MissingField("record '" + record.canonical_smiles +
                           "' is unlabeled; simulate it first");
    }
    const rompyro::MaterialInput base = rompyro::material_from_record(record);

    // Canonical input order; means are the record's point estimates in SI.
    const std::vector<std::pair<std::string, double>> means = {
        {"rho", base.rho}, {"kappa", base.kappa}, {"c_p", base.c_p}, {"h_c", base.h_c},
        {"mu", base.mu},   {"dT", base.dT},       {"T_p", base.T_p},
    };

    std::vector<RandomInput> inputs;
    inputs.reserve(means.size());
    for (const auto& [name, mean] : means) {
        const auto it = errors.find(name);
        if (it == errors.end()) {
            throw ConfigError("error model is missing input '" + name + "'");
        }
        const InputErrorSpec& spec = it->second;
        const double stddev = spec.std ? *spec.std : *spec.rel_std * std::abs(mean);
        if (stddev < 0.0) throw DomainError("negative std for input '" + name + "'");

        if (spec.kind == RandomInput::Kind::LogNormal && mean > 1e-9) {
            inputs.push_back(lognormal_from_moments(name, mean, stddev));
        } else {
            // Degenerate log-normal (mean ~ 0, e.g. non-charring polymers)
            // collapses to a point mass at the mean.
            RandomInput input;
            input.name = name;
            input.kind = RandomInput::Kind::Normal;
            input.location = mean;
            input.scale = spec.kind == RandomInput::Kind::LogNormal ? 0.0 : stddev;
            inputs.push_back(input);
        }
    }

    const auto d = static_cast<int>(inputs.size());
    const CollocationGrid grid =
        (cfg.force_tensor || d <= 3)
            ? tensor_grid(std::vector<int>(static_cast<std::size_t>(d), cfg.tensor_points),
                          cfg.node_budget)
            : smolyak_grid(d, cfg.smolyak_level, cfg.node_budget);

    const VectorModel model = [&](const std::vector<double>& x) {
        rompyro::MaterialInput mat;
        mat.rho = x[0];
        mat.kappa = x[1];
        mat.c_p = x[2];
        mat.h_c = x[3];
        mat.mu = std::min(std::max(x[4], 0.0), 1.0);
        mat.dT = x[5];
        mat.T_p = x[6];
        const rompyro::ConeResult r = rompyro::simulate_cone(mat, sim);
        return std::vector<double>{r.t_ig, r.phrr};
    };

    return propagate(model, inputs, grid, {"t_ig", "phrr"}, cfg.workers);
}

TrustCheck check_reference(const OutputStats& stats, double measured) {
    TrustCheck check;
    const double distance = std::abs(measured - stats.mean);
    check.inside = distance <= 2.0 * stats.stddev;
    check.sigma_distance = stats.stddev > 0.0
                               ? distance / stats.stddev
                               : (distance == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    return check;
}

}  // namespace polyflam::uq
