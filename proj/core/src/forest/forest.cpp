#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "polyflam/common/csv.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/forest/forest.hpp"

namespace polyflam::forest {

using nlohmann::ordered_json;

Forest Forest::fit(const Matrix& X, std::span<const double> y, const ForestParams& params) {
    if (X.rows == 0) throw EmptyData("cannot fit a forest on an empty dataset");
    if (y.size() != X.rows) throw DimensionMismatch("X and y row counts differ");
    if (params.n_trees < 1) throw DomainError("n_trees must be >= 1");

    Forest forest;
    forest.dim_ = X.cols;
    forest.params_ = params;
    forest.y_min_ = *std::min_element(y.begin(), y.end());
    forest.y_max_ = *std::max_element(y.begin(), y.end());

    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;
    tree_params.min_samples_leaf = params.min_samples_leaf;
    tree_params.mtry = params.mtry > 0
                           ? params.mtry
                           : static_cast<int>((X.cols + 2) / 3);  // ceil(d/3)

    forest.trees_.reserve(static_cast<std::size_t>(params.n_trees));
    std::vector<std::size_t> indices(X.rows);
    for (int t = 0; t < params.n_trees; ++t) {
        // Independent per-tree streams derived from the master seed.
        Rng rng(Rng::derive(params.seed, static_cast<std::uint64_t>(t)));
        if (params.bootstrap) {
            for (auto& i : indices) {
                i = static_cast<std::size_t>(rng.uniform_int(X.rows));
            }
        } else {
            std::iota(indices.begin(), indices.end(), 0);
        }
        forest.trees_.push_back(RegressionTree::fit_subset(X, y, indices, tree_params, rng));
    }
    return forest;
}

double Forest::predict(std::span<const double> x) const {
    if (x.size() != dim_) {
        throw DimensionMismatch("query has " + std::to_string(x.size()) + " features, model has " +
                                std::to_string(dim_));
    }
    double sum = 0.0;
    for (const auto& tree : trees_) sum += tree.predict(x);
    return sum / static_cast<double>(trees_.size());
}

std::string Forest::serialize() const {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "forest";
    j["params"] = {{"n_trees", params_.n_trees},
                   {"mtry", params_.mtry},
                   {"bootstrap", params_.bootstrap},
                   {"seed", params_.seed},
                   {"max_depth", params_.max_depth},
                   {"min_samples_leaf", params_.min_samples_leaf}};
    j["dim"] = dim_;
    j["y_min"] = y_min_;
    j["y_max"] = y_max_;
    ordered_json trees = ordered_json::array();
    for (const auto& tree : trees_) {
        ordered_json t;
        std::vector<int> feature, left, right;
        std::vector<double> threshold, value;
        for (const auto& node : tree.nodes()) {
            feature.push_back(node.feature);
            threshold.push_back(node.threshold);
            left.push_back(node.left);
            right.push_back(node.right);
            value.push_back(node.value);
        }
        t["feature"] = feature;
        t["threshold"] = threshold;
        t["left"] = left;
        t["right"] = right;
        t["value"] = value;
        trees.push_back(std::move(t));
    }
    j["trees"] = std::move(trees);
    return j.dump();
}

Forest Forest::deserialize(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid forest checkpoint: ") + e.what());
    }
    if (!j.contains("kind") || j["kind"] != "forest") {
        throw SchemaError("checkpoint is not a forest model");
    }
    Forest forest;
    try {
        const auto& p = j.at("params");
        forest.params_.n_trees = p.at("n_trees").get<int>();
        forest.params_.mtry = p.at("mtry").get<int>();
        forest.params_.bootstrap = p.at("bootstrap").get<bool>();
        forest.params_.seed = p.at("seed").get<std::uint64_t>();
        forest.params_.max_depth = p.at("max_depth").get<int>();
        forest.params_.min_samples_leaf = p.at("min_samples_leaf").get<int>();
        forest.dim_ = j.at("dim").get<std::size_t>();
        forest.y_min_ = j.at("y_min").get<double>();
        forest.y_max_ = j.at("y_max").get<double>();
        for (const auto& t : j.at("trees")) {
            const auto feature = t.at("feature").get<std::vector<int>>();
            const auto threshold = t.at("threshold").get<std::vector<double>>();
            const auto left = t.at("left").get<std::vector<int>>();
            const auto right = t.at("right").get<std::vector<int>>();
            const auto value = t.at("value").get<std::vector<double>>();
            if (feature.size() != threshold.size() || feature.size() != left.size() ||
                feature.size() != right.size() || feature.size() != value.size()) {
                throw SchemaError("forest checkpoint has ragged node arrays");
            }
            RegressionTree tree;
            for (std::size_t i = 0; i < feature.size(); ++i) {
                tree.mutable_nodes().push_back(RegressionTree::Node{
                    feature[i], threshold[i], left[i], right[i], value[i]});
            }
            forest.trees_.push_back(std::move(tree));
        }
    } catch (const ordered_json::exception& e) {
        throw SchemaError(std::string("forest checkpoint missing field: ") + e.what());
    }
    if (forest.trees_.empty()) throw SchemaError("forest checkpoint has no trees");
    return forest;
}

void Forest::save(const std::filesystem::path& path) const {
    write_text_file(path, serialize());
}

Forest Forest::load(const std::filesystem::path& path) {
    return deserialize(read_text_file(path));
}

}  // namespace polyflam::forest
