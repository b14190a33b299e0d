#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "polyflam/common/rng.hpp"

namespace polyflam::forest {

// Row-major numeric matrix, the only data layout the forest sees.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data.data() + r * cols, cols);
    }
};

struct TreeParams {
    int max_depth = -1;        // -1: unlimited
    int min_samples_leaf = 2;
    int mtry = 0;              // features tried per split; 0: all
};

// CART regression tree: greedy best split by sum-of-squared-error reduction,
// thresholds at midpoints between consecutive distinct sorted values, leaves
// predict the subset mean. Ties between equal-gain splits break to the lowest
// feature index, then the lowest threshold.
class RegressionTree {
public:
    struct Node {
        int feature = -1;  // -1: leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        double value = 0.0;
    };

    static RegressionTree fit(const Matrix& X, std::span<const double> y, const TreeParams& params,
                              Rng& rng);
    static RegressionTree fit_subset(const Matrix& X, std::span<const double> y,
                                     std::span<const std::size_t> indices,
                                     const TreeParams& params, Rng& rng);

    double predict(std::span<const double> x) const;

    const std::vector<Node>& nodes() const { return nodes_; }
    std::vector<Node>& mutable_nodes() { return nodes_; }

private:
    std::vector<Node> nodes_;
};

struct ForestParams {
    int n_trees = 200;
    int mtry = 0;              // 0: ceil(d / 3)
    bool bootstrap = true;
    std::uint64_t seed = 0;
    int max_depth = -1;
    int min_samples_leaf = 2;
};

class Forest {
public:
    // Throws EmptyData for an empty training set.
    static Forest fit(const Matrix& X, std::span<const double> y, const ForestParams& params);

    // Mean over trees. Throws DimensionMismatch when x.size() != the training
    // dimension. Always within [min(y_train), max(y_train)].
    double predict(std::span<const double> x) const;

    std::size_t dimension() const { return dim_; }
    std::size_t tree_count() const { return trees_.size(); }
    const ForestParams& params() const { return params_; }
    double y_min() const { return y_min_; }
    double y_max() const { return y_max_; }

    // Self-describing structured text checkpoint (JSON).
    std::string serialize() const;
    static Forest deserialize(const std::string& text);
    void save(const std::filesystem::path& path) const;
    static Forest load(const std::filesystem::path& path);

private:
    std::vector<RegressionTree> trees_;
    std::size_t dim_ = 0;
    double y_min_ = 0.0;
    double y_max_ = 0.0;
    ForestParams params_;
};

// 1 - SSE/SST. Throws DegenerateTarget when Var(y_true) == 0, DimensionMismatch
// on length mismatch.
double r2_score(std::span<const double> y_true, std::span<const double> y_pred);

}  // namespace polyflam::forest
