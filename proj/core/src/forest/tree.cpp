#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "polyflam/common/error.hpp"
#include "polyflam/forest/forest.hpp"

namespace polyflam::forest {

namespace {

struct BestSplit {
    bool found = false;
    double gain = 0.0;
    int feature = -1;
    double threshold = 0.0;
};

bool better(const BestSplit& candidate, const BestSplit& incumbent) {
    if (!incumbent.found) return true;
    constexpr double eps = 1e-12;
    if (candidate.gain > incumbent.gain + eps) return true;
    if (candidate.gain < incumbent.gain - eps) return false;
    if (candidate.feature != incumbent.feature) return candidate.feature < incumbent.feature;
    return candidate.threshold < incumbent.threshold;
}

class TreeBuilder {
public:
    TreeBuilder(const Matrix& X, std::span<const double> y, const TreeParams& params, Rng& rng)
        : X_(X), y_(y), params_(params), rng_(rng) {}

    std::vector<RegressionTree::Node> build(std::span<const std::size_t> indices) {
        std::vector<std::size_t> idx(indices.begin(), indices.end());
        root_build(idx, 0);
        return std::move(nodes_);
    }

private:
    int root_build(std::vector<std::size_t>& idx, int depth) {
        const int node_id = static_cast<int>(nodes_.size());
        nodes_.push_back(RegressionTree::Node{});

        double mean = 0.0;
        for (const auto i : idx) mean += y_[i];
        mean /= static_cast<double>(idx.size());
        nodes_[static_cast<std::size_t>(node_id)].value = mean;

        if (stop(idx, depth, mean)) return node_id;

        const BestSplit split = find_split(idx);
        if (!split.found) return node_id;

        std::vector<std::size_t> left, right;
        left.reserve(idx.size());
        right.reserve(idx.size());
        for (const auto i : idx) {
            if (X_.at(i, static_cast<std::size_t>(split.feature)) <= split.threshold) {
                left.push_back(i);
            } else {
                right.push_back(i);
            }
        }
        idx.clear();
        idx.shrink_to_fit();

        nodes_[static_cast<std::size_t>(node_id)].feature = split.feature;
        nodes_[static_cast<std::size_t>(node_id)].threshold = split.threshold;
        const int left_id = root_build(left, depth + 1);
        nodes_[static_cast<std::size_t>(node_id)].left = left_id;
        const int right_id = root_build(right, depth + 1);
        nodes_[static_cast<std::size_t>(node_id)].right = right_id;
        return node_id;
    }

    bool stop(const std::vector<std::size_t>& idx, int depth, double mean) const {
        if (params_.max_depth >= 0 && depth >= params_.max_depth) return true;
        if (idx.size() < 2 * static_cast<std::size_t>(std::max(1, params_.min_samples_leaf))) {
            return true;
        }
        for (const auto i : idx) {
            if (y_[i] != mean) return false;  // any variance left?
        }
        return true;
    }

    std::vector<int> sample_features() {
        const int d = static_cast<int>(X_.cols);
        int mtry = params_.mtry > 0 ? std::min(params_.mtry, d) : d;
        std::vector<int> features(static_cast<std::size_t>(d));
        std::iota(features.begin(), features.end(), 0);
        if (mtry == d) return features;
        // Partial Fisher-Yates, then sort for deterministic scan order.
        for (int i = 0; i < mtry; ++i) {
            const auto j = i + static_cast<int>(rng_.uniform_int(static_cast<std::uint64_t>(d - i)));
            std::swap(features[static_cast<std::size_t>(i)], features[static_cast<std::size_t>(j)]);
        }
        features.resize(static_cast<std::size_t>(mtry));
        std::sort(features.begin(), features.end());
        return features;
    }

    BestSplit find_split(const std::vector<std::size_t>& idx) {
        const auto features = sample_features();
        const std::size_t n = idx.size();
        const auto min_leaf = static_cast<std::size_t>(std::max(1, params_.min_samples_leaf));

        BestSplit best;
        std::vector<std::pair<double, double>> xy(n);  // (feature value, target)
        for (const int f : features) {
            for (std::size_t k = 0; k < n; ++k) {
                xy[k] = {X_.at(idx[k], static_cast<std::size_t>(f)), y_[idx[k]]};
            }
            std::sort(xy.begin(), xy.end());

            // Prefix sums: gain = sum_total^2/n - (SSE_L + SSE_R) up to a
            // constant; equivalently maximize sL^2/nL + sR^2/nR.
            double total = 0.0;
            for (const auto& [x, yv] : xy) {
                (void)x;
                total += yv;
            }
            const double base = total * total / static_cast<double>(n);

            double sum_left = 0.0;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                sum_left += xy[k].second;
                if (xy[k].first == xy[k + 1].first) continue;
                const std::size_t n_left = k + 1;
                const std::size_t n_right = n - n_left;
                if (n_left < min_leaf || n_right < min_leaf) continue;
                const double sum_right = total - sum_left;
                const double score = sum_left * sum_left / static_cast<double>(n_left) +
                                     sum_right * sum_right / static_cast<double>(n_right);
                BestSplit candidate;
                candidate.found = true;
                candidate.gain = score - base;
                candidate.feature = f;
                candidate.threshold = xy[k].first + 0.5 * (xy[k + 1].first - xy[k].first);
                if (candidate.gain > 1e-12 && better(candidate, best)) best = candidate;
            }
        }
        return best;
    }

    const Matrix& X_;
    std::span<const double> y_;
    const TreeParams& params_;
    Rng& rng_;
    std::vector<RegressionTree::Node> nodes_;
};

}  // namespace

RegressionTree RegressionTree::fit(const Matrix& X, std::span<const double> y,
                                   const TreeParams& params, Rng& rng) {
    std::vector<std::size_t> indices(X.rows);
    std::iota(indices.begin(), indices.end(), 0);
    return fit_subset(X, y, indices, params, rng);
}

RegressionTree RegressionTree::fit_subset(const Matrix& X, std::span<const double> y,
                                          std::span<const std::size_t> indices,
                                          const TreeParams& params, Rng& rng) {
    if (X.rows == 0 || indices.empty()) throw EmptyData("cannot fit a tree on an empty dataset");
    if (y.size() != X.rows) throw DimensionMismatch("X and y row counts differ");
    for (const auto i : indices) {
        if (!std::isfinite(y[i])) throw DomainError("non-finite target value");
    }
    RegressionTree tree;
    TreeBuilder builder(X, y, params, rng);
    tree.nodes_ = builder.build(indices);
    return tree;
}

double RegressionTree::predict(std::span<const double> x) const {
    int node = 0;
    for (;;) {
        const Node& n = nodes_[static_cast<std::size_t>(node)];
        if (n.feature < 0) return n.value;
        node = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
}

double r2_score(std::span<const double> y_true, std::span<const double> y_pred) {
    if (y_true.size() != y_pred.size()) throw DimensionMismatch("r2_score length mismatch");
    if (y_true.size() < 2) throw DimensionMismatch("r2_score needs at least 2 samples");
    double mean = 0.0;
    for (const auto v : y_true) mean += v;
    mean /= static_cast<double>(y_true.size());
    double sst = 0.0, sse = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        sst += (y_true[i] - mean) * (y_true[i] - mean);
        sse += (y_true[i] - y_pred[i]) * (y_true[i] - y_pred[i]);
    }
    if (sst == 0.0) throw DegenerateTarget("r2_score undefined for constant targets");
    return 1.0 - sse / sst;
}

}  // namespace polyflam::forest
