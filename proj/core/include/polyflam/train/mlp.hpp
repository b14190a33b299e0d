#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace polyflam::train {

// Fully connected network with tanh hidden units and a single output, either
// raw (regression) or squashed through a sigmoid (classification).
class MlpModel {
public:
    enum class Head { Identity, Sigmoid };

    MlpModel() = default;

    // sizes = {input, hidden..., 1}. Weights ~ N(0, scale/sqrt(fan_in)),
    // biases zero; deterministic for a fixed seed.
    static MlpModel init(const std::vector<int>& sizes, Head head, std::uint64_t seed,
                         double weight_init_scale = 1.0);

    // X is samples-by-features; returns one prediction per row.
    Eigen::VectorXd forward(const Eigen::MatrixXd& X) const;

    Head head() const { return head_; }
    const std::vector<int>& sizes() const { return sizes_; }
    std::size_t parameter_count() const;

    const std::vector<Eigen::MatrixXd>& weights() const { return weights_; }
    const std::vector<Eigen::VectorXd>& biases() const { return biases_; }
    std::vector<Eigen::MatrixXd>& mutable_weights() { return weights_; }
    std::vector<Eigen::VectorXd>& mutable_biases() { return biases_; }

    // Parameter vector round trip (gradient checks, checkpoints).
    Eigen::VectorXd flatten() const;
    void unflatten(const Eigen::VectorXd& params);

    bool same_shape(const MlpModel& other) const;

    std::string serialize() const;
    static MlpModel deserialize(const std::string& text);
    void save(const std::filesystem::path& path) const;
    static MlpModel load(const std::filesystem::path& path);

private:
    friend class Backprop;
    std::vector<int> sizes_;
    Head head_ = Head::Identity;
    std::vector<Eigen::MatrixXd> weights_;  // layer l: sizes[l+1] x sizes[l]
    std::vector<Eigen::VectorXd> biases_;
};

}  // namespace polyflam::train
