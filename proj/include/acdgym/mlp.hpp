#pragma once

#include <cstdint>
#include <vector>

#include "acdgym/errors.hpp"

namespace acd {

enum class Activation { Tanh, Relu };

// Fully-connected network with a linear output head and a single flat
// parameter vector (per-layer weights then biases), which keeps the
// optimiser, checkpointing and finite-difference checks trivial.
class Mlp {
public:
    // layer_sizes = {input, hidden..., output}. Hidden layers use orthogonal
    // init with gain sqrt(2); the output layer uses output_gain. Biases zero.
    Mlp(std::vector<int> layer_sizes, Activation hidden, std::uint64_t seed,
        double output_gain = 1.0);

    int input_size() const { return sizes_.front(); }
    int output_size() const { return sizes_.back(); }
    const std::vector<int>& layer_sizes() const { return sizes_; }
    Activation hidden_activation() const { return hidden_; }

    std::size_t parameter_count() const { return params_.size(); }
    const std::vector<double>& parameters() const { return params_; }
    std::vector<double>& mutable_parameters() { return params_; }
    void set_parameters(const std::vector<double>& params);

    struct Cache {
        // activations[0] is the input; activations[L] the linear output.
        std::vector<std::vector<double>> activations;
    };

    std::vector<double> forward(const std::vector<double>& x) const;
    void forward(const std::vector<double>& x, Cache& cache) const;

    // Accumulates dLoss/dparameters into grad (same size as parameters())
    // given dLoss/doutput for the cached forward pass.
    void backward(const Cache& cache, const std::vector<double>& dloss_doutput,
                  std::vector<double>& grad) const;

private:
    std::vector<int> sizes_;
    Activation hidden_;
    std::vector<double> params_;
    std::vector<std::size_t> w_offsets_;
    std::vector<std::size_t> b_offsets_;
};

// Adaptive moment estimation with the standard decay constants.
class AdamOptimizer {
public:
    AdamOptimizer(std::size_t parameter_count, double learning_rate,
                  double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8);

    void step(std::vector<double>& params, const std::vector<double>& grads);
    void reset();

private:
    double lr_;
    double beta1_;
    double beta2_;
    double eps_;
    std::int64_t t_ = 0;
    std::vector<double> m_;
    std::vector<double> v_;
};

}  // namespace acd
