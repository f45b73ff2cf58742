#include "acdgym/mlp.hpp"

#include <cmath>
#include <random>

namespace acd {

namespace {

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; two raw draws per value keeps the stream simple.
    double u1 = 0.0;
    do {
        u1 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Orthogonal init: orthonormalises min(rows, cols) gaussian vectors of
// dimension max(rows, cols) via Gram-Schmidt, then scales by gain.
void orthogonal_init(double* w, int rows, int cols, double gain, std::mt19937_64& rng) {
    const int nvec = std::min(rows, cols);
    const int dim = std::max(rows, cols);
    std::vector<std::vector<double>> basis(nvec, std::vector<double>(dim));
    for (int i = 0; i < nvec; ++i) {
        double norm = 0.0;
        while (norm < 1e-8) {
            for (int d = 0; d < dim; ++d) basis[i][d] = gaussian(rng);
            for (int j = 0; j < i; ++j) {
                double dot = 0.0;
                for (int d = 0; d < dim; ++d) dot += basis[i][d] * basis[j][d];
                for (int d = 0; d < dim; ++d) basis[i][d] -= dot * basis[j][d];
            }
            norm = 0.0;
            for (int d = 0; d < dim; ++d) norm += basis[i][d] * basis[i][d];
            norm = std::sqrt(norm);
        }
        for (int d = 0; d < dim; ++d) basis[i][d] /= norm;
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double v = rows <= cols ? basis[r][c] : basis[c][r];
            w[r * cols + c] = gain * v;
        }
    }
}

}  // namespace

Mlp::Mlp(std::vector<int> layer_sizes, Activation hidden, std::uint64_t seed,
         double output_gain)
    : sizes_(std::move(layer_sizes)), hidden_(hidden) {
    if (sizes_.size() < 2) {
        throw ConfigError("Mlp needs at least input and output sizes");
    }
    for (int s : sizes_) {
        if (s < 1) throw ConfigError("Mlp layer sizes must be positive");
    }
    std::size_t total = 0;
    const std::size_t layers = sizes_.size() - 1;
    w_offsets_.resize(layers);
    b_offsets_.resize(layers);
    for (std::size_t l = 0; l < layers; ++l) {
        w_offsets_[l] = total;
        total += static_cast<std::size_t>(sizes_[l + 1]) * sizes_[l];
        b_offsets_[l] = total;
        total += sizes_[l + 1];
    }
    params_.assign(total, 0.0);

    std::mt19937_64 rng(seed);
    for (std::size_t l = 0; l < layers; ++l) {
        const double gain = l + 1 == layers ? output_gain : std::sqrt(2.0);
        orthogonal_init(params_.data() + w_offsets_[l], sizes_[l + 1], sizes_[l], gain, rng);
    }
}

void Mlp::set_parameters(const std::vector<double>& params) {
    if (params.size() != params_.size()) {
        throw ConfigError("parameter vector size mismatch");
    }
    params_ = params;
}

void Mlp::forward(const std::vector<double>& x, Cache& cache) const {
    if (static_cast<int>(x.size()) != input_size()) {
        throw ConfigError("Mlp input size mismatch");
    }
    const std::size_t layers = sizes_.size() - 1;
    cache.activations.resize(layers + 1);
    cache.activations[0] = x;
    for (std::size_t l = 0; l < layers; ++l) {
        const int rows = sizes_[l + 1];
        const int cols = sizes_[l];
        const double* w = params_.data() + w_offsets_[l];
        const double* b = params_.data() + b_offsets_[l];
        const std::vector<double>& in = cache.activations[l];
        std::vector<double>& out = cache.activations[l + 1];
        out.resize(rows);
        const bool is_output = l + 1 == layers;
        for (int r = 0; r < rows; ++r) {
            double z = b[r];
            const double* wr = w + static_cast<std::size_t>(r) * cols;
            for (int c = 0; c < cols; ++c) {
                z += wr[c] * in[c];
            }
            if (is_output) {
                out[r] = z;
            } else if (hidden_ == Activation::Tanh) {
                out[r] = std::tanh(z);
            } else {
                out[r] = z > 0.0 ? z : 0.0;
            }
        }
    }
}

std::vector<double> Mlp::forward(const std::vector<double>& x) const {
    Cache cache;
    forward(x, cache);
    return cache.activations.back();
}

void Mlp::backward(const Cache& cache, const std::vector<double>& dloss_doutput,
                   std::vector<double>& grad) const {
    if (grad.size() != params_.size()) {
        throw ConfigError("gradient vector size mismatch");
    }
    if (static_cast<int>(dloss_doutput.size()) != output_size()) {
        throw ConfigError("output gradient size mismatch");
    }
    const std::size_t layers = sizes_.size() - 1;
    std::vector<double> dz = dloss_doutput;  // linear head: dL/dz == dL/da
    std::vector<double> da_prev;
    for (std::size_t li = layers; li-- > 0;) {
        const int rows = sizes_[li + 1];
        const int cols = sizes_[li];
        const double* w = params_.data() + w_offsets_[li];
        double* gw = grad.data() + w_offsets_[li];
        double* gb = grad.data() + b_offsets_[li];
        const std::vector<double>& in = cache.activations[li];

        for (int r = 0; r < rows; ++r) {
            const double d = dz[r];
            gb[r] += d;
            double* gwr = gw + static_cast<std::size_t>(r) * cols;
            for (int c = 0; c < cols; ++c) {
                gwr[c] += d * in[c];
            }
        }
        if (li == 0) break;

        da_prev.assign(cols, 0.0);
        for (int r = 0; r < rows; ++r) {
            const double d = dz[r];
            const double* wr = w + static_cast<std::size_t>(r) * cols;
            for (int c = 0; c < cols; ++c) {
                da_prev[c] += wr[c] * d;
            }
        }
        // in == activation output of layer li-1 (a hidden layer).
        dz.resize(cols);
        for (int c = 0; c < cols; ++c) {
            const double a = in[c];
            const double deriv = hidden_ == Activation::Tanh ? 1.0 - a * a : (a > 0.0 ? 1.0 : 0.0);
            dz[c] = da_prev[c] * deriv;
        }
    }
}

AdamOptimizer::AdamOptimizer(std::size_t parameter_count, double learning_rate,
                             double beta1, double beta2, double epsilon)
    : lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon),
      m_(parameter_count, 0.0),
      v_(parameter_count, 0.0) {}

void AdamOptimizer::step(std::vector<double>& params, const std::vector<double>& grads) {
    if (params.size() != m_.size() || grads.size() != m_.size()) {
        throw ConfigError("AdamOptimizer size mismatch");
    }
    ++t_;
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grads[i];
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i] * grads[i];
        const double mhat = m_[i] / bc1;
        const double vhat = v_[i] / bc2;
        params[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
}

void AdamOptimizer::reset() {
    t_ = 0;
    std::fill(m_.begin(), m_.end(), 0.0);
    std::fill(v_.begin(), v_.end(), 0.0);
}

}  // namespace acd
