#pragma once

#include <cstdint>
#include <vector>

#include "roll/matrix.hpp"

namespace roll {

enum class Activation { ReLU, LeakyReLU };

struct DenseLayer {
    Matrix w;  // N_i x N_{i-1}
    Vector b;  // N_i
};

// Fully-connected piecewise-linear network: hidden layers 0..M-1 carry the
// activation, the last layer is affine only. Immutable except through
// apply_update(), which bumps a version counter so traces can detect
// staleness.
class Network {
public:
    Network(std::vector<DenseLayer> layers, Activation act = Activation::ReLU,
            double alpha = 0.01);

    std::size_t input_dim() const { return layers_.front().w.cols; }
    std::size_t output_dim() const { return layers_.back().w.rows; }
    // Number of hidden (activated) layers.
    std::size_t hidden_layer_count() const { return layers_.size() - 1; }
    std::size_t hidden_neuron_count() const;
    std::size_t layer_count() const { return layers_.size(); }
    const DenseLayer& layer(std::size_t i) const { return layers_[i]; }
    const std::vector<DenseLayer>& layers() const { return layers_; }
    Activation activation() const { return act_; }
    double alpha() const { return alpha_; }
    std::uint64_t version() const { return version_; }

    // Slope of the activation on the negative side of a neuron.
    double negative_slope() const { return act_ == Activation::ReLU ? 0.0 : alpha_; }

    // theta += scale * delta, shape-checked. Bumps the version.
    void apply_update(const std::vector<DenseLayer>& delta, double scale);

private:
    std::vector<DenseLayer> layers_;
    Activation act_;
    double alpha_;
    std::uint64_t version_ = 0;
};

// Everything forward() computes at one input: pre-activations and
// activations per hidden layer plus the network output.
struct ForwardTrace {
    Vector input;
    std::vector<Vector> z;  // hidden pre-activations, z[i] for hidden layer i
    std::vector<Vector> a;  // hidden activations, a[i] = act(z[i])
    Vector output;

    const Network* net = nullptr;
    std::uint64_t net_version = 0;
};

// Parameter-shaped gradient accumulator.
struct ParamGrads {
    std::vector<DenseLayer> layers;

    static ParamGrads zeros_like(const Network& net);
    void add_scaled(const ParamGrads& other, double scale);
    void scale(double s);
};

// Record of one forward evaluation; replaying it re-runs the affine chain
// and must reproduce the stored output bit-identically.
struct GradientTape {
    ForwardTrace trace;

    Vector replay(const Network& net) const;
};

struct BackpropResult {
    ParamGrads param_grads;
    Vector input_grad;
};

ForwardTrace forward(const Network& net, const Vector& x);

// Gradients of seed^T f(x) with respect to parameters and input, using the
// convention that a neuron sitting exactly on z = 0 propagates with slope 1.
BackpropResult backprop_scalar(const Network& net, const ForwardTrace& trace,
                               const Vector& seed);

struct LossResult {
    double loss;
    Vector grad;  // d loss / d logits
};

LossResult loss_softmax_xent(const Vector& logits, std::size_t label);

// ---- batched variants used by the trainers (one row per example) ----

struct BatchTrace {
    Matrix input;                 // B x D
    std::vector<Matrix> z;        // B x N_i per hidden layer
    std::vector<Matrix> a;
    Matrix output;                // B x L

    const Network* net = nullptr;
    std::uint64_t net_version = 0;
};

BatchTrace forward_batch(const Network& net, const Matrix& x);

// Accumulates gradients for sum_b dOut[b]^T f(x_b) into grads.
void backprop_batch(const Network& net, const BatchTrace& trace, const Matrix& d_out,
                    ParamGrads& grads);

}  // namespace roll
