#include "roll/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roll/errors.hpp"

namespace roll {

namespace {

void check_finite(const Matrix& m, const std::string& what) {
    for (double v : m.data)
        if (!std::isfinite(v)) throw ValidationError(what + " contains a non-finite value");
}

void check_finite(const Vector& v, const std::string& what) {
    for (double x : v)
        if (!std::isfinite(x)) throw ValidationError(what + " contains a non-finite value");
}

}  // namespace

Network::Network(std::vector<DenseLayer> layers, Activation act, double alpha)
    : layers_(std::move(layers)), act_(act), alpha_(alpha) {
    if (layers_.empty()) throw ValidationError("network needs at least the output layer");
    if (act_ == Activation::LeakyReLU && !(alpha_ > 0.0 && alpha_ < 1.0))
        throw ValidationError("leaky relu slope must lie in (0, 1)");
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const DenseLayer& l = layers_[i];
        if (l.w.rows == 0 || l.w.cols == 0)
            throw ValidationError("layer " + std::to_string(i) + " has an empty weight matrix");
        if (l.b.size() != l.w.rows)
            throw ValidationError("layer " + std::to_string(i) + " bias length mismatch");
        if (i > 0 && l.w.cols != layers_[i - 1].w.rows)
            throw ValidationError("layer " + std::to_string(i) +
                                  " input width does not chain with previous layer");
        check_finite(l.w, "layer " + std::to_string(i) + " weights");
        check_finite(l.b, "layer " + std::to_string(i) + " bias");
    }
}

std::size_t Network::hidden_neuron_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < layers_.size(); ++i) n += layers_[i].w.rows;
    return n;
}

void Network::apply_update(const std::vector<DenseLayer>& delta, double scale) {
    if (delta.size() != layers_.size()) throw ValidationError("update layer count mismatch");
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (!delta[i].w.same_shape(layers_[i].w) || delta[i].b.size() != layers_[i].b.size())
            throw ValidationError("update shape mismatch at layer " + std::to_string(i));
        double* w = layers_[i].w.data.data();
        const double* d = delta[i].w.data.data();
        for (std::size_t k = 0; k < layers_[i].w.data.size(); ++k) w[k] += scale * d[k];
        for (std::size_t k = 0; k < layers_[i].b.size(); ++k)
            layers_[i].b[k] += scale * delta[i].b[k];
    }
    ++version_;
}

ParamGrads ParamGrads::zeros_like(const Network& net) {
    ParamGrads g;
    g.layers.reserve(net.layer_count());
    for (std::size_t i = 0; i < net.layer_count(); ++i) {
        const DenseLayer& l = net.layer(i);
        g.layers.push_back({Matrix(l.w.rows, l.w.cols, 0.0), Vector(l.b.size(), 0.0)});
    }
    return g;
}

void ParamGrads::add_scaled(const ParamGrads& other, double s) {
    for (std::size_t i = 0; i < layers.size(); ++i) {
        double* w = layers[i].w.data.data();
        const double* o = other.layers[i].w.data.data();
        for (std::size_t k = 0; k < layers[i].w.data.size(); ++k) w[k] += s * o[k];
        for (std::size_t k = 0; k < layers[i].b.size(); ++k)
            layers[i].b[k] += s * other.layers[i].b[k];
    }
}

void ParamGrads::scale(double s) {
    for (auto& l : layers) {
        for (double& v : l.w.data) v *= s;
        for (double& v : l.b) v *= s;
    }
}

ForwardTrace forward(const Network& net, const Vector& x) {
    if (x.size() != net.input_dim()) throw ValidationError("forward: input length mismatch");
    check_finite(x, "input");

    const std::size_t m = net.hidden_layer_count();
    const double slope = net.negative_slope();

    ForwardTrace t;
    t.input = x;
    t.z.reserve(m);
    t.a.reserve(m);
    const Vector* prev = &t.input;
    for (std::size_t i = 0; i < m; ++i) {
        Vector z = matvec(net.layer(i).w, *prev);
        add_in_place(z, net.layer(i).b);
        Vector a(z.size());
        for (std::size_t j = 0; j < z.size(); ++j) a[j] = z[j] >= 0.0 ? z[j] : slope * z[j];
        t.z.push_back(std::move(z));
        t.a.push_back(std::move(a));
        prev = &t.a.back();
    }
    t.output = matvec(net.layer(m).w, *prev);
    add_in_place(t.output, net.layer(m).b);
    t.net = &net;
    t.net_version = net.version();
    return t;
}

Vector GradientTape::replay(const Network& net) const {
    return forward(net, trace.input).output;
}

BackpropResult backprop_scalar(const Network& net, const ForwardTrace& trace,
                               const Vector& seed) {
    if (trace.net != &net || trace.net_version != net.version())
        throw CheckError("backprop_scalar: trace is stale for this network");
    if (seed.size() != net.output_dim())
        throw ValidationError("backprop_scalar: seed length mismatch");

    const std::size_t m = net.hidden_layer_count();
    const double slope = net.negative_slope();

    BackpropResult r;
    r.param_grads = ParamGrads::zeros_like(net);

    // Output layer.
    const Vector& a_last = m > 0 ? trace.a[m - 1] : trace.input;
    DenseLayer& gout = r.param_grads.layers[m];
    for (std::size_t i = 0; i < seed.size(); ++i) {
        gout.b[i] = seed[i];
        double* wrow = gout.w.row(i);
        for (std::size_t j = 0; j < a_last.size(); ++j) wrow[j] = seed[i] * a_last[j];
    }
    Vector delta = matvec_t(net.layer(m).w, seed);  // d / d a^{m-1}

    for (std::size_t ii = m; ii-- > 0;) {
        const Vector& z = trace.z[ii];
        for (std::size_t j = 0; j < delta.size(); ++j)
            delta[j] *= z[j] >= 0.0 ? 1.0 : slope;  // now d / d z^{ii}

        const Vector& a_prev = ii > 0 ? trace.a[ii - 1] : trace.input;
        DenseLayer& g = r.param_grads.layers[ii];
        for (std::size_t j = 0; j < delta.size(); ++j) {
            g.b[j] = delta[j];
            if (delta[j] == 0.0) continue;
            double* wrow = g.w.row(j);
            for (std::size_t k = 0; k < a_prev.size(); ++k) wrow[k] = delta[j] * a_prev[k];
        }
        delta = matvec_t(net.layer(ii).w, delta);
    }
    r.input_grad = std::move(delta);
    return r;
}

LossResult loss_softmax_xent(const Vector& logits, std::size_t label) {
    if (logits.size() < 2) throw ValidationError("softmax cross-entropy needs >= 2 classes");
    if (label >= logits.size()) throw ValidationError("label index out of range");

    const double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double v : logits) sum += std::exp(v - mx);
    const double lse = mx + std::log(sum);

    LossResult r;
    r.loss = lse - logits[label];
    r.grad.resize(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i) r.grad[i] = std::exp(logits[i] - lse);
    r.grad[label] -= 1.0;
    return r;
}

BatchTrace forward_batch(const Network& net, const Matrix& x) {
    if (x.cols != net.input_dim()) throw ValidationError("forward_batch: input width mismatch");

    const std::size_t m = net.hidden_layer_count();
    const double slope = net.negative_slope();

    BatchTrace t;
    t.input = x;
    t.z.reserve(m);
    t.a.reserve(m);
    const Matrix* prev = &t.input;
    for (std::size_t i = 0; i <= m; ++i) {
        Matrix z = matmul_bt(*prev, net.layer(i).w);
        const Vector& b = net.layer(i).b;
        for (std::size_t r = 0; r < z.rows; ++r) {
            double* row = z.row(r);
            for (std::size_t c = 0; c < z.cols; ++c) row[c] += b[c];
        }
        if (i == m) {
            t.output = std::move(z);
            break;
        }
        Matrix a(z.rows, z.cols);
        for (std::size_t k = 0; k < z.data.size(); ++k)
            a.data[k] = z.data[k] >= 0.0 ? z.data[k] : slope * z.data[k];
        t.z.push_back(std::move(z));
        t.a.push_back(std::move(a));
        prev = &t.a.back();
    }
    t.net = &net;
    t.net_version = net.version();
    return t;
}

void backprop_batch(const Network& net, const BatchTrace& trace, const Matrix& d_out,
                    ParamGrads& grads) {
    if (trace.net != &net || trace.net_version != net.version())
        throw CheckError("backprop_batch: trace is stale for this network");

    const std::size_t m = net.hidden_layer_count();
    const double slope = net.negative_slope();

    const Matrix& a_last = m > 0 ? trace.a[m - 1] : trace.input;
    Matrix d = d_out;  // B x L, gradient w.r.t. layer output rows

    // dW = d^T * a_prev, db = column sums of d.
    auto accumulate = [&](std::size_t layer_idx, const Matrix& dlayer, const Matrix& a_prev) {
        Matrix dt = transpose(dlayer);
        Matrix dw = matmul(dt, a_prev);
        DenseLayer& g = grads.layers[layer_idx];
        for (std::size_t k = 0; k < dw.data.size(); ++k) g.w.data[k] += dw.data[k];
        for (std::size_t r = 0; r < dlayer.rows; ++r) {
            const double* row = dlayer.row(r);
            for (std::size_t c = 0; c < dlayer.cols; ++c) g.b[c] += row[c];
        }
    };

    accumulate(m, d, a_last);
    if (m == 0) return;
    Matrix da = matmul(d, net.layer(m).w);  // B x N_{m-1}

    for (std::size_t ii = m; ii-- > 0;) {
        const Matrix& z = trace.z[ii];
        for (std::size_t k = 0; k < da.data.size(); ++k)
            da.data[k] *= z.data[k] >= 0.0 ? 1.0 : slope;  // now d / d z^{ii}

        const Matrix& a_prev = ii > 0 ? trace.a[ii - 1] : trace.input;
        accumulate(ii, da, a_prev);
        if (ii > 0) da = matmul(da, net.layer(ii).w);
    }
}

}  // namespace roll
