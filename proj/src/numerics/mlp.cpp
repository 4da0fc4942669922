// Copyright 2026-present the stegainr project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stegainr/numerics/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "stegainr/error.hpp"
#include "stegainr/simd/kernels.hpp"

namespace stegainr {

namespace {

Matrix
affine(const Matrix& in, const Matrix& w, const std::vector<double>& b) {
    Matrix out(in.rows(), w.rows());
    for (std::size_t r = 0; r < out.rows(); ++r) {
        auto row = out.row(r);
        std::copy(b.begin(), b.end(), row.begin());
    }
    const Matrix wt = w.transposed();
    simd::gemm_nn(in.rows(), w.rows(), w.cols(), in.data(), in.cols(), wt.data(), wt.cols(),
                  out.data(), out.cols());
    return out;
}

void
activate(Activation kind, const Matrix& pre, Matrix& act) {
    switch (kind) {
        case Activation::ReLU:
            simd::relu(pre.size(), pre.data(), act.data());
            return;
        case Activation::Sine:
            for (std::size_t i = 0; i < pre.size(); ++i) {
                act.data()[i] = std::sin(pre.data()[i]);
            }
            return;
        case Activation::Identity:
            act = pre;
            return;
    }
}

// grad <- grad * psi'(pre)
void
activate_backward(Activation kind, const Matrix& pre, Matrix& grad) {
    switch (kind) {
        case Activation::ReLU:
            simd::relu_backward(pre.size(), pre.data(), grad.data());
            return;
        case Activation::Sine:
            for (std::size_t i = 0; i < pre.size(); ++i) {
                grad.data()[i] *= std::cos(pre.data()[i]);
            }
            return;
        case Activation::Identity:
            return;
    }
}

void
check_inputs(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs) {
    params.require_congruent(spec);
    if (inputs.cols() != spec.fan_in(0)) {
        fail(ErrorCode::Structural, "layer 0: input width " + std::to_string(inputs.cols()) +
                                        " does not match expected " +
                                        std::to_string(spec.fan_in(0)) +
                                        (spec.rff ? " (RFF-encoded width)" : ""));
    }
}

}  // namespace

ForwardTrace
forward(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs) {
    check_inputs(spec, params, inputs);
    const std::size_t layers = spec.matrix_count();
    ForwardTrace trace;
    trace.pre.reserve(layers);
    trace.act.reserve(layers + 1);
    trace.act.push_back(inputs);
    for (std::size_t l = 0; l < layers; ++l) {
        trace.pre.push_back(affine(trace.act[l], params.weights[l], params.biases[l]));
        const Matrix& s = trace.pre.back();
        if (l + 1 == layers) {
            trace.act.push_back(s);
        } else {
            Matrix a(s.rows(), s.cols());
            activate(spec.activation, s, a);
            trace.act.push_back(std::move(a));
        }
    }
    return trace;
}

Matrix
predict(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs) {
    check_inputs(spec, params, inputs);
    const std::size_t layers = spec.matrix_count();
    Matrix current = inputs;
    for (std::size_t l = 0; l < layers; ++l) {
        Matrix s = affine(current, params.weights[l], params.biases[l]);
        if (l + 1 == layers) {
            return s;
        }
        Matrix a(s.rows(), s.cols());
        activate(spec.activation, s, a);
        current = std::move(a);
    }
    return current;
}

double
squared_error_loss(const Matrix& outputs, const Matrix& targets, LossReduction reduction) {
    if (outputs.rows() != targets.rows() || outputs.cols() != targets.cols()) {
        fail(ErrorCode::Structural, "loss: outputs " + std::to_string(outputs.rows()) + "x" +
                                        std::to_string(outputs.cols()) + " vs targets " +
                                        std::to_string(targets.rows()) + "x" +
                                        std::to_string(targets.cols()));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const double d = outputs.data()[i] - targets.data()[i];
        total += d * d;
    }
    if (reduction == LossReduction::Mean && outputs.rows() > 0) {
        total /= static_cast<double>(outputs.rows());
    }
    return total;
}

ParameterSet
backward(const FunctionSpec& spec, const ParameterSet& params, const ForwardTrace& trace,
         const Matrix& targets, LossReduction reduction) {
    params.require_congruent(spec);
    const std::size_t layers = spec.matrix_count();
    if (trace.pre.size() != layers || trace.act.size() != layers + 1) {
        fail(ErrorCode::Structural, "trace has " + std::to_string(trace.pre.size()) +
                                        " layers, spec needs " + std::to_string(layers));
    }
    const Matrix& out = trace.output();
    if (targets.rows() != out.rows()) {
        fail(ErrorCode::Structural, "batch mismatch: trace has " + std::to_string(out.rows()) +
                                        " samples, targets " + std::to_string(targets.rows()));
    }
    if (targets.cols() != out.cols()) {
        fail(ErrorCode::Structural, "layer " + std::to_string(layers) + ": target width " +
                                        std::to_string(targets.cols()) + " vs output width " +
                                        std::to_string(out.cols()));
    }

    const std::size_t batch = out.rows();
    const double scale =
        reduction == LossReduction::Mean && batch > 0 ? 2.0 / static_cast<double>(batch) : 2.0;

    Matrix delta(batch, out.cols());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        delta.data()[i] = scale * (out.data()[i] - targets.data()[i]);
    }

    ParameterSet grads = ParameterSet::zeros(spec);
    for (std::size_t l = layers; l-- > 0;) {
        const Matrix& a = trace.act[l];
        const std::size_t fan_out = delta.cols();
        const std::size_t fan_in = a.cols();

        const Matrix delta_t = delta.transposed();
        simd::gemm_nn(fan_out, fan_in, batch, delta_t.data(), batch, a.data(), fan_in,
                      grads.weights[l].data(), fan_in);
        simd::column_sum(batch, fan_out, delta.data(), fan_out, grads.biases[l].data());

        if (l == 0) {
            break;
        }
        Matrix upstream(batch, fan_in);
        simd::gemm_nn(batch, fan_in, fan_out, delta.data(), fan_out, params.weights[l].data(),
                      fan_in, upstream.data(), fan_in);
        activate_backward(spec.activation, trace.pre[l - 1], upstream);
        delta = std::move(upstream);
    }
    return grads;
}

void
require_finite_gradients(const ParameterSet& grads) {
    for (std::size_t l = 0; l < grads.weights.size(); ++l) {
        double max_abs = 0.0;
        bool finite = true;
        auto scan = [&](std::span<const double> values) {
            for (double v : values) {
                if (!std::isfinite(v)) {
                    finite = false;
                    max_abs = std::numeric_limits<double>::infinity();
                } else if (std::abs(v) > max_abs) {
                    max_abs = std::abs(v);
                }
            }
        };
        scan(grads.weights[l].values());
        scan(grads.biases[l]);
        if (!finite) {
            std::ostringstream msg;
            msg << "layer " << l << ": non-finite gradient (max |grad| = " << max_abs << ")";
            fail(ErrorCode::Divergence, msg.str());
        }
    }
}

void
sgd_update(ParameterSet& params, const ParameterSet& grads, double eta) {
    if (params.weights.size() != grads.weights.size()) {
        fail(ErrorCode::Structural, "gradient set has " + std::to_string(grads.weights.size()) +
                                        " layers, parameters " +
                                        std::to_string(params.weights.size()));
    }
    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        if (params.weights[l].rows() != grads.weights[l].rows() ||
            params.weights[l].cols() != grads.weights[l].cols() ||
            params.biases[l].size() != grads.biases[l].size()) {
            fail(ErrorCode::Structural,
                 "layer " + std::to_string(l) + ": gradient shape differs from parameters");
        }
    }
    require_finite_gradients(grads);
    if (eta == 0.0) {
        return;
    }
    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        simd::update(params.weights[l].size(), params.weights[l].data(), grads.weights[l].data(),
                     eta);
        simd::update(params.biases[l].size(), params.biases[l].data(), grads.biases[l].data(),
                     eta);
    }
}

ParameterSet
sgd_step(const ParameterSet& params, const ParameterSet& grads, double eta) {
    ParameterSet next = params;
    sgd_update(next, grads, eta);
    return next;
}

}  // namespace stegainr
