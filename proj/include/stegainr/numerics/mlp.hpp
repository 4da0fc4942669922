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


#pragma once

#include <cstdint>
#include <vector>

#include "stegainr/model/function_spec.hpp"
#include "stegainr/numerics/matrix.hpp"

namespace stegainr {

/// Reduction of the squared-error loss over a batch.
///
/// Sum: L = sum_i ||f(x_i) - y_i||^2. Mean: the same divided by the batch
/// size, which only rescales the gradient (and therefore the effective step).
enum class LossReduction : std::uint8_t { Sum = 0, Mean = 1 };

/// Per-layer pre-activations s^l and activations a^l for one batch.
///
/// act[0] is the (encoded) input batch; for each matrix l,
/// pre[l] = act[l] * W^l^T + b^l and act[l + 1] = psi(pre[l]) (identity on
/// the last layer). Rows are samples.
struct ForwardTrace {
    std::vector<Matrix> pre;
    std::vector<Matrix> act;

    std::size_t batch() const { return act.empty() ? 0 : act.front().rows(); }
    const Matrix& output() const { return act.back(); }
};

/// Inputs must already be encoded (see encode_inputs): batch x fan_in(0).
ForwardTrace forward(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs);

/// Output of the network only; does not keep intermediate layers.
Matrix predict(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs);

double squared_error_loss(const Matrix& outputs, const Matrix& targets, LossReduction reduction);

/// Gradient of the squared-error loss with respect to every W^l and b^l.
ParameterSet backward(const FunctionSpec& spec, const ParameterSet& params,
                      const ForwardTrace& trace, const Matrix& targets,
                      LossReduction reduction = LossReduction::Sum);

/// params - eta * grads. Throws ErrorCode::Divergence if any gradient is
/// non-finite, naming the layer and its largest |grad|. eta = 0 returns the
/// input unchanged, bit for bit.
ParameterSet sgd_step(const ParameterSet& params, const ParameterSet& grads, double eta);

/// In-place form of sgd_step.
void sgd_update(ParameterSet& params, const ParameterSet& grads, double eta);

/// Throws ErrorCode::Divergence on the first layer holding a non-finite value.
void require_finite_gradients(const ParameterSet& grads);

}  // namespace stegainr
