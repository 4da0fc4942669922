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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stegainr/numerics/matrix.hpp"

namespace stegainr {

/// Hidden-layer nonlinearity. The output layer is always linear.
enum class Activation : std::uint8_t { ReLU = 0, Sine = 1, Identity = 2 };

std::string activation_name(Activation a);
Activation parse_activation(const std::string& name);

/// Random Fourier feature settings. The matrix itself is regenerated from
/// (seed, m, sigma, input dimension).
struct RffConfig {
    std::uint32_t frequencies = 0;  // m; the encoded width is 2m
    double sigma = 1.0;
    std::uint64_t seed = 0;

    friend bool operator==(const RffConfig&, const RffConfig&) = default;
};

/// Network structure: widths [n_in, hidden..., n_out] plus encoding.
///
/// With RFF enabled, widths.front() is the raw coordinate dimension d while
/// the first weight matrix consumes the 2m encoded features.
struct FunctionSpec {
    std::vector<std::size_t> widths;
    Activation activation = Activation::ReLU;
    std::optional<RffConfig> rff;

    std::size_t layer_count() const { return widths.size(); }
    std::size_t matrix_count() const { return widths.empty() ? 0 : widths.size() - 1; }
    std::size_t input_dim() const { return widths.front(); }
    std::size_t output_dim() const { return widths.back(); }
    std::size_t encoded_input_width() const;

    /// Column count of weight matrix l (post-RFF for l = 0).
    std::size_t fan_in(std::size_t l) const;
    /// Row count of weight matrix l.
    std::size_t fan_out(std::size_t l) const { return widths[l + 1]; }

    std::vector<std::size_t> hidden_widths() const;

    /// Throws ErrorCode::Structural when the structure is unusable.
    void validate() const;

    friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

/// [n_in, hidden..., n_out] as "2,64,64,64,3" plus activation / RFF tags.
std::string describe(const FunctionSpec& spec);

/// N(S) = sum over matrices of fan_out * fan_in + fan_out.
std::size_t parameter_count(const FunctionSpec& spec);

/// Weights W^l (fan_out x fan_in) and biases b^l for every matrix.
///
/// Canonical flat order shared by every flat view of the parameters:
/// W^0 row-major, b^0, W^1 row-major, b^1, ...
struct ParameterSet {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;

    std::size_t count() const;
    bool congruent_with(const FunctionSpec& spec) const;
    /// Throws ErrorCode::Structural naming the first incongruent layer.
    void require_congruent(const FunctionSpec& spec) const;
    bool all_finite() const;

    std::vector<double> flatten() const;
    static ParameterSet unflatten(const FunctionSpec& spec, std::span<const double> flat);

    /// Zero-filled set with the shapes of `spec`.
    static ParameterSet zeros(const FunctionSpec& spec);

    /// Round every value to the nearest binary32 (the stored precision).
    void round_to_f32();

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Bitwise comparison of two congruent sets.
bool bit_identical(const ParameterSet& a, const ParameterSet& b);

/// Weights ~ U[-1/sqrt(fan_in), 1/sqrt(fan_in)], biases 0. Deterministic.
ParameterSet init_params(const FunctionSpec& spec, std::uint64_t seed);

}  // namespace stegainr
