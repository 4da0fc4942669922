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


#include "stegainr/model/parameter_mask.hpp"

#include <string>

#include "stegainr/error.hpp"

namespace stegainr {

ParameterMask
ParameterMask::filled(const FunctionSpec& spec, std::uint8_t value) {
    ParameterMask m;
    for (std::size_t l = 0; l < spec.matrix_count(); ++l) {
        m.weights.emplace_back(spec.fan_out(l) * spec.fan_in(l), value);
        m.biases.emplace_back(spec.fan_out(l), value);
    }
    return m;
}

std::size_t
ParameterMask::size() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) {
        n += weights[l].size() + biases[l].size();
    }
    return n;
}

std::size_t
ParameterMask::frozen_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) {
        for (auto v : weights[l]) {
            n += v == 0;
        }
        for (auto v : biases[l]) {
            n += v == 0;
        }
    }
    return n;
}

bool
ParameterMask::congruent_with(const FunctionSpec& spec) const {
    if (weights.size() != spec.matrix_count() || biases.size() != spec.matrix_count()) {
        return false;
    }
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].size() != spec.fan_out(l) * spec.fan_in(l) ||
            biases[l].size() != spec.fan_out(l)) {
            return false;
        }
    }
    return true;
}

void
ParameterMask::require_congruent(const FunctionSpec& spec) const {
    if (weights.size() != spec.matrix_count() || biases.size() != spec.matrix_count()) {
        fail(ErrorCode::Structural, "mask has " + std::to_string(weights.size()) +
                                        " layers, function " + describe(spec) + " has " +
                                        std::to_string(spec.matrix_count()));
    }
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].size() != spec.fan_out(l) * spec.fan_in(l) ||
            biases[l].size() != spec.fan_out(l)) {
            fail(ErrorCode::Structural,
                 "mask layer " + std::to_string(l) + " does not match function shape");
        }
    }
}

std::vector<std::uint8_t>
ParameterMask::flatten() const {
    std::vector<std::uint8_t> flat;
    flat.reserve(size());
    for (std::size_t l = 0; l < weights.size(); ++l) {
        flat.insert(flat.end(), weights[l].begin(), weights[l].end());
        flat.insert(flat.end(), biases[l].begin(), biases[l].end());
    }
    return flat;
}

ParameterMask
mask_from_key(const StegoKey& key, const FunctionSpec& stego_spec) {
    stego_spec.validate();
    require_key_congruent(key, stego_spec);
    ParameterMask mask = ParameterMask::filled(stego_spec, 1);
    for (std::size_t l = 0; l < stego_spec.matrix_count(); ++l) {
        const std::size_t rows = stego_spec.fan_out(l);
        const std::size_t cols = stego_spec.fan_in(l);
        const auto in_secret = key.secret_indices(l);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!key.is_secret(l + 1, i)) {
                continue;
            }
            mask.biases[l][i] = 0;
            for (std::size_t j : in_secret) {
                mask.weights[l][i * cols + j] = 0;
            }
        }
    }
    return mask;
}

}  // namespace stegainr
