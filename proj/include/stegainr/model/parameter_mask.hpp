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
#include <vector>

#include "stegainr/model/function_spec.hpp"
#include "stegainr/model/stego_key.hpp"

namespace stegainr {

/// Update mask v^k: 1 = trainable (expanded parameter), 0 = frozen (belongs
/// to the hidden function). Same layout as ParameterSet.
struct ParameterMask {
    std::vector<std::vector<std::uint8_t>> weights;  // row-major per matrix
    std::vector<std::vector<std::uint8_t>> biases;

    static ParameterMask filled(const FunctionSpec& spec, std::uint8_t value);

    std::size_t size() const;
    std::size_t frozen_count() const;
    std::size_t trainable_count() const { return size() - frozen_count(); }
    bool congruent_with(const FunctionSpec& spec) const;
    void require_congruent(const FunctionSpec& spec) const;

    /// Canonical flat order (W^0, b^0, W^1, ...), matching ParameterSet.
    std::vector<std::uint8_t> flatten() const;

    friend bool operator==(const ParameterMask&, const ParameterMask&) = default;
};

/// Weight (i, j) of matrix l is frozen iff neuron i of layer l + 1 and
/// neuron j of layer l are both secret; bias i of matrix l is frozen iff
/// neuron i of layer l + 1 is secret.
ParameterMask mask_from_key(const StegoKey& key, const FunctionSpec& stego_spec);

}  // namespace stegainr
