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
#include "stegainr/model/model_file.hpp"
#include "stegainr/model/parameter_mask.hpp"
#include "stegainr/model/stego_key.hpp"

namespace stegainr {

/// Target structure of a stego function. `stego_widths` is the full width
/// list [n_in, hidden..., n_out] with unencoded input width; activation and
/// RFF encoding are inherited from the hidden function.
///
/// Vertical: same depth, every hidden layer at least as wide as the secret's.
/// Horizontal: the secret's widths form an exact prefix; the secret output
/// becomes a hidden layer followed by at least one new layer.
/// Mixed: deeper than the secret; layers 1..L_s-1 (the former output
/// included) are at least as wide as the secret's.
struct ExpansionPlan {
    Strategy strategy = Strategy::Vertical;
    std::vector<std::size_t> stego_widths;
    std::uint64_t placement_seed = 0;
};

/// Throws ErrorCode::Structural naming the violated rule.
void validate_plan(const FunctionSpec& secret, const ExpansionPlan& plan);

FunctionSpec stego_spec(const FunctionSpec& secret, const ExpansionPlan& plan);

/// Chooses secret neuron positions. Each carrying layer draws its positions
/// uniformly without replacement from a stream derived from the placement
/// seed; the i-th secret neuron goes to the i-th smallest position. Input
/// (and, for vertical, output) layers are implicit and written all-zero.
StegoKey keygen(const FunctionSpec& secret, const ExpansionPlan& plan);

/// Stego function before masked training: hidden parameters scattered to
/// their key positions, everything else freshly initialized.
struct Scaffold {
    FunctionSpec spec;
    ParameterSet params;
    ParameterMask mask;
};

/// Builds the scaffold and verifies that recovery from it reproduces the
/// secret parameters bit-exactly. Throws ErrorCode::Key when the key's
/// secret widths do not match the secret function.
Scaffold embed(const ModelFile& secret, const StegoKey& key, std::uint64_t init_seed);

/// Stego structure implied by a key: bit counts give the widths, with the
/// input dimension restored from the secret when RFF is used.
ExpansionPlan plan_from_key(const FunctionSpec& secret, const StegoKey& key);

/// e = |stego parameters| / |secret parameters|.
double expansion_rate(const FunctionSpec& secret, const FunctionSpec& stego);

}  // namespace stegainr
