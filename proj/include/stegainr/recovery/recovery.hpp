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

#include "stegainr/codec/render.hpp"
#include "stegainr/model/model_file.hpp"
#include "stegainr/model/stego_key.hpp"

namespace stegainr {

/// Structure of the hidden function: layer widths are the per-layer secret
/// neuron counts of the key (shared-I/O convention applied), activation and
/// RFF encoding are inherited from the stego function.
FunctionSpec recovered_spec(const FunctionSpec& stego_spec, const StegoKey& key);

/// Gathers W^l[i][j] for secret neurons i of layer l + 1 and j of layer l,
/// and b^l[i], in ascending key-bit order. Reads nothing else.
ParameterSet gather_secret_params(const FunctionSpec& stego_spec, const ParameterSet& stego_params,
                                  const StegoKey& key);

/// Extracts the hidden function. Role "secret"; signal info taken from the
/// key's message line when present, otherwise from the stego model.
ModelFile recover(const ModelFile& stego, const StegoKey& key);

/// Fraction of differing bits between the binary32 representations of two
/// congruent models' parameters. Throws ErrorCode::Argument if the specs
/// differ.
double ber(const ModelFile& a, const ModelFile& b);

/// Samples the recovered function back into its message.
Rendered extract_message(const ModelFile& secret, std::size_t width, std::size_t height);

}  // namespace stegainr
