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

#include "stegainr/codec/dataset.hpp"
#include "stegainr/model/model_file.hpp"
#include "stegainr/model/stego_key.hpp"
#include "stegainr/train/trainer.hpp"

namespace stegainr {

struct HideResult {
    ModelFile stego;
    TrainReport report;
};

/// Embeds the hidden function at the key's positions and fits the rest of
/// the stego function to the cover with masked descent. The cover's feature
/// arity must equal the stego output width. Parameters are stored as
/// binary32; hidden parameters are already binary32 and stay bit-exact.
HideResult hide(const ModelFile& secret, const StegoKey& key, const CoordinateDataset& cover,
                const SignalInfo& cover_signal, const TrainConfig& cfg, std::uint64_t init_seed);

}  // namespace stegainr
