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


#include "stegainr/expansion/hide.hpp"

#include <string>

#include "stegainr/error.hpp"
#include "stegainr/expansion/expansion.hpp"

namespace stegainr {

HideResult
hide(const ModelFile& secret, const StegoKey& key, const CoordinateDataset& cover,
     const SignalInfo& cover_signal, const TrainConfig& cfg, std::uint64_t init_seed) {
    cfg.validate();
    cover.validate();
    Scaffold sc = embed(secret, key, init_seed);
    if (cover.coord_dim() != sc.spec.input_dim()) {
        fail(ErrorCode::Argument, "cover has " + std::to_string(cover.coord_dim()) +
                                      "-D coordinates, stego function takes " +
                                      std::to_string(sc.spec.input_dim()));
    }
    if (cover.feature_dim() != sc.spec.output_dim()) {
        fail(ErrorCode::Argument, "cover has " + std::to_string(cover.feature_dim()) +
                                      " features per sample, stego function outputs " +
                                      std::to_string(sc.spec.output_dim()));
    }
    FitResult fr = fit_masked(sc.spec, sc.params, sc.mask, cover, cfg);
    HideResult out;
    out.stego.role = ModelRole::Stego;
    out.stego.spec = sc.spec;
    out.stego.signal = cover_signal;
    out.stego.params = std::move(fr.params);
    out.stego.params.round_to_f32();
    out.report = std::move(fr.report);
    return out;
}

}  // namespace stegainr
