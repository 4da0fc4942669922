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
#include <string>
#include <vector>

#include "stegainr/codec/dataset.hpp"
#include "stegainr/expansion/expansion.hpp"
#include "stegainr/model/model_file.hpp"
#include "stegainr/train/trainer.hpp"

namespace stegainr {

/// One trained model of a pool. Paths are relative to the manifest's
/// directory.
struct PoolItem {
    int label = 0;  // 0 clean, 1 stego
    std::string path;
    std::uint64_t seed = 0;
    std::size_t cover = 0;  // index into the cover list
    bool diverged = false;
    std::uint64_t file_hash = 0;  // FNV-1a 64 of the model file bytes

    friend bool operator==(const PoolItem&, const PoolItem&) = default;
};

struct PoolManifest {
    std::vector<PoolItem> items;

    friend bool operator==(const PoolManifest&, const PoolManifest&) = default;
};

struct PoolOptions {
    TrainConfig train;
    std::size_t workers = 1;
};

/// For item i (cover i mod |covers|) trains a stego function (fresh key and
/// scaffold, masked fit) and a clean function of the same spec (fresh init,
/// unmasked fit) on that cover. Writes stego_NNNN.sinr, stego_NNNN.key and
/// clean_NNNN.sinr under out_dir plus manifest.csv. All seeds derive from
/// `seed` and the item index, so the result does not depend on `workers`.
/// Divergence is recorded per item and the pool continues.
PoolManifest build_pool(const std::vector<RasterImage>& covers, const ModelFile& secret,
                        const ExpansionPlan& plan, std::size_t count, std::uint64_t seed,
                        const std::string& out_dir, const PoolOptions& options);

/// CSV "label,path,seed,cover,status,fnv64".
std::string format_manifest(const PoolManifest& manifest);
PoolManifest parse_manifest(const std::string& text);
void save_manifest(const std::string& path, const PoolManifest& manifest);
PoolManifest load_manifest(const std::string& path);

/// Positions of `count` features for models of `spec`: uniform without
/// replacement, ascending, derived from `seed` and the spec so every model
/// of one spec shares them. Throws ErrorCode::Argument when the spec has
/// fewer than `count` parameters.
std::vector<std::size_t> feature_positions(const FunctionSpec& spec, std::size_t count,
                                           std::uint64_t seed);

/// Labeled CSV, header "label,f0001,...", one row per manifest item in
/// manifest order; values are the stored binary32 parameters printed with
/// round-trip precision. Model paths resolve against `base_dir`.
std::string export_features(const PoolManifest& manifest, const std::string& base_dir,
                            std::size_t count, std::uint64_t seed);

}  // namespace stegainr
