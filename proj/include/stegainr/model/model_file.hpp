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
#include <span>
#include <string>
#include <vector>

#include "stegainr/model/function_spec.hpp"
#include "stegainr/model/stego_key.hpp"

namespace stegainr {

enum class ModelRole : std::uint8_t { Plain = 0, Secret = 1, Stego = 2 };

std::string role_name(ModelRole role);

/// A function plus the metadata needed to sample it.
struct ModelFile {
    ModelRole role = ModelRole::Plain;
    FunctionSpec spec;
    SignalInfo signal;
    ParameterSet params;

    friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

// Binary layout, all integers little-endian:
//
//   "SINR"                      magic
//   u16  version                (kModelFormatVersion)
//   u8   role
//   u8   prng id                (1 = counter SplitMix64, used for RFF)
//   u8   activation
//   u32  layer count, u32 x layer count widths
//   u8   has_rff [u32 m, f64 sigma, u64 seed]
//   u8   signal kind, f64 lo, f64 hi
//   u64  parameter count N
//   f32  x N                    parameters, canonical flat order
//   u64  FNV-1a 64 over every preceding byte
//
// Parameters are stored as binary32; in-memory doubles are rounded on save.
inline constexpr std::uint16_t kModelFormatVersion = 1;
inline constexpr std::uint8_t kPrngCounterSplitMix64 = 1;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_model(const ModelFile& model);
/// Throws Format (bad magic, bad fields), Version, Truncated or Checksum.
ModelFile decode_model(std::span<const std::uint8_t> bytes);

void save_model(const std::string& path, const ModelFile& model);
ModelFile load_model(const std::string& path);

/// Every parameter's binary32 bit pattern, canonical order.
std::vector<std::uint32_t> stored_bits(const ParameterSet& params);

}  // namespace stegainr
