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

#include "stegainr/codec/dataset.hpp"

// Procedural stand-ins for photographs and reanalysis fields, so demos and
// tests run without external data. All generators are deterministic in
// their arguments.

namespace stegainr {

/// Smooth RGB portrait. The seed perturbs colors and feature placement.
RasterImage synthetic_face(std::size_t width, std::size_t height, std::uint64_t seed);

/// RGB scene of soft overlapping blobs; distinct per seed.
RasterImage synthetic_scene(std::size_t width, std::size_t height, std::uint64_t seed);

/// Surface-temperature-like field in kelvin on a lat-lon grid, warm at the
/// equator and cold at the poles. Range set by fit_range.
ScalarGrid synthetic_climate(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace stegainr
