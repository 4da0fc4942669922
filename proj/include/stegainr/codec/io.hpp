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

#include <string>

#include "stegainr/codec/dataset.hpp"

namespace stegainr {

/// 8-bit PNG in gray or RGB. Other layouts are converted on read.
RasterImage read_png(const std::string& path);
void write_png(const std::string& path, const RasterImage& img);

/// Text grid: header line "rows cols min max", then rows lines of cols
/// values (row-major), written with 17 significant digits.
ScalarGrid read_grid(const std::string& path);
void write_grid(const std::string& path, const ScalarGrid& grid);

}  // namespace stegainr
