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
#include <variant>

#include "stegainr/codec/dataset.hpp"
#include "stegainr/model/function_spec.hpp"
#include "stegainr/model/model_file.hpp"

namespace stegainr {

/// f(coords) for raw coordinates (RFF applied internally), evaluated in
/// fixed-size row chunks. Per-row results do not depend on the chunking.
Matrix evaluate(const FunctionSpec& spec, const ParameterSet& params, const Matrix& coords);

/// Samples the function on the cell centers of a width x height lattice and
/// quantizes clamp(f, 0, 1) to 8 bits. Output arity must be 1 or 3.
RasterImage render_image(const FunctionSpec& spec, const ParameterSet& params, std::size_t width,
                         std::size_t height);

/// Same lattice; features are clamped then mapped back through [lo, hi].
ScalarGrid render_grid(const FunctionSpec& spec, const ParameterSet& params, std::size_t rows,
                       std::size_t cols, double lo, double hi);

using Rendered = std::variant<RasterImage, ScalarGrid>;

/// Renders according to the model's signal info. For grids, width is the
/// column count and height the row count.
Rendered render(const ModelFile& model, std::size_t width, std::size_t height);

}  // namespace stegainr
