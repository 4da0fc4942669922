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


#include "stegainr/codec/render.hpp"

#include <algorithm>
#include <string>

#include "stegainr/error.hpp"
#include "stegainr/model/rff.hpp"
#include "stegainr/numerics/mlp.hpp"

namespace stegainr {

namespace {

constexpr std::size_t kChunkRows = 4096;

void
require_planar(const FunctionSpec& spec) {
    spec.validate();
    if (spec.input_dim() != 2) {
        fail(ErrorCode::Structural, "rendering needs a 2-D coordinate input, function " +
                                        describe(spec) + " takes " +
                                        std::to_string(spec.input_dim()));
    }
}

}  // namespace

Matrix
evaluate(const FunctionSpec& spec, const ParameterSet& params, const Matrix& coords) {
    params.require_congruent(spec);
    if (coords.cols() != spec.input_dim()) {
        fail(ErrorCode::Structural, "coordinates have dimension " + std::to_string(coords.cols()) +
                                        ", function expects " + std::to_string(spec.input_dim()));
    }
    Matrix out(coords.rows(), spec.output_dim());
    for (std::size_t start = 0; start < coords.rows(); start += kChunkRows) {
        const std::size_t n = std::min(kChunkRows, coords.rows() - start);
        Matrix chunk(n, coords.cols());
        std::copy_n(coords.row(start).begin(), n * coords.cols(), chunk.data());
        const Matrix y = predict(spec, params, encode_inputs(spec, chunk));
        std::copy_n(y.data(), y.size(), out.row(start).begin());
    }
    return out;
}

RasterImage
render_image(const FunctionSpec& spec, const ParameterSet& params, std::size_t width,
             std::size_t height) {
    require_planar(spec);
    if (spec.output_dim() != 1 && spec.output_dim() != 3) {
        fail(ErrorCode::Structural, "image rendering needs 1 or 3 outputs, function has " +
                                        std::to_string(spec.output_dim()));
    }
    if (width == 0 || height == 0) {
        fail(ErrorCode::Argument, "render shape must be non-empty");
    }
    CoordinateDataset ds;
    ds.coords = coordinate_grid(width, height);
    ds.features = evaluate(spec, params, ds.coords);
    return dataset_to_image(ds, width, height);
}

ScalarGrid
render_grid(const FunctionSpec& spec, const ParameterSet& params, std::size_t rows,
            std::size_t cols, double lo, double hi) {
    require_planar(spec);
    if (spec.output_dim() != 1) {
        fail(ErrorCode::Structural, "grid rendering needs 1 output, function has " +
                                        std::to_string(spec.output_dim()));
    }
    if (rows == 0 || cols == 0) {
        fail(ErrorCode::Argument, "render shape must be non-empty");
    }
    CoordinateDataset ds;
    ds.coords = coordinate_grid(cols, rows);
    ds.features = evaluate(spec, params, ds.coords);
    return dataset_to_grid(ds, rows, cols, lo, hi);
}

Rendered
render(const ModelFile& model, std::size_t width, std::size_t height) {
    if (model.signal.kind == SignalInfo::Kind::Grid) {
        return render_grid(model.spec, model.params, height, width, model.signal.lo,
                           model.signal.hi);
    }
    return render_image(model.spec, model.params, width, height);
}

}  // namespace stegainr
