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

#include "stegainr/numerics/matrix.hpp"

namespace stegainr {

/// Coordinate/feature pairs {(x_i, y_i)}. Coordinates lie in [-1, 1] per
/// axis, features in [0, 1]. Rows of `coords` and `features` correspond.
struct CoordinateDataset {
    Matrix coords;
    Matrix features;

    std::size_t size() const { return coords.rows(); }
    std::size_t coord_dim() const { return coords.cols(); }
    std::size_t feature_dim() const { return features.cols(); }

    /// Throws ErrorCode::Structural / Argument when the invariants fail.
    void validate() const;
};

/// 8-bit raster, samples interleaved row-major: (y * width + x) * channels + ch.
struct RasterImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 3;  // 1 (gray) or 3 (RGB)
    std::vector<std::uint8_t> samples;

    RasterImage() = default;
    RasterImage(std::size_t w, std::size_t h, std::size_t c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c), samples(w * h * c, fill) {}

    std::uint8_t& at(std::size_t x, std::size_t y, std::size_t ch) {
        return samples[(y * width + x) * channels + ch];
    }
    std::uint8_t at(std::size_t x, std::size_t y, std::size_t ch) const {
        return samples[(y * width + x) * channels + ch];
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

/// Scalar field on a rows x cols grid (e.g. a lat-lon temperature map) with
/// the value range used for normalization.
struct ScalarGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major
    double lo = 0.0;
    double hi = 1.0;

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    /// Range metadata set to the actual min / max of `values`.
    void fit_range();

    friend bool operator==(const ScalarGrid&, const ScalarGrid&) = default;
};

/// Center of cell i out of n, mapped affinely to [-1, 1]: (2i + 1) / n - 1.
double cell_center(std::size_t i, std::size_t n);

/// (x, y) cell centers for a width x height lattice, x fastest.
Matrix coordinate_grid(std::size_t width, std::size_t height);

CoordinateDataset image_to_dataset(const RasterImage& img);
/// Inverse rasterization: features * 255, rounded and clamped.
RasterImage dataset_to_image(const CoordinateDataset& ds, std::size_t width, std::size_t height);

/// Features are (v - lo) / (hi - lo) from the grid's stored range. A
/// degenerate range (lo == hi) gives 0.5 everywhere and emits a warning.
CoordinateDataset grid_to_dataset(const ScalarGrid& grid);
ScalarGrid dataset_to_grid(const CoordinateDataset& ds, std::size_t rows, std::size_t cols,
                           double lo, double hi);

/// k elements drawn uniformly without replacement (seeded). 1 <= k <= n.
CoordinateDataset subsample(const CoordinateDataset& ds, std::size_t k, std::uint64_t seed);

/// Subset given by explicit row indices.
CoordinateDataset select(const CoordinateDataset& ds, const std::vector<std::size_t>& rows);

/// 10 log10(255^2 / MSE) over all samples; +infinity when MSE = 0.
/// Throws ErrorCode::Argument on shape mismatch.
double psnr(const RasterImage& a, const RasterImage& b);

}  // namespace stegainr
