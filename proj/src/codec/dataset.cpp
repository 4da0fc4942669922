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


#include "stegainr/codec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include "stegainr/error.hpp"
#include "stegainr/log.hpp"
#include "stegainr/model/prng.hpp"

namespace stegainr {

namespace {

WarningSink&
sink() {
    static WarningSink s = [](const std::string& m) { std::cerr << "warning: " << m << "\n"; };
    return s;
}

std::uint8_t
quantize(double f) {
    const double c = std::clamp(f, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

}  // namespace

WarningSink
set_warning_sink(WarningSink s) {
    std::swap(sink(), s);
    return s;
}

void
warn(const std::string& message) {
    if (sink()) {
        sink()(message);
    }
}

void
CoordinateDataset::validate() const {
    if (coords.rows() != features.rows()) {
        fail(ErrorCode::Structural, "dataset has " + std::to_string(coords.rows()) +
                                        " coordinates but " + std::to_string(features.rows()) +
                                        " feature rows");
    }
    for (double v : coords.values()) {
        if (!(v >= -1.0 && v <= 1.0)) {
            fail(ErrorCode::Argument, "dataset coordinate outside [-1, 1]");
        }
    }
    for (double v : features.values()) {
        if (!(v >= 0.0 && v <= 1.0)) {
            fail(ErrorCode::Argument, "dataset feature outside [0, 1]");
        }
    }
}

void
ScalarGrid::fit_range() {
    if (values.empty()) {
        return;
    }
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo = *mn;
    hi = *mx;
}

double
cell_center(std::size_t i, std::size_t n) {
    return static_cast<double>(2 * i + 1) / static_cast<double>(n) - 1.0;
}

Matrix
coordinate_grid(std::size_t width, std::size_t height) {
    Matrix coords(width * height, 2);
    for (std::size_t y = 0; y < height; ++y) {
        const double cy = cell_center(y, height);
        for (std::size_t x = 0; x < width; ++x) {
            coords(y * width + x, 0) = cell_center(x, width);
            coords(y * width + x, 1) = cy;
        }
    }
    return coords;
}

CoordinateDataset
image_to_dataset(const RasterImage& img) {
    if (img.width == 0 || img.height == 0) {
        fail(ErrorCode::Argument, "image is empty");
    }
    if (img.channels != 1 && img.channels != 3) {
        fail(ErrorCode::Argument, "image must have 1 or 3 channels");
    }
    if (img.samples.size() != img.width * img.height * img.channels) {
        fail(ErrorCode::Structural, "image sample count does not match its shape");
    }
    CoordinateDataset ds;
    ds.coords = coordinate_grid(img.width, img.height);
    ds.features = Matrix(img.width * img.height, img.channels);
    for (std::size_t i = 0; i < img.samples.size(); ++i) {
        ds.features.data()[i] = img.samples[i] / 255.0;
    }
    return ds;
}

RasterImage
dataset_to_image(const CoordinateDataset& ds, std::size_t width, std::size_t height) {
    if (ds.size() != width * height) {
        fail(ErrorCode::Structural, "dataset has " + std::to_string(ds.size()) +
                                        " elements, image needs " +
                                        std::to_string(width * height));
    }
    if (ds.feature_dim() != 1 && ds.feature_dim() != 3) {
        fail(ErrorCode::Structural,
             "image needs 1 or 3 features, dataset has " + std::to_string(ds.feature_dim()));
    }
    RasterImage img(width, height, ds.feature_dim());
    for (std::size_t i = 0; i < img.samples.size(); ++i) {
        img.samples[i] = quantize(ds.features.data()[i]);
    }
    return img;
}

CoordinateDataset
grid_to_dataset(const ScalarGrid& grid) {
    if (grid.rows == 0 || grid.cols == 0) {
        fail(ErrorCode::Argument, "grid is empty");
    }
    if (grid.values.size() != grid.rows * grid.cols) {
        fail(ErrorCode::Structural, "grid value count does not match its shape");
    }
    for (double v : grid.values) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::Argument, "grid contains non-finite values");
        }
        if (v < grid.lo || v > grid.hi) {
            fail(ErrorCode::Argument, "grid value outside its stored range");
        }
    }
    CoordinateDataset ds;
    ds.coords = coordinate_grid(grid.cols, grid.rows);
    ds.features = Matrix(grid.rows * grid.cols, 1);
    const double span = grid.hi - grid.lo;
    if (!(span > 0.0)) {
        warn("grid has a degenerate value range; all features set to 0.5");
        for (double& f : ds.features.values()) {
            f = 0.5;
        }
        return ds;
    }
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        ds.features.data()[i] = std::clamp((grid.values[i] - grid.lo) / span, 0.0, 1.0);
    }
    return ds;
}

ScalarGrid
dataset_to_grid(const CoordinateDataset& ds, std::size_t rows, std::size_t cols, double lo,
                double hi) {
    if (ds.size() != rows * cols || ds.feature_dim() != 1) {
        fail(ErrorCode::Structural, "dataset does not describe a " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + " scalar grid");
    }
    ScalarGrid grid;
    grid.rows = rows;
    grid.cols = cols;
    grid.lo = lo;
    grid.hi = hi;
    grid.values.resize(rows * cols);
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        const double f = std::clamp(ds.features.data()[i], 0.0, 1.0);
        grid.values[i] = lo + f * (hi - lo);
    }
    return grid;
}

CoordinateDataset
select(const CoordinateDataset& ds, const std::vector<std::size_t>& rows) {
    CoordinateDataset out;
    out.coords = Matrix(rows.size(), ds.coord_dim());
    out.features = Matrix(rows.size(), ds.feature_dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::copy_n(ds.coords.row(rows[i]).begin(), ds.coord_dim(), out.coords.row(i).begin());
        std::copy_n(ds.features.row(rows[i]).begin(), ds.feature_dim(),
                    out.features.row(i).begin());
    }
    return out;
}

CoordinateDataset
subsample(const CoordinateDataset& ds, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > ds.size()) {
        fail(ErrorCode::Argument, "subsample size " + std::to_string(k) + " outside [1, " +
                                      std::to_string(ds.size()) + "]");
    }
    CounterRng rng(seed);
    return select(ds, sample_without_replacement(ds.size(), k, rng));
}

double
psnr(const RasterImage& a, const RasterImage& b) {
    if (a.width != b.width || a.height != b.height || a.channels != b.channels ||
        a.samples.size() != b.samples.size()) {
        fail(ErrorCode::Argument, "psnr: image shapes differ");
    }
    if (a.samples.empty()) {
        fail(ErrorCode::Argument, "psnr: empty images");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
        sum += d * d;
    }
    if (sum == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double mse = sum / static_cast<double>(a.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace stegainr
