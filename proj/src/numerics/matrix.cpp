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


#include "stegainr/numerics/matrix.hpp"

#include <algorithm>

#include <cmath>
#include <cstring>
#include <string>

#include "stegainr/error.hpp"

namespace stegainr {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        fail(ErrorCode::Structural, "matrix data length " + std::to_string(data_.size()) +
                                        " does not match " + std::to_string(rows_) + "x" +
                                        std::to_string(cols_));
    }
}

Matrix
Matrix::transposed() const {
    // Tiled so both source and destination stay cache-resident.
    constexpr std::size_t kTile = 32;
    Matrix t(cols_, rows_);
    for (std::size_t r0 = 0; r0 < rows_; r0 += kTile) {
        const std::size_t r1 = std::min(rows_, r0 + kTile);
        for (std::size_t c0 = 0; c0 < cols_; c0 += kTile) {
            const std::size_t c1 = std::min(cols_, c0 + kTile);
            for (std::size_t c = c0; c < c1; ++c) {
                for (std::size_t r = r0; r < r1; ++r) {
                    t.data_[c * rows_ + r] = data_[r * cols_ + c];
                }
            }
        }
    }
    return t;
}

bool
Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

bool
bit_identical(std::span<const double> a, std::span<const double> b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

std::string_view
error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Structural:
            return "structural";
        case ErrorCode::Argument:
            return "argument";
        case ErrorCode::Io:
            return "io";
        case ErrorCode::Format:
            return "format";
        case ErrorCode::Checksum:
            return "checksum";
        case ErrorCode::Version:
            return "version";
        case ErrorCode::Truncated:
            return "truncated";
        case ErrorCode::Key:
            return "key";
        case ErrorCode::Divergence:
            return "divergence";
    }
    return "unknown";
}

}  // namespace stegainr
