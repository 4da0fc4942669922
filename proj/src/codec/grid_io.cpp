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


#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stegainr/codec/io.hpp"
#include "stegainr/error.hpp"

namespace stegainr {

ScalarGrid
read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::Io, "cannot open grid file '" + path + "'");
    }
    ScalarGrid grid;
    if (!(in >> grid.rows >> grid.cols >> grid.lo >> grid.hi)) {
        fail(ErrorCode::Format, "'" + path + "': expected header 'rows cols min max'");
    }
    if (grid.rows == 0 || grid.cols == 0 || !std::isfinite(grid.lo) || !std::isfinite(grid.hi) ||
        grid.lo > grid.hi) {
        fail(ErrorCode::Format, "'" + path + "': invalid grid header");
    }
    grid.values.resize(grid.rows * grid.cols);
    for (double& v : grid.values) {
        if (!(in >> v)) {
            fail(ErrorCode::Truncated, "'" + path + "': fewer values than rows x cols");
        }
        if (!std::isfinite(v) || v < grid.lo || v > grid.hi) {
            fail(ErrorCode::Format, "'" + path + "': value outside the header range");
        }
    }
    std::string extra;
    if (in >> extra) {
        fail(ErrorCode::Format, "'" + path + "': trailing data after grid values");
    }
    return grid;
}

void
write_grid(const std::string& path, const ScalarGrid& grid) {
    if (grid.values.size() != grid.rows * grid.cols) {
        fail(ErrorCode::Argument, "grid shape does not match its values");
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    std::fprintf(f, "%zu %zu %.17g %.17g\n", grid.rows, grid.cols, grid.lo, grid.hi);
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            std::fprintf(f, c ? " %.17g" : "%.17g", grid.at(r, c));
        }
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) {
        fail(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

}  // namespace stegainr
