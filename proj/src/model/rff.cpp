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


#include "stegainr/model/rff.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stegainr/error.hpp"
#include "stegainr/model/prng.hpp"

namespace stegainr {

RffMatrix
RffMatrix::generate(const RffConfig& config, std::size_t input_dim) {
    Matrix b(config.frequencies, input_dim);
    CounterRng rng(config.seed);
    for (double& v : b.values()) {
        v = config.sigma * rng.normal();
    }
    return RffMatrix(std::move(b));
}

Matrix
RffMatrix::encode(const Matrix& coords) const {
    if (coords.cols() != input_dim()) {
        fail(ErrorCode::Structural, "RFF encode: coordinates have dimension " +
                                        std::to_string(coords.cols()) + ", B expects " +
                                        std::to_string(input_dim()));
    }
    const std::size_t m = frequencies();
    Matrix out(coords.rows(), 2 * m);
    for (std::size_t i = 0; i < coords.rows(); ++i) {
        const auto x = coords.row(i);
        auto y = out.row(i);
        for (std::size_t f = 0; f < m; ++f) {
            double dot = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                dot += b_(f, j) * x[j];
            }
            const double angle = 2.0 * std::numbers::pi * dot;
            y[f] = std::cos(angle);
            y[m + f] = std::sin(angle);
        }
    }
    return out;
}

Matrix
encode_inputs(const FunctionSpec& spec, const Matrix& coords) {
    if (coords.cols() != spec.input_dim()) {
        fail(ErrorCode::Structural, "inputs have dimension " + std::to_string(coords.cols()) +
                                        ", function " + describe(spec) + " expects " +
                                        std::to_string(spec.input_dim()));
    }
    if (!spec.rff) {
        return coords;
    }
    return RffMatrix::generate(*spec.rff, spec.input_dim()).encode(coords);
}

}  // namespace stegainr
