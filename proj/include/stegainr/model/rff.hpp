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

#include "stegainr/model/function_spec.hpp"
#include "stegainr/numerics/matrix.hpp"

namespace stegainr {

/// Random Fourier feature matrix B (m x d), entries sigma * N(0, 1).
class RffMatrix {
public:
    /// Regenerates B from the stored seed; bit-identical across calls.
    static RffMatrix generate(const RffConfig& config, std::size_t input_dim);

    explicit RffMatrix(Matrix b) : b_(std::move(b)) {}

    const Matrix& matrix() const { return b_; }
    std::size_t frequencies() const { return b_.rows(); }
    std::size_t input_dim() const { return b_.cols(); }

    /// gamma(x) = (cos(2 pi B x); sin(2 pi B x)) for every row of `coords`
    /// (batch x d). Output is batch x 2m: cosines first, then sines, both in
    /// B's row order.
    Matrix encode(const Matrix& coords) const;

private:
    Matrix b_;
};

/// Raw coordinates -> first-layer inputs for `spec` (RFF-encoded when the
/// spec carries an encoding, otherwise a copy).
Matrix encode_inputs(const FunctionSpec& spec, const Matrix& coords);

}  // namespace stegainr
