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

#include "stegainr/simd/kernels.hpp"

namespace stegainr::simd::generic {

void
gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
        const double* b, std::size_t ldb, double* c, std::size_t ldc) {
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * ldc;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a[i * lda + p];
            const double* brow = b + p * ldb;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] = std::fma(aip, brow[j], crow[j]);
            }
        }
    }
}

void
relu(std::size_t n, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] > 0.0 ? x[i] : 0.0;
    }
}

void
relu_backward(std::size_t n, const double* s, double* g) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(s[i] > 0.0)) {
            g[i] = 0.0;
        }
    }
}

void
masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta) {
    for (std::size_t i = 0; i < n; ++i) {
        if (mask[i] != 0) {
            const double step = eta * g[i];
            p[i] = p[i] - step;
        }
    }
}

void
update(std::size_t n, double* p, const double* g, double eta) {
    for (std::size_t i = 0; i < n; ++i) {
        const double step = eta * g[i];
        p[i] = p[i] - step;
    }
}

void
column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = x + r * ldx;
        for (std::size_t j = 0; j < cols; ++j) {
            acc[j] = acc[j] + row[j];
        }
    }
}

}  // namespace stegainr::simd::generic
