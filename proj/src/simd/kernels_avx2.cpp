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


#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "stegainr/simd/kernels.hpp"

namespace stegainr::simd::avx2 {

namespace {

// Register tile: 6 rows of C by two ymm (8 doubles) = 12 accumulators.
constexpr std::size_t kMr = 6;
constexpr std::size_t kNr = 8;
// Cache blocking: an A block (kMc x kKc) stays in L2, a B panel (kKc x kNr)
// in L1.
constexpr std::size_t kKc = 256;
constexpr std::size_t kMc = 96;
constexpr std::size_t kNc = 2048;

void
pack_b(std::size_t kc, std::size_t nc, const double* b, std::size_t ldb, double* out) {
    for (std::size_t j = 0; j < nc; j += kNr) {
        const std::size_t nr = std::min(kNr, nc - j);
        for (std::size_t p = 0; p < kc; ++p) {
            const double* src = b + p * ldb + j;
            std::size_t jj = 0;
            for (; jj < nr; ++jj) {
                out[jj] = src[jj];
            }
            for (; jj < kNr; ++jj) {
                out[jj] = 0.0;
            }
            out += kNr;
        }
    }
}

void
pack_a(std::size_t mc, std::size_t kc, const double* a, std::size_t lda, double* out) {
    for (std::size_t i = 0; i < mc; i += kMr) {
        const std::size_t mr = std::min(kMr, mc - i);
        for (std::size_t p = 0; p < kc; ++p) {
            std::size_t ii = 0;
            for (; ii < mr; ++ii) {
                out[ii] = a[(i + ii) * lda + p];
            }
            for (; ii < kMr; ++ii) {
                out[ii] = 0.0;
            }
            out += kMr;
        }
    }
}

// c (kMr x kNr, row stride ldc) += ap * bp over kc steps.
inline void
micro_kernel(std::size_t kc, const double* ap, const double* bp, double* c, std::size_t ldc) {
    __m256d c00 = _mm256_loadu_pd(c + 0 * ldc), c01 = _mm256_loadu_pd(c + 0 * ldc + 4);
    __m256d c10 = _mm256_loadu_pd(c + 1 * ldc), c11 = _mm256_loadu_pd(c + 1 * ldc + 4);
    __m256d c20 = _mm256_loadu_pd(c + 2 * ldc), c21 = _mm256_loadu_pd(c + 2 * ldc + 4);
    __m256d c30 = _mm256_loadu_pd(c + 3 * ldc), c31 = _mm256_loadu_pd(c + 3 * ldc + 4);
    __m256d c40 = _mm256_loadu_pd(c + 4 * ldc), c41 = _mm256_loadu_pd(c + 4 * ldc + 4);
    __m256d c50 = _mm256_loadu_pd(c + 5 * ldc), c51 = _mm256_loadu_pd(c + 5 * ldc + 4);

    for (std::size_t p = 0; p < kc; ++p) {
        const __m256d b0 = _mm256_loadu_pd(bp);
        const __m256d b1 = _mm256_loadu_pd(bp + 4);
        __m256d a;

        a = _mm256_broadcast_sd(ap + 0);
        c00 = _mm256_fmadd_pd(a, b0, c00);
        c01 = _mm256_fmadd_pd(a, b1, c01);
        a = _mm256_broadcast_sd(ap + 1);
        c10 = _mm256_fmadd_pd(a, b0, c10);
        c11 = _mm256_fmadd_pd(a, b1, c11);
        a = _mm256_broadcast_sd(ap + 2);
        c20 = _mm256_fmadd_pd(a, b0, c20);
        c21 = _mm256_fmadd_pd(a, b1, c21);
        a = _mm256_broadcast_sd(ap + 3);
        c30 = _mm256_fmadd_pd(a, b0, c30);
        c31 = _mm256_fmadd_pd(a, b1, c31);
        a = _mm256_broadcast_sd(ap + 4);
        c40 = _mm256_fmadd_pd(a, b0, c40);
        c41 = _mm256_fmadd_pd(a, b1, c41);
        a = _mm256_broadcast_sd(ap + 5);
        c50 = _mm256_fmadd_pd(a, b0, c50);
        c51 = _mm256_fmadd_pd(a, b1, c51);

        ap += kMr;
        bp += kNr;
    }

    _mm256_storeu_pd(c + 0 * ldc, c00), _mm256_storeu_pd(c + 0 * ldc + 4, c01);
    _mm256_storeu_pd(c + 1 * ldc, c10), _mm256_storeu_pd(c + 1 * ldc + 4, c11);
    _mm256_storeu_pd(c + 2 * ldc, c20), _mm256_storeu_pd(c + 2 * ldc + 4, c21);
    _mm256_storeu_pd(c + 3 * ldc, c30), _mm256_storeu_pd(c + 3 * ldc + 4, c31);
    _mm256_storeu_pd(c + 4 * ldc, c40), _mm256_storeu_pd(c + 4 * ldc + 4, c41);
    _mm256_storeu_pd(c + 5 * ldc, c50), _mm256_storeu_pd(c + 5 * ldc + 4, c51);
}

struct PackBuffers {
    std::vector<double> a;
    std::vector<double> b;
};

PackBuffers&
pack_buffers() {
    thread_local PackBuffers buffers;
    return buffers;
}

}  // namespace

void
gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
        const double* b, std::size_t ldb, double* c, std::size_t ldc) {
    if (m == 0 || n == 0 || k == 0) {
        return;
    }
    auto& buf = pack_buffers();
    buf.a.resize(kMc * kKc);
    buf.b.resize(kKc * (kNc + kNr));

    alignas(32) double edge[kMr * kNr];

    for (std::size_t jc = 0; jc < n; jc += kNc) {
        const std::size_t nc = std::min(kNc, n - jc);
        // Ascending pc keeps every (i, j) accumulation in ascending k.
        for (std::size_t pc = 0; pc < k; pc += kKc) {
            const std::size_t kc = std::min(kKc, k - pc);
            pack_b(kc, nc, b + pc * ldb + jc, ldb, buf.b.data());
            for (std::size_t ic = 0; ic < m; ic += kMc) {
                const std::size_t mc = std::min(kMc, m - ic);
                pack_a(mc, kc, a + ic * lda + pc, lda, buf.a.data());
                for (std::size_t jr = 0; jr < nc; jr += kNr) {
                    const std::size_t nr = std::min(kNr, nc - jr);
                    const double* bp = buf.b.data() + (jr / kNr) * kc * kNr;
                    for (std::size_t ir = 0; ir < mc; ir += kMr) {
                        const std::size_t mr = std::min(kMr, mc - ir);
                        const double* ap = buf.a.data() + (ir / kMr) * kc * kMr;
                        double* ct = c + (ic + ir) * ldc + jc + jr;
                        if (mr == kMr && nr == kNr) {
                            micro_kernel(kc, ap, bp, ct, ldc);
                            continue;
                        }
                        // Partial tile: padded lanes see zero operands and are
                        // discarded; valid lanes follow the same fma chain.
                        std::fill(std::begin(edge), std::end(edge), 0.0);
                        for (std::size_t r = 0; r < mr; ++r) {
                            std::memcpy(edge + r * kNr, ct + r * ldc, nr * sizeof(double));
                        }
                        micro_kernel(kc, ap, bp, edge, kNr);
                        for (std::size_t r = 0; r < mr; ++r) {
                            std::memcpy(ct + r * ldc, edge + r * kNr, nr * sizeof(double));
                        }
                    }
                }
            }
        }
    }
}

void
relu(std::size_t n, const double* x, double* y) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d keep = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
        _mm256_storeu_pd(y + i, _mm256_and_pd(keep, v));
    }
    for (; i < n; ++i) {
        y[i] = x[i] > 0.0 ? x[i] : 0.0;
    }
}

void
relu_backward(std::size_t n, const double* s, double* g) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d keep = _mm256_cmp_pd(_mm256_loadu_pd(s + i), zero, _CMP_GT_OQ);
        _mm256_storeu_pd(g + i, _mm256_and_pd(keep, _mm256_loadu_pd(g + i)));
    }
    for (; i < n; ++i) {
        if (!(s[i] > 0.0)) {
            g[i] = 0.0;
        }
    }
}

void
masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta) {
    const __m256d veta = _mm256_set1_pd(eta);
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::int32_t packed;
        std::memcpy(&packed, mask + i, sizeof(packed));
        const __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
        const __m256d sel = _mm256_castsi256_pd(_mm256_cmpgt_epi64(wide, zero));
        const __m256d old = _mm256_loadu_pd(p + i);
        const __m256d next = _mm256_sub_pd(old, _mm256_mul_pd(veta, _mm256_loadu_pd(g + i)));
        _mm256_storeu_pd(p + i, _mm256_blendv_pd(old, next, sel));
    }
    for (; i < n; ++i) {
        if (mask[i] != 0) {
            const double step = eta * g[i];
            p[i] = p[i] - step;
        }
    }
}

void
update(std::size_t n, double* p, const double* g, double eta) {
    const __m256d veta = _mm256_set1_pd(eta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d step = _mm256_mul_pd(veta, _mm256_loadu_pd(g + i));
        _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
    }
    for (; i < n; ++i) {
        const double step = eta * g[i];
        p[i] = p[i] - step;
    }
}

void
column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = x + r * ldx;
        std::size_t j = 0;
        for (; j + 4 <= cols; j += 4) {
            _mm256_storeu_pd(acc + j, _mm256_add_pd(_mm256_loadu_pd(acc + j), _mm256_loadu_pd(row + j)));
        }
        for (; j < cols; ++j) {
            acc[j] = acc[j] + row[j];
        }
    }
}

}  // namespace stegainr::simd::avx2
