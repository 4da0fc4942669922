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
#include <string_view>

// Data-parallel inner loops used by the MLP passes and the optimizer.
//
// Every kernel exists as a portable reference (namespace generic) and, on
// x86-64, as an AVX2+FMA variant (namespace avx2). The variant is chosen once
// at runtime. All variants produce bit-identical results: each output element
// is accumulated in the same order with explicit fused multiply-adds, so
// switching ISA never changes a trained model.

namespace stegainr::simd {

enum class Isa : std::uint8_t { Generic, Avx2 };

std::string_view isa_name(Isa isa);

/// True when the running CPU (and this build) can execute `isa`.
bool isa_supported(Isa isa);

/// ISA used by the dispatching entry points below.
Isa active_isa();

/// Overrides the automatic choice; used by the equivalence tests and the
/// benchmark. Returns false (and changes nothing) if `isa` is unsupported.
bool force_isa(Isa isa);

/// RAII override of the active ISA for a scope.
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa) : previous_(active_isa()) { ok_ = force_isa(isa); }
    ~ScopedIsa() { force_isa(previous_); }
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;
    bool ok() const { return ok_; }

private:
    Isa previous_;
    bool ok_ = false;
};

// C[m x n] += A[m x k] * B[k x n], all row-major with explicit leading
// dimensions. For every (i, j) the k-terms are folded in ascending k with
// fma(a[i][k], b[k][j], acc).
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
             const double* b, std::size_t ldb, double* c, std::size_t ldc);

// y[i] = x[i] > 0 ? x[i] : 0. NaN maps to 0.
void relu(std::size_t n, const double* x, double* y);

// g[i] = s[i] > 0 ? g[i] : 0  (derivative at exactly 0 is 0).
void relu_backward(std::size_t n, const double* s, double* g);

// p[i] = mask[i] ? p[i] - eta * g[i] : p[i]. Frozen entries are never
// written through arithmetic, so their bit pattern (including -0.0) survives.
void masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta);

// p[i] = p[i] - eta * g[i].
void update(std::size_t n, double* p, const double* g, double eta);

// acc[j] += sum over rows r of x[r][j], rows folded in ascending order.
void column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc);

namespace generic {
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
             const double* b, std::size_t ldb, double* c, std::size_t ldc);
void relu(std::size_t n, const double* x, double* y);
void relu_backward(std::size_t n, const double* s, double* g);
void masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta);
void update(std::size_t n, double* p, const double* g, double eta);
void column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc);
}  // namespace generic

namespace avx2 {
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
             const double* b, std::size_t ldb, double* c, std::size_t ldc);
void relu(std::size_t n, const double* x, double* y);
void relu_backward(std::size_t n, const double* s, double* g);
void masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta);
void update(std::size_t n, double* p, const double* g, double eta);
void column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc);
}  // namespace avx2

}  // namespace stegainr::simd
