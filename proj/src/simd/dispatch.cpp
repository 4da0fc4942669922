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


#include <atomic>

#include "stegainr/simd/kernels.hpp"

namespace stegainr::simd {

namespace {

bool
cpu_has_avx2_fma() {
#if defined(STEGAINR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa
detect() {
    return cpu_has_avx2_fma() ? Isa::Avx2 : Isa::Generic;
}

std::atomic<Isa>&
current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view
isa_name(Isa isa) {
    switch (isa) {
        case Isa::Generic:
            return "generic";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

bool
isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Generic:
            return true;
        case Isa::Avx2:
            return cpu_has_avx2_fma();
    }
    return false;
}

Isa
active_isa() {
    return current().load(std::memory_order_relaxed);
}

bool
force_isa(Isa isa) {
    if (!isa_supported(isa)) {
        return false;
    }
    current().store(isa, std::memory_order_relaxed);
    return true;
}

#if defined(STEGAINR_HAVE_AVX2)
#define STEGAINR_DISPATCH(fn, ...)             \
    do {                                       \
        if (active_isa() == Isa::Avx2) {       \
            return avx2::fn(__VA_ARGS__);      \
        }                                      \
        return generic::fn(__VA_ARGS__);       \
    } while (0)
#else
#define STEGAINR_DISPATCH(fn, ...) return generic::fn(__VA_ARGS__)
#endif

void
gemm_nn(std::size_t m, std::size_t n, std::size_t k, const double* a, std::size_t lda,
        const double* b, std::size_t ldb, double* c, std::size_t ldc) {
    STEGAINR_DISPATCH(gemm_nn, m, n, k, a, lda, b, ldb, c, ldc);
}

void
relu(std::size_t n, const double* x, double* y) {
    STEGAINR_DISPATCH(relu, n, x, y);
}

void
relu_backward(std::size_t n, const double* s, double* g) {
    STEGAINR_DISPATCH(relu_backward, n, s, g);
}

void
masked_update(std::size_t n, double* p, const double* g, const std::uint8_t* mask, double eta) {
    STEGAINR_DISPATCH(masked_update, n, p, g, mask, eta);
}

void
update(std::size_t n, double* p, const double* g, double eta) {
    STEGAINR_DISPATCH(update, n, p, g, eta);
}

void
column_sum(std::size_t rows, std::size_t cols, const double* x, std::size_t ldx, double* acc) {
    STEGAINR_DISPATCH(column_sum, rows, cols, x, ldx, acc);
}

#undef STEGAINR_DISPATCH

}  // namespace stegainr::simd
