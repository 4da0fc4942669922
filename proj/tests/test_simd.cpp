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
#include <cstring>
#include <limits>
#include <vector>

#include "stegainr/simd/kernels.hpp"
#include "support.hpp"

using namespace stegainr;

namespace {

std::vector<double>
randv(std::size_t n, std::uint64_t seed) {
    std::vector<double> v(n);
    CounterRng rng(seed);
    for (double& x : v) x = rng.uniform(-2.0, 2.0);
    return v;
}

bool
same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool
have_avx2() {
    return simd::isa_supported(simd::Isa::Avx2);
}

}  // namespace

TEST_CASE("generic gemm matches a naive fma oracle") {
    const std::size_t m = 7, n = 5, k = 9;
    const auto a = randv(m * k, 1), b = randv(k * n, 2), c0 = randv(m * n, 3);
    auto c = c0;
    simd::generic::gemm_nn(m, n, k, a.data(), k, b.data(), n, c.data(), n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = c0[i * n + j];
            for (std::size_t p = 0; p < k; ++p) acc = std::fma(a[i * k + p], b[p * n + j], acc);
            CHECK(acc == c[i * n + j]);
        }
    }
}

TEST_CASE("gemm respects leading dimensions") {
    // 2x2 result written into the middle of a 3x4 buffer.
    const std::vector<double> a = {1, 2, 0, 3, 4, 0};  // 2x2 with lda 3
    const std::vector<double> b = {5, 6, 9, 7, 8, 9};  // 2x2 with ldb 3
    std::vector<double> c(12, 0.0);
    simd::gemm_nn(2, 2, 2, a.data(), 3, b.data(), 3, c.data() + 1, 4);
    CHECK(c[1] == 19);
    CHECK(c[2] == 22);
    CHECK(c[5] == 43);
    CHECK(c[6] == 50);
    CHECK(c[0] == 0);
    CHECK(c[3] == 0);
}

TEST_CASE("avx2 kernels are bit-identical to the generic reference") {
    if (!have_avx2()) {
        MESSAGE("AVX2 not available; skipped");
        return;
    }
    const std::size_t shapes[][3] = {{1, 1, 1},     {6, 8, 4},    {7, 9, 3},     {13, 17, 300},
                                     {97, 31, 257}, {5, 2049, 3}, {100, 100, 1}, {3, 64, 600}};
    std::uint64_t seed = 10;
    for (const auto& s : shapes) {
        const std::size_t m = s[0], n = s[1], k = s[2];
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        const auto a = randv(m * k, ++seed), b = randv(k * n, ++seed), c0 = randv(m * n, ++seed);
        auto cg = c0, cv = c0;
        simd::generic::gemm_nn(m, n, k, a.data(), k, b.data(), n, cg.data(), n);
        simd::avx2::gemm_nn(m, n, k, a.data(), k, b.data(), n, cv.data(), n);
        CHECK(same_bits(cg, cv));
    }

    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
        CAPTURE(n);
        auto x = randv(n, 100 + n);
        if (n > 2) {
            x[0] = -0.0;
            x[1] = std::numeric_limits<double>::quiet_NaN();
            x[2] = 0.0;
        }
        std::vector<double> yg(n), yv(n);
        simd::generic::relu(n, x.data(), yg.data());
        simd::avx2::relu(n, x.data(), yv.data());
        CHECK(same_bits(yg, yv));

        auto gg = randv(n, 200 + n), gv = gg;
        simd::generic::relu_backward(n, x.data(), gg.data());
        simd::avx2::relu_backward(n, x.data(), gv.data());
        CHECK(same_bits(gg, gv));

        std::vector<std::uint8_t> mask(n);
        CounterRng rng(300 + n);
        for (auto& m : mask) m = static_cast<std::uint8_t>(rng.below(2));
        auto pg = randv(n, 400 + n);
        if (n > 0) pg[0] = -0.0;
        auto pv = pg, qg = pg, qv = pg;
        const auto g = randv(n, 500 + n);
        simd::generic::masked_update(n, pg.data(), g.data(), mask.data(), 1e-3);
        simd::avx2::masked_update(n, pv.data(), g.data(), mask.data(), 1e-3);
        CHECK(same_bits(pg, pv));
        simd::generic::update(n, qg.data(), g.data(), 1e-3);
        simd::avx2::update(n, qv.data(), g.data(), 1e-3);
        CHECK(same_bits(qg, qv));
    }

    for (std::size_t rows : {1u, 7u, 64u}) {
        for (std::size_t cols : {1u, 3u, 4u, 9u, 130u}) {
            const auto x = randv(rows * cols, rows * 1000 + cols);
            auto ag = randv(cols, 7), av = ag;
            simd::generic::column_sum(rows, cols, x.data(), cols, ag.data());
            simd::avx2::column_sum(rows, cols, x.data(), cols, av.data());
            CHECK(same_bits(ag, av));
        }
    }
}

TEST_CASE("relu semantics") {
    const std::vector<double> x = {-1.0, -0.0, 0.0, 2.5, std::numeric_limits<double>::quiet_NaN()};
    std::vector<double> y(x.size());
    simd::relu(x.size(), x.data(), y.data());
    CHECK(y[0] == 0.0);
    CHECK(y[2] == 0.0);
    CHECK(y[3] == 2.5);
    CHECK(y[4] == 0.0);
    std::vector<double> g(x.size(), 1.0);
    simd::relu_backward(x.size(), x.data(), g.data());
    CHECK(g == std::vector<double>{0.0, 0.0, 0.0, 1.0, 0.0});
}

TEST_CASE("masked update never rewrites frozen entries") {
    std::vector<double> p = {-0.0, 1.0, 2.0, -0.0};
    const std::vector<double> g = {5.0, 5.0, std::numeric_limits<double>::infinity(), 0.0};
    const std::vector<std::uint8_t> mask = {0, 1, 0, 1};
    simd::masked_update(p.size(), p.data(), g.data(), mask.data(), 0.1);
    CHECK(std::signbit(p[0]));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == 2.0);
    CHECK(p[3] == 0.0);
}

TEST_CASE("isa override is scoped") {
    const auto before = simd::active_isa();
    {
        simd::ScopedIsa scope(simd::Isa::Generic);
        CHECK(scope.ok());
        CHECK(simd::active_isa() == simd::Isa::Generic);
    }
    CHECK(simd::active_isa() == before);
    CHECK(simd::isa_name(simd::Isa::Generic) == "generic");
}
