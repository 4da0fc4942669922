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
#include <limits>

#include "stegainr/model/rff.hpp"
#include "stegainr/numerics/gradcheck.hpp"
#include "stegainr/numerics/mlp.hpp"
#include "stegainr/simd/kernels.hpp"
#include "support.hpp"

using namespace stegainr;
using stegainr::test::make_spec;
using stegainr::test::random_matrix;

namespace {

// [1, 2, 1] ReLU net with hand-picked weights.
struct Tiny {
    FunctionSpec spec = make_spec({1, 2, 1});
    ParameterSet params;
    Tiny() {
        params = ParameterSet::zeros(spec);
        params.weights[0](0, 0) = 1.0;
        params.weights[0](1, 0) = -1.0;
        params.biases[0] = {0.0, 0.5};
        params.weights[1](0, 0) = 2.0;
        params.weights[1](0, 1) = 3.0;
        params.biases[1] = {0.1};
    }
};

}  // namespace

TEST_CASE("forward pass of a hand-computed net") {
    Tiny t;
    const Matrix x(2, 1, std::vector<double>{0.25, 1.0});
    const Matrix y = predict(t.spec, t.params, x);
    // x=0.25: hidden (0.25, 0.25) -> 2*0.25 + 3*0.25 + 0.1
    CHECK(y(0, 0) == doctest::Approx(1.35));
    // x=1: hidden (1, relu(-0.5)=0) -> 2.1
    CHECK(y(1, 0) == doctest::Approx(2.1));
    const ForwardTrace tr = forward(t.spec, t.params, x);
    CHECK(tr.act.size() == 3);
    CHECK(tr.pre.size() == 2);
    CHECK(tr.pre[0](1, 1) == doctest::Approx(-0.5));
    CHECK(tr.act[1](1, 1) == 0.0);
}

TEST_CASE("backward pass of a hand-computed net") {
    Tiny t;
    const Matrix x(1, 1, std::vector<double>{0.25});
    const Matrix y(1, 1, std::vector<double>{1.0});
    const ForwardTrace tr = forward(t.spec, t.params, x);
    CHECK(squared_error_loss(tr.output(), y, LossReduction::Sum) == doctest::Approx(0.1225));
    const ParameterSet g = backward(t.spec, t.params, tr, y, LossReduction::Sum);
    CHECK(g.weights[1](0, 0) == doctest::Approx(0.175));
    CHECK(g.weights[1](0, 1) == doctest::Approx(0.175));
    CHECK(g.biases[1][0] == doctest::Approx(0.7));
    CHECK(g.weights[0](0, 0) == doctest::Approx(0.35));
    CHECK(g.weights[0](1, 0) == doctest::Approx(0.525));
    CHECK(g.biases[0][0] == doctest::Approx(1.4));
    CHECK(g.biases[0][1] == doctest::Approx(2.1));
}

TEST_CASE("mean reduction scales loss and gradient by 1/B") {
    const FunctionSpec spec = make_spec({2, 5, 3});
    const ParameterSet p = init_params(spec, 4);
    const Matrix x = random_matrix(8, 2, 5), y = random_matrix(8, 3, 6, 0.0, 1.0);
    const ForwardTrace tr = forward(spec, p, x);
    const double ls = squared_error_loss(tr.output(), y, LossReduction::Sum);
    const double lm = squared_error_loss(tr.output(), y, LossReduction::Mean);
    CHECK(lm == doctest::Approx(ls / 8.0));
    const auto gs = backward(spec, p, tr, y, LossReduction::Sum).flatten();
    const auto gm = backward(spec, p, tr, y, LossReduction::Mean).flatten();
    for (std::size_t i = 0; i < gs.size(); ++i) {
        CHECK(gm[i] == doctest::Approx(gs[i] / 8.0));
    }
}

TEST_CASE("parameter counts") {
    CHECK(parameter_count(make_spec({2, 64, 64, 64, 3})) == 8707);
    CHECK(parameter_count(make_spec({2, 128, 128, 128, 3})) == 33795);
    FunctionSpec rff = make_spec({2, 64, 3});
    rff.rff = RffConfig{16, 1.0, 7};
    CHECK(parameter_count(rff) == 32 * 64 + 64 + 64 * 3 + 3);
    CHECK(init_params(rff, 1).count() == parameter_count(rff));
}

TEST_CASE("spec validation") {
    CHECK_ERROR_CODE(make_spec({2, 3}).validate(), ErrorCode::Structural);
    CHECK_ERROR_CODE(make_spec({2, 0, 3}).validate(), ErrorCode::Structural);
    FunctionSpec bad = make_spec({2, 4, 3});
    bad.rff = RffConfig{0, 1.0, 0};
    CHECK_ERROR_CODE(bad.validate(), ErrorCode::Structural);
}

TEST_CASE("flatten and unflatten round trip in canonical order") {
    const FunctionSpec spec = make_spec({2, 3, 2});
    const ParameterSet p = init_params(spec, 9);
    const auto flat = p.flatten();
    REQUIRE(flat.size() == 17);
    CHECK(flat[0] == p.weights[0](0, 0));
    CHECK(flat[6] == p.biases[0][0]);
    CHECK(flat[9] == p.weights[1](0, 0));
    CHECK(flat[15] == p.biases[1][0]);
    CHECK(bit_identical(ParameterSet::unflatten(spec, flat), p));
}

TEST_CASE("init is deterministic and bounded by 1/sqrt(fan_in)") {
    const FunctionSpec spec = make_spec({2, 64, 64, 3});
    const ParameterSet a = init_params(spec, 42), b = init_params(spec, 42);
    CHECK(bit_identical(a, b));
    CHECK_FALSE(bit_identical(a, init_params(spec, 43)));
    for (std::size_t l = 0; l < a.weights.size(); ++l) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(spec.fan_in(l)));
        for (double v : a.weights[l].values()) CHECK(std::abs(v) <= bound);
        for (double v : a.biases[l]) CHECK(v == 0.0);
    }
}

TEST_CASE("sgd update rejects non-finite gradients and is a no-op at eta 0") {
    const FunctionSpec spec = make_spec({1, 2, 1});
    ParameterSet p = init_params(spec, 1);
    const ParameterSet orig = p;
    ParameterSet g = ParameterSet::zeros(spec);
    g.weights[1](0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_ERROR_CODE(sgd_update(p, g, 0.1), ErrorCode::Divergence);
    CHECK(bit_identical(p, orig));
    g = init_params(spec, 2);
    sgd_update(p, g, 0.0);
    CHECK(bit_identical(p, orig));
    sgd_update(p, g, 0.5);
    CHECK(p.weights[0](0, 0) == doctest::Approx(orig.weights[0](0, 0) - 0.5 * g.weights[0](0, 0)));
}

TEST_CASE("rff encoding is cos then sin of 2 pi B x") {
    const RffConfig cfg{3, 2.0, 11};
    const RffMatrix b = RffMatrix::generate(cfg, 2);
    const Matrix x(1, 2, std::vector<double>{0.3, -0.7});
    const Matrix e = b.encode(x);
    REQUIRE(e.cols() == 6);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (std::size_t i = 0; i < 3; ++i) {
        const double z = two_pi * (b.matrix()(i, 0) * 0.3 + b.matrix()(i, 1) * -0.7);
        CHECK(e(0, i) == doctest::Approx(std::cos(z)));
        CHECK(e(0, 3 + i) == doctest::Approx(std::sin(z)));
    }
    CHECK(RffMatrix::generate(cfg, 2).matrix() == b.matrix());
}

TEST_CASE("gradcheck passes on relu, sine and linear nets") {
    for (Activation act : {Activation::ReLU, Activation::Sine}) {
        FunctionSpec spec = make_spec({2, 7, 5, 3}, act);
        const ParameterSet p = init_params(spec, 3);
        const Matrix x = random_matrix(10, 2, 4), y = random_matrix(10, 3, 5, 0, 1);
        const auto r = gradcheck(spec, p, x, y, 1e-4);
        CHECK(r.passed);
        CHECK(r.parameters_checked == parameter_count(spec));
        CHECK(r.samples_used > 0);
    }
    // Exactly quadratic per parameter: a wide step is free of truncation error.
    FunctionSpec lin = make_spec({3, 4, 2}, Activation::Identity);
    GradcheckOptions wide;
    wide.step = 0.1;
    const auto r = gradcheck(lin, init_params(lin, 8), random_matrix(6, 3, 9),
                             random_matrix(6, 2, 10), 1e-8, wide);
    CHECK(r.passed);
    CHECK(r.max_relative_error < 1e-8);
}

TEST_CASE("gradcheck detects a corrupted gradient") {
    // A wrong target width is a structural error; a huge step ruins accuracy.
    FunctionSpec spec = make_spec({2, 6, 2}, Activation::Sine);
    GradcheckOptions opt;
    opt.step = 0.5;
    const auto r = gradcheck(spec, init_params(spec, 1), random_matrix(5, 2, 2),
                             random_matrix(5, 2, 3), 1e-8, opt);
    CHECK_FALSE(r.passed);
    CHECK(r.max_relative_error > 1e-8);
}

TEST_CASE("gradcheck rejects oversized nets") {
    FunctionSpec spec = make_spec({2, 64, 64, 3});
    CHECK_ERROR_CODE(gradcheck(spec, init_params(spec, 1), random_matrix(2, 2, 1),
                               random_matrix(2, 3, 2), 1e-4),
                     ErrorCode::Argument);
}

TEST_CASE("property: forward and backward are isa-independent") {
    if (!simd::isa_supported(simd::Isa::Avx2)) return;
    CounterRng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> w{2};
        const std::size_t depth = 1 + rng.below(3);
        for (std::size_t d = 0; d < depth; ++d) w.push_back(1 + rng.below(40));
        w.push_back(1 + rng.below(3));
        FunctionSpec spec = make_spec(w, rng.below(2) ? Activation::ReLU : Activation::Sine);
        const ParameterSet p = init_params(spec, trial);
        const Matrix x = random_matrix(1 + rng.below(50), 2, trial + 100);
        const Matrix y = random_matrix(x.rows(), w.back(), trial + 200);
        ParameterSet gg, gv;
        {
            simd::ScopedIsa s(simd::Isa::Generic);
            gg = backward(spec, p, forward(spec, p, x), y);
        }
        {
            simd::ScopedIsa s(simd::Isa::Avx2);
            gv = backward(spec, p, forward(spec, p, x), y);
        }
        CHECK(bit_identical(gg, gv));
    }
}
