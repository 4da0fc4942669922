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


#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "stegainr/model/model_file.hpp"
#include "stegainr/model/parameter_mask.hpp"
#include "stegainr/model/stego_key.hpp"
#include "support.hpp"

using namespace stegainr;
using stegainr::test::make_spec;

TEST_CASE("counter rng is deterministic and stream-separated") {
    CounterRng a(5), b(5), c(6);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CounterRng u(9);
    double lo = 1, hi = 0;
    for (int i = 0; i < 10000; ++i) {
        const double v = u.uniform();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        CHECK(u.below(7) < 7);
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
}

TEST_CASE("normal deviates have unit moments") {
    CounterRng r(3);
    double s = 0, s2 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double v = r.normal();
        s += v;
        s2 += v * v;
    }
    CHECK(std::abs(s / n) < 0.01);
    CHECK(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("sampling without replacement") {
    CounterRng r(1);
    const auto s = sample_without_replacement(100, 40, r);
    CHECK(s.size() == 40);
    CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 40);
    CHECK(*std::max_element(s.begin(), s.end()) < 100);
    CounterRng r2(1);
    CHECK(sample_without_replacement(100, 40, r2) == s);
    CounterRng r3(2);
    const auto all = sample_without_replacement(10, 10, r3);
    CHECK(std::set<std::size_t>(all.begin(), all.end()).size() == 10);
}

TEST_CASE("key bit parsing, formatting and the mixed example") {
    const std::string text = "{00, 1010, 1010101, 1101, 000}";
    const auto bits = parse_key_bits(text);
    REQUIRE(bits.size() == 5);
    CHECK(format_key_bits(bits) == text);

    StegoKey key;
    key.layer_bits = bits;
    key.strategy = Strategy::Mixed;
    key.shared_io = true;
    CHECK(key.popcount(0) == 0);
    CHECK(key.popcount(1) == 2);
    CHECK(key.popcount(2) == 4);
    CHECK(key.popcount(3) == 3);
    CHECK(key.popcount(4) == 0);
    // Input implicit; the last carrying layer is the secret output.
    CHECK(key.secret_layer_widths() == std::vector<std::size_t>{2, 2, 4, 3});
    CHECK(key.secret_indices(2) == std::vector<std::size_t>{0, 2, 4, 6});

    key.strategy = Strategy::Vertical;
    CHECK(key.secret_layer_widths() == std::vector<std::size_t>{2, 2, 4, 3, 3});
}

TEST_CASE("key bit format errors name the layer") {
    CHECK_ERROR_CODE(parse_key_bits("00, 11"), ErrorCode::Format);
    CHECK_ERROR_CODE(parse_key_bits("{}"), ErrorCode::Format);
    CHECK_ERROR_CODE(parse_key_bits("{01, , 1}"), ErrorCode::Format);
    try {
        parse_key_bits("{01, 1x1}");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("key layer 2") != std::string::npos);
    }
}

TEST_CASE("key file round trip") {
    StegoKey k;
    k.layer_bits = parse_key_bits("{00, 0110, 101, 000}");
    k.strategy = Strategy::Vertical;
    k.message = SignalInfo{SignalInfo::Kind::Grid, 220.5, 310.25};
    const std::string text = format_key(k);
    CHECK(parse_key(text) == k);
    k.message.reset();
    CHECK(parse_key(format_key(k)) == k);
    CHECK_ERROR_CODE(parse_key("diagonal\n{0}\nshared_io 1\n"), ErrorCode::Format);
    CHECK_ERROR_CODE(parse_key("vertical\n{01}\nshared 1\n"), ErrorCode::Format);
    CHECK_ERROR_CODE(load_key("/nonexistent/key.txt"), ErrorCode::Io);
}

TEST_CASE("keys with gaps or no secret neurons are rejected") {
    StegoKey k;
    k.strategy = Strategy::Horizontal;
    k.layer_bits = parse_key_bits("{00, 000, 11, 0}");
    CHECK_ERROR_CODE(k.secret_layer_widths(), ErrorCode::Key);
    k.layer_bits = parse_key_bits("{00, 000, 000, 0}");
    CHECK_ERROR_CODE(k.secret_layer_widths(), ErrorCode::Key);
}

TEST_CASE("key congruence with a stego spec") {
    const FunctionSpec spec = make_spec({2, 4, 3, 1});
    StegoKey k;
    k.layer_bits = parse_key_bits("{00, 0110, 101, 0}");
    CHECK_NOTHROW(require_key_congruent(k, spec));
    k.layer_bits = parse_key_bits("{00, 01100, 101, 0}");
    CHECK_ERROR_CODE(require_key_congruent(k, spec), ErrorCode::Structural);
    CHECK(key_layer_widths(spec) == std::vector<std::size_t>{2, 4, 3, 1});
}

TEST_CASE("mask counts for a [64,64,64] secret in a [128,128,128] vertical stego") {
    // [2,64,64,64,3] hidden at even positions of [2,128,128,128,3].
    const FunctionSpec stego = make_spec({2, 128, 128, 128, 3});
    StegoKey k;
    k.strategy = Strategy::Vertical;
    k.layer_bits = {std::vector<std::uint8_t>(2, 0), {}, {}, {}, std::vector<std::uint8_t>(3, 0)};
    for (std::size_t l = 1; l <= 3; ++l) {
        k.layer_bits[l].resize(128);
        for (std::size_t i = 0; i < 128; ++i) k.layer_bits[l][i] = i % 2 == 0;
    }
    const ParameterMask m = mask_from_key(k, stego);
    CHECK(m.size() == 33795);
    CHECK(m.frozen_count() == 8707);
    CHECK(m.trainable_count() == 25088);
    // Enumeration oracle for one matrix.
    std::size_t frozen = 0;
    for (std::size_t i = 0; i < 128; ++i)
        for (std::size_t j = 0; j < 128; ++j) frozen += (m.weights[1][i * 128 + j] == 0);
    CHECK(frozen == 64 * 64);
    CHECK(m.weights[0][1 * 2 + 0] == 1);
    CHECK(m.weights[0][0 * 2 + 1] == 0);
}

TEST_CASE("model file round trip and stored precision") {
    ModelFile m;
    m.role = ModelRole::Stego;
    m.spec = make_spec({2, 5, 3}, Activation::Sine);
    m.spec.rff = RffConfig{4, 1.5, 99};
    m.signal = SignalInfo{SignalInfo::Kind::Grid, -3.0, 7.5};
    m.params = init_params(m.spec, 3);
    const auto bytes = encode_model(m);
    const ModelFile d = decode_model(bytes);
    CHECK(d.role == m.role);
    CHECK(d.spec == m.spec);
    CHECK(d.signal == m.signal);
    ModelFile rounded = m;
    rounded.params.round_to_f32();
    CHECK(bit_identical(d.params, rounded.params));
    CHECK(encode_model(d) == bytes);
    const auto path = stegainr::test::scratch_dir("modelfile") / "m.sinr";
    save_model(path.string(), m);
    CHECK(load_model(path.string()) == d);
}

TEST_CASE("model file decode errors") {
    ModelFile m;
    m.spec = make_spec({2, 3, 1});
    m.params = init_params(m.spec, 1);
    const auto good = encode_model(m);

    auto bad = good;
    bad[0] = 'X';
    CHECK_ERROR_CODE(decode_model(bad), ErrorCode::Format);

    bad = good;
    bad[4] = 9;
    CHECK_ERROR_CODE(decode_model(bad), ErrorCode::Version);

    bad.assign(good.begin(), good.end() - 20);
    CHECK_ERROR_CODE(decode_model(bad), ErrorCode::Truncated);
    bad.assign(good.begin(), good.begin() + 3);
    CHECK_ERROR_CODE(decode_model(bad), ErrorCode::Truncated);

    bad = good;
    bad[bad.size() - 12] ^= 0x01;  // inside the parameter payload
    CHECK_ERROR_CODE(decode_model(bad), ErrorCode::Checksum);

    CHECK_ERROR_CODE(load_model("/nonexistent/model.sinr"), ErrorCode::Io);
}

TEST_CASE("fnv1a reference values") {
    CHECK(fnv1a64({}) == 0xcbf29ce484222325ULL);
    const std::uint8_t a[] = {'a'};
    CHECK(fnv1a64(a) == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("property: random models survive encode/decode") {
    CounterRng rng(123);
    for (int t = 0; t < 25; ++t) {
        std::vector<std::size_t> w{1 + rng.below(3)};
        for (std::size_t d = 0, n = 1 + rng.below(3); d < n; ++d) w.push_back(1 + rng.below(20));
        w.push_back(1 + rng.below(4));
        ModelFile m;
        m.role = static_cast<ModelRole>(rng.below(3));
        m.spec = make_spec(w, rng.below(2) ? Activation::ReLU : Activation::Sine);
        if (rng.below(2)) m.spec.rff = RffConfig{static_cast<std::uint32_t>(1 + rng.below(8)), 2.0, rng.next_u64()};
        m.params = init_params(m.spec, rng.next_u64());
        m.params.round_to_f32();
        CHECK(decode_model(encode_model(m)) == m);
    }
}
