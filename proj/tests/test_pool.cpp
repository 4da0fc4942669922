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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stegainr/analysis/pool.hpp"
#include "stegainr/codec/synthetic.hpp"
#include "support.hpp"

using namespace stegainr;
using stegainr::test::make_spec;

namespace {

ModelFile
tiny_secret() {
    ModelFile m;
    m.role = ModelRole::Secret;
    m.spec = make_spec({2, 16, 16, 3});
    m.params = init_params(m.spec, 1);
    m.params.round_to_f32();
    return m;
}

PoolOptions
quick() {
    PoolOptions o;
    o.train.eta = 1e-3;
    o.train.epochs = 3;
    return o;
}

std::vector<RasterImage>
covers() {
    return {synthetic_scene(8, 8, 1), synthetic_scene(8, 8, 2)};
}

const ExpansionPlan kPlan{Strategy::Vertical, {2, 40, 40, 3}, 0};

std::string
slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("pool of two pairs") {
    const auto dir = stegainr::test::scratch_dir("pool_a");
    const PoolManifest m = build_pool(covers(), tiny_secret(), kPlan, 2, 5, dir.string(), quick());
    REQUIRE(m.items.size() == 4);
    int stego = 0;
    for (const auto& it : m.items) {
        CHECK(std::filesystem::exists(dir / it.path));
        stego += it.label;
    }
    CHECK(stego == 2);
    CHECK(std::filesystem::exists(dir / "manifest.csv"));
    CHECK(load_manifest((dir / "manifest.csv").string()) == m);
    // Clean and stego share the spec exactly.
    CHECK(load_model((dir / m.items[0].path).string()).spec ==
          load_model((dir / m.items[1].path).string()).spec);
    CHECK(m.items[0].cover == 0);
    CHECK(m.items[2].cover == 1);
}

TEST_CASE("pool rebuild is byte-identical regardless of worker count") {
    const auto a = stegainr::test::scratch_dir("pool_b1");
    const auto b = stegainr::test::scratch_dir("pool_b2");
    PoolOptions o = quick();
    build_pool(covers(), tiny_secret(), kPlan, 3, 9, a.string(), o);
    o.workers = 3;
    build_pool(covers(), tiny_secret(), kPlan, 3, 9, b.string(), o);
    CHECK(slurp(a / "manifest.csv") == slurp(b / "manifest.csv"));
}

TEST_CASE("pool argument errors") {
    const auto dir = stegainr::test::scratch_dir("pool_c");
    CHECK_ERROR_CODE(build_pool({}, tiny_secret(), kPlan, 1, 1, dir.string(), quick()), ErrorCode::Argument);
    CHECK_ERROR_CODE(build_pool(covers(), tiny_secret(), kPlan, 0, 1, dir.string(), quick()), ErrorCode::Argument);
    const ExpansionPlan bad{Strategy::Vertical, {2, 8, 8, 3}, 0};
    CHECK_ERROR_CODE(build_pool(covers(), tiny_secret(), bad, 1, 1, dir.string(), quick()), ErrorCode::Structural);
}

TEST_CASE("feature export shape, determinism and alignment") {
    const auto dir = stegainr::test::scratch_dir("pool_d");
    const PoolManifest m = build_pool(covers(), tiny_secret(), kPlan, 2, 5, dir.string(), quick());
    const std::string csv = export_features(m, dir.string(), 1000, 17);
    CHECK(csv == export_features(m, dir.string(), 1000, 17));
    CHECK_FALSE(csv == export_features(m, dir.string(), 1000, 18));

    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].rfind("label,f0001,f0002,", 0) == 0);
    const bool long_enough = lines[0].size() > 6;
    REQUIRE(long_enough);
    CHECK(lines[0].substr(lines[0].size() - 6) == ",f1000");
    for (const auto& l : lines) CHECK(std::count(l.begin(), l.end(), ',') == 1000);
    CHECK(lines[1].rfind("0,", 0) == 0);
    CHECK(lines[2].rfind("1,", 0) == 0);

    const FunctionSpec spec = load_model((dir / m.items[0].path).string()).spec;
    const auto pos = feature_positions(spec, 1000, 17);
    CHECK(pos == feature_positions(spec, 1000, 17));
    CHECK(std::is_sorted(pos.begin(), pos.end()));
    CHECK(std::adjacent_find(pos.begin(), pos.end()) == pos.end());

    // First feature equals the stored parameter at the first position.
    const auto flat = load_model((dir / m.items[0].path).string()).params.flatten();
    const std::string first = lines[1].substr(2, lines[1].find(',', 2) - 2);
    CHECK(static_cast<float>(std::stod(first)) == static_cast<float>(flat[pos[0]]));
}

TEST_CASE("feature export rejects short models") {
    const auto dir = stegainr::test::scratch_dir("pool_e");
    ModelFile small;
    small.spec = make_spec({2, 4, 3});
    small.params = init_params(small.spec, 1);
    save_model((dir / "small.sinr").string(), small);
    PoolManifest m;
    m.items.push_back(PoolItem{0, "small.sinr", 1, 0, false, 0});
    try {
        export_features(m, dir.string(), 1000, 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Argument);
        CHECK(std::string(e.what()).find("small.sinr") != std::string::npos);
    }
    CHECK_ERROR_CODE(parse_manifest("label,path\n"), ErrorCode::Format);
}
