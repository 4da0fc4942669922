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
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "stegainr/codec/dataset.hpp"
#include "stegainr/codec/io.hpp"
#include "stegainr/codec/render.hpp"
#include "stegainr/codec/synthetic.hpp"
#include "stegainr/log.hpp"
#include "support.hpp"

using namespace stegainr;
using stegainr::test::make_spec;

TEST_CASE("cell centers span [-1, 1] symmetrically") {
    CHECK(cell_center(0, 2) == -0.5);
    CHECK(cell_center(1, 2) == 0.5);
    CHECK(cell_center(0, 64) == doctest::Approx(-63.0 / 64.0));
    const Matrix g = coordinate_grid(3, 2);
    REQUIRE(g.rows() == 6);
    CHECK(g(0, 0) == doctest::Approx(-2.0 / 3.0));  // x fastest
    CHECK(g(1, 0) == 0.0);
    CHECK(g(0, 1) == -0.5);
    CHECK(g(3, 1) == 0.5);
}

TEST_CASE("image <-> dataset round trip is exact") {
    const RasterImage img = synthetic_face(17, 9, 4);
    const CoordinateDataset ds = image_to_dataset(img);
    CHECK(ds.size() == 17 * 9);
    CHECK(ds.coord_dim() == 2);
    CHECK(ds.feature_dim() == 3);
    CHECK(ds.features(0, 0) == img.at(0, 0, 0) / 255.0);
    CHECK(dataset_to_image(ds, 17, 9) == img);
}

TEST_CASE("psnr oracle values") {
    RasterImage a(64, 64, 3, 100);
    RasterImage b = a;
    CHECK(std::isinf(psnr(a, b)));
    b.at(5, 7, 1) = 101;
    // 10 log10(1 / ((1/255)^2 / 12288))
    const double expected = 20.0 * std::log10(255.0) + 10.0 * std::log10(12288.0);
    CHECK(psnr(a, b) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(psnr(a, b) == doctest::Approx(89.03).epsilon(1e-4));
    CHECK_ERROR_CODE(psnr(a, RasterImage(32, 64, 3)), ErrorCode::Argument);
}

TEST_CASE("grid normalization and degenerate ranges") {
    ScalarGrid g = synthetic_climate(6, 12, 2);
    CHECK(g.lo < g.hi);
    const CoordinateDataset ds = grid_to_dataset(g);
    CHECK(ds.feature_dim() == 1);
    const ScalarGrid back = dataset_to_grid(ds, 6, 12, g.lo, g.hi);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        CHECK(back.values[i] == doctest::Approx(g.values[i]).epsilon(1e-12));
    }

    ScalarGrid flat;
    flat.rows = 2;
    flat.cols = 2;
    flat.values.assign(4, 5.0);
    flat.fit_range();
    std::vector<std::string> warnings;
    auto prev = set_warning_sink([&](const std::string& m) { warnings.push_back(m); });
    const CoordinateDataset fd = grid_to_dataset(flat);
    set_warning_sink(prev);
    CHECK(warnings.size() == 1);
    for (double v : fd.features.values()) CHECK(v == 0.5);
}

TEST_CASE("png and grid files round trip") {
    const auto dir = stegainr::test::scratch_dir("codec");
    const RasterImage img = synthetic_scene(20, 11, 8);
    write_png((dir / "a.png").string(), img);
    CHECK(read_png((dir / "a.png").string()) == img);

    RasterImage gray(5, 4, 1, 0);
    for (std::size_t i = 0; i < gray.samples.size(); ++i) gray.samples[i] = static_cast<std::uint8_t>(i * 9);
    write_png((dir / "g.png").string(), gray);
    CHECK(read_png((dir / "g.png").string()) == gray);

    ScalarGrid g = synthetic_climate(4, 7, 1);
    write_grid((dir / "t.grid").string(), g);
    CHECK(read_grid((dir / "t.grid").string()) == g);

    CHECK_ERROR_CODE(read_png((dir / "missing.png").string()), ErrorCode::Io);
    std::ofstream((dir / "junk.png").string()) << "not a png";
    CHECK_ERROR_CODE(read_png((dir / "junk.png").string()), ErrorCode::Format);
    std::ofstream((dir / "junk.grid").string()) << "2 2 0 1\n0.1 0.2 0.3\n";
    CHECK_ERROR_CODE(read_grid((dir / "junk.grid").string()), ErrorCode::Truncated);
    std::ofstream((dir / "junk2.grid").string()) << "2 x 0 1\n";
    CHECK_ERROR_CODE(read_grid((dir / "junk2.grid").string()), ErrorCode::Format);
}

TEST_CASE("subsample draws distinct rows deterministically") {
    const CoordinateDataset ds = image_to_dataset(synthetic_face(16, 16, 1));
    const CoordinateDataset a = subsample(ds, 50, 3), b = subsample(ds, 50, 3);
    CHECK(a.size() == 50);
    CHECK(a.coords == b.coords);
    CHECK(a.features == b.features);
    std::set<std::pair<double, double>> seen;
    for (std::size_t r = 0; r < a.size(); ++r) seen.insert({a.coords(r, 0), a.coords(r, 1)});
    CHECK(seen.size() == 50);
    CHECK_ERROR_CODE(subsample(ds, 257, 1), ErrorCode::Argument);
}

TEST_CASE("render is deterministic and resolution independent") {
    FunctionSpec spec = make_spec({2, 16, 3});
    spec.rff = RffConfig{8, 1.0, 3};
    const ParameterSet p = init_params(spec, 5);
    const RasterImage a = render_image(spec, p, 32, 32);
    CHECK(a == render_image(spec, p, 32, 32));
    const RasterImage big = render_image(spec, p, 64, 64);
    CHECK(big.width == 64);
    CHECK(big.samples.size() == 64 * 64 * 3);

    ModelFile m;
    m.spec = make_spec({2, 8, 1});
    m.params = init_params(m.spec, 1);
    m.signal = SignalInfo{SignalInfo::Kind::Grid, 200.0, 300.0};
    const Rendered r = render(m, 10, 5);
    REQUIRE(std::holds_alternative<ScalarGrid>(r));
    CHECK(std::get<ScalarGrid>(r).rows == 5);
    CHECK(std::get<ScalarGrid>(r).cols == 10);
    m.signal.kind = SignalInfo::Kind::Image;
    CHECK(std::holds_alternative<RasterImage>(render(m, 10, 5)));
}

TEST_CASE("synthetic generators are seeded") {
    CHECK(synthetic_face(32, 32, 1) == synthetic_face(32, 32, 1));
    CHECK_FALSE(synthetic_face(32, 32, 1) == synthetic_face(32, 32, 2));
    CHECK_FALSE(synthetic_scene(32, 32, 1) == synthetic_scene(32, 32, 2));
    CHECK(synthetic_climate(8, 16, 3) == synthetic_climate(8, 16, 3));
}
