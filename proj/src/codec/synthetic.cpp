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


#include "stegainr/codec/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "stegainr/error.hpp"
#include "stegainr/model/prng.hpp"

namespace stegainr {

namespace {

using Rgb = std::array<double, 3>;

double
smoothstep(double e0, double e1, double x) {
    const double t = std::clamp((x - e0) / (e1 - e0), 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

// Soft inside-ness of an axis-aligned ellipse, 1 inside, 0 outside.
double
ellipse(double x, double y, double cx, double cy, double rx, double ry, double soft) {
    const double d = std::sqrt(((x - cx) / rx) * ((x - cx) / rx) + ((y - cy) / ry) * ((y - cy) / ry));
    return 1.0 - smoothstep(1.0 - soft, 1.0 + soft, d);
}

Rgb
mix(const Rgb& a, const Rgb& b, double t) {
    return {a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t, a[2] + (b[2] - a[2]) * t};
}

Rgb
random_color(CounterRng& rng, double lo, double hi) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

std::uint8_t
to_u8(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

void
require_shape(std::size_t w, std::size_t h) {
    if (w == 0 || h == 0) {
        fail(ErrorCode::Argument, "synthetic signal needs a nonzero shape");
    }
}

template <typename Shade>
RasterImage
paint(std::size_t w, std::size_t h, Shade shade) {
    RasterImage img(w, h, 3);
    for (std::size_t py = 0; py < h; ++py) {
        for (std::size_t px = 0; px < w; ++px) {
            const double x = (static_cast<double>(px) + 0.5) / static_cast<double>(w);
            const double y = (static_cast<double>(py) + 0.5) / static_cast<double>(h);
            const Rgb c = shade(x, y);
            for (std::size_t ch = 0; ch < 3; ++ch) {
                img.at(px, py, ch) = to_u8(c[ch]);
            }
        }
    }
    return img;
}

}  // namespace

RasterImage
synthetic_face(std::size_t width, std::size_t height, std::uint64_t seed) {
    require_shape(width, height);
    CounterRng rng(derive_seed(seed, 0x66616365));
    const Rgb bg_top = random_color(rng, 0.45, 0.85);
    const Rgb bg_bottom = random_color(rng, 0.15, 0.5);
    const Rgb skin = {rng.uniform(0.75, 0.95), rng.uniform(0.55, 0.75), rng.uniform(0.45, 0.6)};
    const Rgb hair = random_color(rng, 0.05, 0.35);
    const Rgb iris = random_color(rng, 0.1, 0.45);
    const Rgb lips = {rng.uniform(0.6, 0.8), rng.uniform(0.2, 0.35), rng.uniform(0.25, 0.4)};
    const double cx = 0.5 + rng.uniform(-0.04, 0.04);
    const double cy = 0.55 + rng.uniform(-0.03, 0.03);
    const double rx = rng.uniform(0.24, 0.3);
    const double ry = rng.uniform(0.32, 0.38);
    const double eye_dx = rng.uniform(0.09, 0.12);
    const double eye_y = cy - rng.uniform(0.06, 0.1);
    const double mouth_y = cy + rng.uniform(0.14, 0.18);

    return paint(width, height, [&](double x, double y) {
        Rgb c = mix(bg_top, bg_bottom, y);
        const double hair_mask = ellipse(x, y, cx, cy - 0.06, rx * 1.18, ry * 1.05, 0.06);
        c = mix(c, hair, hair_mask);
        const double face = ellipse(x, y, cx, cy, rx, ry, 0.05);
        // Soft side shading gives the face some depth.
        Rgb s = mix(skin, {skin[0] * 0.8, skin[1] * 0.75, skin[2] * 0.75},
                    smoothstep(0.3, 1.0, std::abs(x - cx) / rx));
        c = mix(c, s, face);
        const double fringe = ellipse(x, y, cx, cy - ry * 0.85, rx * 0.95, ry * 0.3, 0.15);
        c = mix(c, hair, fringe * face);
        for (double side : {-1.0, 1.0}) {
            const double ex = cx + side * eye_dx;
            c = mix(c, {0.95, 0.95, 0.95}, ellipse(x, y, ex, eye_y, 0.05, 0.028, 0.2));
            c = mix(c, iris, ellipse(x, y, ex, eye_y, 0.022, 0.022, 0.25));
            c = mix(c, {0.05, 0.05, 0.05}, ellipse(x, y, ex, eye_y, 0.01, 0.01, 0.3));
            c = mix(c, hair, ellipse(x, y, ex, eye_y - 0.05, 0.055, 0.012, 0.3));
        }
        c = mix(c, {s[0] * 0.85, s[1] * 0.75, s[2] * 0.7},
                ellipse(x, y, cx, (eye_y + mouth_y) / 2.0, 0.02, 0.06, 0.4));
        c = mix(c, lips, ellipse(x, y, cx, mouth_y, 0.08, 0.025, 0.25));
        return c;
    });
}

RasterImage
synthetic_scene(std::size_t width, std::size_t height, std::uint64_t seed) {
    require_shape(width, height);
    CounterRng rng(derive_seed(seed, 0x7363656e65));
    const Rgb a = random_color(rng, 0.0, 1.0);
    const Rgb b = random_color(rng, 0.0, 1.0);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    struct Blob {
        double cx, cy, rx, ry;
        Rgb color;
    };
    std::array<Blob, 6> blobs{};
    for (auto& bl : blobs) {
        bl = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.08, 0.3),
              rng.uniform(0.08, 0.3), random_color(rng, 0.0, 1.0)};
    }
    const double fx = rng.uniform(1.0, 4.0);
    const double fy = rng.uniform(1.0, 4.0);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double amp = rng.uniform(0.03, 0.12);

    return paint(width, height, [&](double x, double y) {
        const double t = 0.5 + 0.5 * ((x - 0.5) * std::cos(angle) + (y - 0.5) * std::sin(angle));
        Rgb c = mix(a, b, std::clamp(t, 0.0, 1.0));
        for (const auto& bl : blobs) {
            c = mix(c, bl.color, 0.8 * ellipse(x, y, bl.cx, bl.cy, bl.rx, bl.ry, 0.3));
        }
        const double wave =
            amp * std::sin(2.0 * std::numbers::pi * (fx * x + fy * y) + phase);
        return Rgb{c[0] + wave, c[1] + wave, c[2] + wave};
    });
}

ScalarGrid
synthetic_climate(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    require_shape(cols, rows);
    CounterRng rng(derive_seed(seed, 0x636c696d));
    const double equator = rng.uniform(296.0, 302.0);
    const double pole_drop = rng.uniform(45.0, 60.0);
    struct Land {
        double lon, lat, rx, ry, delta;
    };
    std::array<Land, 5> lands{};
    for (auto& l : lands) {
        l = {rng.uniform(0.0, 1.0), rng.uniform(0.1, 0.9), rng.uniform(0.06, 0.18),
             rng.uniform(0.08, 0.2), rng.uniform(-8.0, 8.0)};
    }
    const double wave_k = std::floor(rng.uniform(3.0, 7.0));
    const double wave_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);

    ScalarGrid g;
    g.rows = rows;
    g.cols = cols;
    g.values.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const double v = (static_cast<double>(r) + 0.5) / static_cast<double>(rows);
        const double lat = (0.5 - v) * std::numbers::pi;
        for (std::size_t c = 0; c < cols; ++c) {
            const double u = (static_cast<double>(c) + 0.5) / static_cast<double>(cols);
            double t = equator - pole_drop * std::sin(lat) * std::sin(lat);
            for (const auto& l : lands) {
                t += l.delta * ellipse(u, v, l.lon, l.lat, l.rx, l.ry, 0.4);
            }
            t += 3.0 * std::cos(lat) *
                 std::sin(wave_k * 2.0 * std::numbers::pi * u + wave_phase + 4.0 * lat);
            g.at(r, c) = t;
        }
    }
    g.fit_range();
    return g;
}

}  // namespace stegainr
