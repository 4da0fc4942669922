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

#include <cstdint>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "stegainr/error.hpp"
#include "stegainr/model/function_spec.hpp"
#include "stegainr/model/prng.hpp"

// Checks that `expr` throws stegainr::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                                       \
    do {                                                                       \
        bool thrown_ = false;                                                  \
        try {                                                                  \
            (void)(expr);                                                      \
        } catch (const ::stegainr::Error& e_) {                                \
            thrown_ = true;                                                    \
            CHECK_MESSAGE(e_.code() == (expected), "message: " << std::string(e_.what()));  \
        }                                                                      \
        CHECK_MESSAGE(thrown_, "expected an error from: " #expr);              \
    } while (0)

namespace stegainr::test {

inline FunctionSpec
make_spec(std::vector<std::size_t> widths, Activation act = Activation::ReLU) {
    FunctionSpec s;
    s.widths = std::move(widths);
    s.activation = act;
    return s;
}

// Fresh, empty scratch directory unique to `name`.
inline std::filesystem::path
scratch_dir(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("stegainr_test_" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

// Uniform matrix in [lo, hi).
inline Matrix
random_matrix(std::size_t r, std::size_t c, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
    Matrix m(r, c);
    CounterRng rng(seed);
    for (double& v : m.values()) v = rng.uniform(lo, hi);
    return m;
}

}  // namespace stegainr::test
