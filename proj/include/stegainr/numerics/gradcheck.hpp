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

#include "stegainr/numerics/mlp.hpp"

namespace stegainr {

struct GradcheckOptions {
    /// Central-difference step h: (L(p + h) - L(p - h)) / 2h.
    double step = 1e-5;
    /// ReLU nets: samples with any hidden pre-activation closer than this to
    /// 0 are excluded, since a perturbation of size `step` may cross the
    /// kink. Must be comfortably larger than the activation change a single
    /// perturbation can cause.
    double kink_margin = 1e-4;
    /// Relative error is |a - n| / max(|a|, |n|, floor).
    double denominator_floor = 1e-8;
    LossReduction reduction = LossReduction::Sum;
    /// Networks above this many parameters are rejected.
    std::size_t max_parameters = 2000;
};

struct GradcheckReport {
    double max_relative_error = 0.0;
    std::size_t worst_parameter = 0;  // canonical flat index
    std::size_t parameters_checked = 0;
    std::size_t samples_used = 0;
    std::size_t samples_skipped = 0;
    bool passed = false;
};

/// Compares every analytic gradient entry against central differences.
/// `inputs` are encoded first-layer inputs. Mismatches are reported, never
/// thrown; passed means max_relative_error < tolerance with at least one
/// sample left after kink filtering.
GradcheckReport gradcheck(const FunctionSpec& spec, const ParameterSet& params,
                          const Matrix& inputs, const Matrix& targets, double tolerance,
                          const GradcheckOptions& options = {});

}  // namespace stegainr
