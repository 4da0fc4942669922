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


#include "stegainr/numerics/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stegainr/error.hpp"

namespace stegainr {

namespace {

bool
near_kink(const ForwardTrace& trace, std::size_t sample, double margin) {
    // Hidden layers only; the output layer is linear.
    for (std::size_t l = 0; l + 1 < trace.pre.size(); ++l) {
        for (double s : trace.pre[l].row(sample)) {
            if (std::abs(s) < margin) {
                return true;
            }
        }
    }
    return false;
}

Matrix
select_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
    Matrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::copy(m.row(rows[i]).begin(), m.row(rows[i]).end(), out.row(i).begin());
    }
    return out;
}

}  // namespace

GradcheckReport
gradcheck(const FunctionSpec& spec, const ParameterSet& params, const Matrix& inputs,
          const Matrix& targets, double tolerance, const GradcheckOptions& options) {
    const std::size_t n_params = parameter_count(spec);
    if (n_params > options.max_parameters) {
        fail(ErrorCode::Argument, "gradcheck: " + std::to_string(n_params) +
                                      " parameters exceeds the limit of " +
                                      std::to_string(options.max_parameters));
    }

    GradcheckReport report;
    const ForwardTrace full = forward(spec, params, inputs);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < inputs.rows(); ++i) {
        if (spec.activation == Activation::ReLU && near_kink(full, i, options.kink_margin)) {
            ++report.samples_skipped;
        } else {
            keep.push_back(i);
        }
    }
    report.samples_used = keep.size();
    if (keep.empty()) {
        return report;
    }

    const Matrix x = select_rows(inputs, keep);
    const Matrix y = select_rows(targets, keep);
    const ForwardTrace trace = forward(spec, params, x);
    const std::vector<double> analytic =
        backward(spec, params, trace, y, options.reduction).flatten();

    std::vector<double> flat = params.flatten();
    auto loss_at = [&](std::size_t index, double value) {
        const double saved = flat[index];
        flat[index] = value;
        const ParameterSet probe = ParameterSet::unflatten(spec, flat);
        flat[index] = saved;
        return squared_error_loss(predict(spec, probe, x), y, options.reduction);
    };

    const double h = options.step;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const double plus = flat[i] + h;
        const double minus = flat[i] - h;
        // Divide by the representable spacing, not 2h.
        const double numeric = (loss_at(i, plus) - loss_at(i, minus)) / (plus - minus);
        const double a = analytic[i];
        const double denom =
            std::max({std::abs(a), std::abs(numeric), options.denominator_floor});
        const double rel = std::abs(a - numeric) / denom;
        if (rel > report.max_relative_error || std::isnan(rel)) {
            report.max_relative_error = rel;
            report.worst_parameter = i;
        }
        ++report.parameters_checked;
    }
    report.passed = report.max_relative_error < tolerance;
    return report;
}

}  // namespace stegainr
