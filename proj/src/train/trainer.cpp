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


#include "stegainr/train/trainer.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "stegainr/error.hpp"
#include "stegainr/model/prng.hpp"
#include "stegainr/model/rff.hpp"
#include "stegainr/simd/kernels.hpp"

namespace stegainr {

namespace {

void
masked_update(ParameterSet& params, const ParameterSet& grads, const ParameterMask& mask,
              double eta) {
    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        simd::masked_update(params.weights[l].size(), params.weights[l].data(),
                            grads.weights[l].data(), mask.weights[l].data(), eta);
        simd::masked_update(params.biases[l].size(), params.biases[l].data(),
                            grads.biases[l].data(), mask.biases[l].data(), eta);
    }
}

FitResult
run(const FunctionSpec& spec, const ParameterSet& initial, const ParameterMask* mask,
    const CoordinateDataset& ds, const TrainConfig& cfg) {
    cfg.validate();
    spec.validate();
    initial.require_congruent(spec);
    if (mask) {
        mask->require_congruent(spec);
    }
    if (ds.coord_dim() != spec.input_dim() || ds.feature_dim() != spec.output_dim()) {
        fail(ErrorCode::Structural, "dataset is " + std::to_string(ds.coord_dim()) + "->" +
                                        std::to_string(ds.feature_dim()) + ", function " +
                                        describe(spec) + " is " +
                                        std::to_string(spec.input_dim()) + "->" +
                                        std::to_string(spec.output_dim()));
    }
    if (ds.size() == 0) {
        fail(ErrorCode::Argument, "dataset is empty");
    }
    if (cfg.batch.kind == BatchPolicy::Kind::Subset &&
        (cfg.batch.subset_size < 1 || cfg.batch.subset_size > ds.size())) {
        fail(ErrorCode::Argument, "subset batch size " + std::to_string(cfg.batch.subset_size) +
                                      " outside [1, " + std::to_string(ds.size()) + "]");
    }

    const auto started = std::chrono::steady_clock::now();
    const Matrix inputs = encode_inputs(spec, ds.coords);

    FitResult result{initial, {}};
    ParameterSet& params = result.params;
    TrainReport& report = result.report;
    ParameterSet last_finite = params;

    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        Matrix batch_x, batch_y;
        const Matrix* x = &inputs;
        const Matrix* y = &ds.features;
        if (cfg.batch.kind == BatchPolicy::Kind::Subset) {
            CounterRng rng(derive_seed(cfg.seed, epoch));
            const auto rows = sample_without_replacement(ds.size(), cfg.batch.subset_size, rng);
            batch_x = Matrix(rows.size(), inputs.cols());
            batch_y = Matrix(rows.size(), ds.feature_dim());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::copy_n(inputs.row(rows[i]).begin(), inputs.cols(), batch_x.row(i).begin());
                std::copy_n(ds.features.row(rows[i]).begin(), ds.feature_dim(),
                            batch_y.row(i).begin());
            }
            x = &batch_x;
            y = &batch_y;
        }

        const ForwardTrace trace = forward(spec, params, *x);
        const double loss = squared_error_loss(trace.output(), *y, cfg.reduction);
        if (!std::isfinite(loss)) {
            report.diverged = true;
            report.diagnostic = "epoch " + std::to_string(epoch) + ": non-finite loss";
            break;
        }
        if (cfg.log_every > 0 && (epoch % cfg.log_every == 0 || epoch == 1)) {
            report.curve.push_back({epoch, loss});
        }

        const ParameterSet grads = backward(spec, params, trace, *y, cfg.reduction);
        try {
            require_finite_gradients(grads);
        } catch (const Error& e) {
            report.diverged = true;
            report.diagnostic = "epoch " + std::to_string(epoch) + ": " + e.what();
            break;
        }

        last_finite = params;
        if (mask) {
            masked_update(params, grads, *mask, cfg.eta);
        } else {
            sgd_update(params, grads, cfg.eta);
        }
        if (!params.all_finite()) {
            params = last_finite;
            report.diverged = true;
            report.diagnostic = "epoch " + std::to_string(epoch) + ": update overflowed";
            break;
        }
        report.epochs_completed = epoch;
    }

    report.final_loss = squared_error_loss(predict(spec, params, inputs), ds.features, cfg.reduction);
    report.census = change_census(initial, params, mask);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

ModelFile
fit_secret_impl(const CoordinateDataset& ds, const SignalInfo& signal, const FunctionSpec& spec,
                const TrainConfig& cfg, TrainReport* report) {
    spec.validate();
    FitResult fitted = fit(spec, init_params(spec, cfg.seed), ds, cfg);
    if (fitted.report.diverged && !report) {
        fail(ErrorCode::Divergence, "secret fit diverged: " + fitted.report.diagnostic);
    }
    if (report) {
        *report = fitted.report;
    }
    ModelFile model;
    model.role = ModelRole::Secret;
    model.spec = spec;
    model.signal = signal;
    model.params = std::move(fitted.params);
    model.params.round_to_f32();
    return model;
}

}  // namespace

void
TrainConfig::validate() const {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        fail(ErrorCode::Argument, "learning rate must be positive and finite");
    }
    if (epochs < 1) {
        fail(ErrorCode::Argument, "epochs must be >= 1");
    }
}

FitResult
fit(const FunctionSpec& spec, const ParameterSet& params, const CoordinateDataset& ds,
    const TrainConfig& cfg) {
    return run(spec, params, nullptr, ds, cfg);
}

FitResult
fit_masked(const FunctionSpec& spec, const ParameterSet& params, const ParameterMask& mask,
           const CoordinateDataset& ds, const TrainConfig& cfg) {
    return run(spec, params, &mask, ds, cfg);
}

ModelFile
fit_secret(const RasterImage& message, const FunctionSpec& spec, const TrainConfig& cfg,
           TrainReport* report) {
    return fit_secret_impl(image_to_dataset(message), SignalInfo{}, spec, cfg,
                                        report);
}

ModelFile
fit_secret(const ScalarGrid& message, const FunctionSpec& spec, const TrainConfig& cfg,
           TrainReport* report) {
    SignalInfo signal{SignalInfo::Kind::Grid, message.lo, message.hi};
    return fit_secret_impl(grid_to_dataset(message), signal, spec, cfg, report);
}

ChangeCensus
change_census(const ParameterSet& before, const ParameterSet& after, const ParameterMask* mask) {
    const auto a = before.flatten();
    const auto b = after.flatten();
    if (a.size() != b.size()) {
        fail(ErrorCode::Structural, "census: parameter sets differ in size");
    }
    std::vector<std::uint8_t> m = mask ? mask->flatten() : std::vector<std::uint8_t>(a.size(), 1);
    ChangeCensus c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool changed = std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i]);
        if (m[i] == 0) {
            ++c.frozen_total;
            c.frozen_changed += changed;
        } else {
            ++c.trainable_total;
            c.trainable_changed += changed;
        }
    }
    return c;
}

void
write_report_log(std::ostream& out, const TrainReport& report) {
    char line[160];
    for (const auto& p : report.curve) {
        std::snprintf(line, sizeof(line), "epoch %6zu  loss %.9g\n", p.epoch, p.loss);
        out << line;
    }
    std::snprintf(line, sizeof(line), "final loss %.9g after %zu epochs (%.2f s)\n",
                  report.final_loss, report.epochs_completed, report.wall_seconds);
    out << line;
    out << "census: frozen " << report.census.frozen_changed << "/" << report.census.frozen_total
        << " changed, trainable " << report.census.trainable_changed << "/"
        << report.census.trainable_total << " changed\n";
    if (report.diverged) {
        out << "diverged: " << report.diagnostic << "\n";
    }
}

void
write_loss_csv(std::ostream& out, const TrainReport& report) {
    out << "epoch,loss\n";
    char line[64];
    for (const auto& p : report.curve) {
        std::snprintf(line, sizeof(line), "%zu,%.17g\n", p.epoch, p.loss);
        out << line;
    }
}

}  // namespace stegainr
