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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stegainr/codec/dataset.hpp"
#include "stegainr/model/model_file.hpp"
#include "stegainr/model/parameter_mask.hpp"
#include "stegainr/numerics/mlp.hpp"

namespace stegainr {

/// Which elements each epoch trains on.
struct BatchPolicy {
    enum class Kind : std::uint8_t { Full, Subset };
    Kind kind = Kind::Full;
    /// Subset: elements drawn per epoch, without replacement, from a seed
    /// derived from (TrainConfig::seed, epoch).
    std::size_t subset_size = 0;

    static BatchPolicy full() { return {}; }
    static BatchPolicy subset(std::size_t k) { return {Kind::Subset, k}; }
};

struct TrainConfig {
    double eta = 1e-4;
    std::size_t epochs = 2000;
    BatchPolicy batch;
    std::uint64_t seed = 0;
    std::size_t log_every = 10;
    LossReduction reduction = LossReduction::Sum;

    /// Throws ErrorCode::Argument unless eta > 0 and epochs >= 1.
    void validate() const;
};

struct LossPoint {
    std::size_t epoch = 0;
    double loss = 0.0;
};

/// Bitwise before/after comparison of every parameter, split by mask class.
struct ChangeCensus {
    std::size_t frozen_total = 0;
    std::size_t frozen_changed = 0;
    std::size_t trainable_total = 0;
    std::size_t trainable_changed = 0;
};

struct TrainReport {
    std::vector<LossPoint> curve;  // loss before the update of each logged epoch
    double final_loss = 0.0;       // full dataset, after the last update
    double wall_seconds = 0.0;
    std::size_t epochs_completed = 0;
    ChangeCensus census;
    bool diverged = false;
    std::string diagnostic;
};

struct FitResult {
    ParameterSet params;
    TrainReport report;
};

/// Plain gradient descent on the squared-error loss. On a non-finite loss or
/// gradient the run halts and returns the last finite parameters with
/// report.diverged set.
FitResult fit(const FunctionSpec& spec, const ParameterSet& params, const CoordinateDataset& ds,
              const TrainConfig& cfg);

/// Gradient descent where only mask-1 entries move:
/// params <- params - mask (.) eta * grad. Mask-0 entries keep their exact
/// bit pattern, which the census in the report verifies.
FitResult fit_masked(const FunctionSpec& spec, const ParameterSet& params,
                     const ParameterMask& mask, const CoordinateDataset& ds,
                     const TrainConfig& cfg);

/// Encode the message, fit a freshly initialized function (init seed =
/// cfg.seed) and package it as a "secret" model with binary32 parameters.
/// Divergence is reported through `report` when given, else thrown.
ModelFile fit_secret(const RasterImage& message, const FunctionSpec& spec,
                     const TrainConfig& cfg, TrainReport* report = nullptr);
ModelFile fit_secret(const ScalarGrid& message, const FunctionSpec& spec,
                     const TrainConfig& cfg, TrainReport* report = nullptr);

ChangeCensus change_census(const ParameterSet& before, const ParameterSet& after,
                           const ParameterMask* mask);

/// Line-oriented human log.
void write_report_log(std::ostream& out, const TrainReport& report);
/// "epoch,loss" CSV of the logged curve.
void write_loss_csv(std::ostream& out, const TrainReport& report);

}  // namespace stegainr
