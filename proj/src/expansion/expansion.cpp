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


#include "stegainr/expansion/expansion.hpp"

#include <algorithm>
#include <string>

#include "stegainr/error.hpp"
#include "stegainr/model/prng.hpp"
#include "stegainr/recovery/recovery.hpp"

namespace stegainr {

namespace {

std::string
layer_str(std::size_t l) {
    return "layer " + std::to_string(l);
}

// Number of stego layers (after the input) that carry secret neurons.
std::size_t
carrying_end(const FunctionSpec& secret, Strategy s) {
    // Vertical: hidden layers 1..L-2. Otherwise: 1..L_s-1.
    return s == Strategy::Vertical ? secret.layer_count() - 1 : secret.layer_count();
}

}  // namespace

void
validate_plan(const FunctionSpec& secret, const ExpansionPlan& plan) {
    secret.validate();
    const auto& sw = secret.widths;
    const auto& w = plan.stego_widths;
    const std::size_t ls = sw.size();
    if (w.size() < 3) {
        fail(ErrorCode::Structural, "stego function needs at least one hidden layer");
    }
    if (std::find(w.begin(), w.end(), std::size_t{0}) != w.end()) {
        fail(ErrorCode::Structural, "stego widths must be positive");
    }
    if (w[0] != sw[0]) {
        fail(ErrorCode::Structural, "stego input width " + std::to_string(w[0]) +
                                        " differs from secret input width " + std::to_string(sw[0]));
    }
    switch (plan.strategy) {
        case Strategy::Vertical:
            if (w.size() != ls) {
                fail(ErrorCode::Structural, "vertical expansion keeps the depth: stego has " +
                                                std::to_string(w.size()) + " layers, secret " +
                                                std::to_string(ls));
            }
            if (w.back() != sw.back()) {
                fail(ErrorCode::Structural, "vertical expansion shares outputs: widths differ");
            }
            for (std::size_t l = 1; l + 1 < ls; ++l) {
                if (w[l] < sw[l]) {
                    fail(ErrorCode::Structural, "vertical expansion narrows " + layer_str(l));
                }
            }
            break;
        case Strategy::Horizontal:
            if (w.size() <= ls) {
                fail(ErrorCode::Structural, "horizontal expansion must append layers");
            }
            for (std::size_t l = 1; l < ls; ++l) {
                if (w[l] != sw[l]) {
                    fail(ErrorCode::Structural,
                         "horizontal expansion must keep secret width at " + layer_str(l));
                }
            }
            break;
        case Strategy::Mixed:
            if (w.size() <= ls) {
                fail(ErrorCode::Structural, "mixed expansion must append layers");
            }
            for (std::size_t l = 1; l < ls; ++l) {
                if (w[l] < sw[l]) {
                    fail(ErrorCode::Structural, "mixed expansion narrows " + layer_str(l));
                }
            }
            break;
    }
}

FunctionSpec
stego_spec(const FunctionSpec& secret, const ExpansionPlan& plan) {
    validate_plan(secret, plan);
    FunctionSpec spec;
    spec.widths = plan.stego_widths;
    spec.activation = secret.activation;
    spec.rff = secret.rff;
    spec.validate();
    return spec;
}

StegoKey
keygen(const FunctionSpec& secret, const ExpansionPlan& plan) {
    const FunctionSpec spec = stego_spec(secret, plan);
    const auto widths = key_layer_widths(spec);
    StegoKey key;
    key.strategy = plan.strategy;
    key.shared_io = true;
    key.layer_bits.resize(widths.size());
    for (std::size_t l = 0; l < widths.size(); ++l) {
        key.layer_bits[l].assign(widths[l], 0);
    }
    const std::size_t end = carrying_end(secret, plan.strategy);
    for (std::size_t l = 1; l < end; ++l) {
        CounterRng rng(derive_seed(plan.placement_seed, l));
        const auto picks = sample_without_replacement(widths[l], secret.widths[l], rng);
        for (std::size_t p : picks) {
            key.layer_bits[l][p] = 1;
        }
    }
    return key;
}

ExpansionPlan
plan_from_key(const FunctionSpec& secret, const StegoKey& key) {
    if (key.layer_count() < 3) {
        fail(ErrorCode::Key, "key describes fewer than three layers");
    }
    ExpansionPlan plan;
    plan.strategy = key.strategy;
    plan.stego_widths.reserve(key.layer_count());
    for (const auto& bits : key.layer_bits) {
        plan.stego_widths.push_back(bits.size());
    }
    if (plan.stego_widths[0] != secret.encoded_input_width()) {
        fail(ErrorCode::Key, "key input layer has " + std::to_string(plan.stego_widths[0]) +
                                 " bits, secret function takes " +
                                 std::to_string(secret.encoded_input_width()));
    }
    plan.stego_widths[0] = secret.input_dim();
    validate_plan(secret, plan);
    return plan;
}

Scaffold
embed(const ModelFile& secret, const StegoKey& key, std::uint64_t init_seed) {
    const FunctionSpec& ss = secret.spec;
    secret.params.require_congruent(ss);
    Scaffold out;
    out.spec = stego_spec(ss, plan_from_key(ss, key));
    require_key_congruent(key, out.spec);

    const FunctionSpec rs = recovered_spec(out.spec, key);
    if (rs.widths != ss.widths) {
        fail(ErrorCode::Key, "key secret widths " + describe(rs) +
                                 " do not match the hidden function " + describe(ss));
    }

    out.params = init_params(out.spec, init_seed);
    for (std::size_t l = 0; l < ss.matrix_count(); ++l) {
        const auto rows = key.secret_indices(l + 1);
        const auto cols = key.secret_indices(l);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) {
                out.params.weights[l](rows[i], cols[j]) = secret.params.weights[l](i, j);
            }
            out.params.biases[l][rows[i]] = secret.params.biases[l][i];
        }
    }
    out.mask = mask_from_key(key, out.spec);

    const ParameterSet check = gather_secret_params(out.spec, out.params, key);
    if (!bit_identical(check, secret.params)) {
        fail(ErrorCode::Structural, "internal error: scaffold does not recover the hidden function");
    }
    return out;
}

double
expansion_rate(const FunctionSpec& secret, const FunctionSpec& stego) {
    return static_cast<double>(parameter_count(stego)) /
           static_cast<double>(parameter_count(secret));
}

}  // namespace stegainr
