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


#include "stegainr/recovery/recovery.hpp"

#include <bit>
#include <string>

#include "stegainr/error.hpp"

namespace stegainr {

FunctionSpec
recovered_spec(const FunctionSpec& stego_spec, const StegoKey& key) {
    stego_spec.validate();
    require_key_congruent(key, stego_spec);
    std::vector<std::size_t> widths = key.secret_layer_widths();
    if (stego_spec.rff) {
        // The encoding is shared, so every encoded input must be secret.
        if (widths[0] != stego_spec.encoded_input_width()) {
            fail(ErrorCode::Key, "stego function uses RFF but the key marks only " +
                                     std::to_string(widths[0]) + " of " +
                                     std::to_string(stego_spec.encoded_input_width()) +
                                     " encoded inputs as secret");
        }
        widths[0] = stego_spec.input_dim();
    }
    FunctionSpec spec;
    spec.widths = std::move(widths);
    spec.activation = stego_spec.activation;
    spec.rff = stego_spec.rff;
    spec.validate();
    return spec;
}

ParameterSet
gather_secret_params(const FunctionSpec& stego_spec, const ParameterSet& stego_params,
                     const StegoKey& key) {
    stego_params.require_congruent(stego_spec);
    const FunctionSpec secret = recovered_spec(stego_spec, key);
    ParameterSet out = ParameterSet::zeros(secret);
    for (std::size_t l = 0; l < secret.matrix_count(); ++l) {
        const auto rows = key.secret_indices(l + 1);
        const auto cols = key.secret_indices(l);
        const Matrix& w = stego_params.weights[l];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) {
                out.weights[l](i, j) = w(rows[i], cols[j]);
            }
            out.biases[l][i] = stego_params.biases[l][rows[i]];
        }
    }
    return out;
}

ModelFile
recover(const ModelFile& stego, const StegoKey& key) {
    ModelFile secret;
    secret.role = ModelRole::Secret;
    secret.spec = recovered_spec(stego.spec, key);
    secret.params = gather_secret_params(stego.spec, stego.params, key);
    secret.signal = key.message ? *key.message : stego.signal;
    return secret;
}

double
ber(const ModelFile& a, const ModelFile& b) {
    if (!(a.spec == b.spec)) {
        fail(ErrorCode::Argument,
             "BER needs identical structures: " + describe(a.spec) + " vs " + describe(b.spec));
    }
    const auto x = stored_bits(a.params);
    const auto y = stored_bits(b.params);
    if (x.size() != y.size()) {
        fail(ErrorCode::Argument, "BER: parameter counts differ");
    }
    if (x.empty()) {
        return 0.0;
    }
    std::size_t diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        diff += static_cast<std::size_t>(std::popcount(x[i] ^ y[i]));
    }
    return static_cast<double>(diff) / (32.0 * static_cast<double>(x.size()));
}

Rendered
extract_message(const ModelFile& secret, std::size_t width, std::size_t height) {
    return render(secret, width, height);
}

}  // namespace stegainr
