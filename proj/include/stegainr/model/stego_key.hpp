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
#include <optional>
#include <string>
#include <vector>

#include "stegainr/model/function_spec.hpp"

namespace stegainr {

enum class Strategy : std::uint8_t { Horizontal = 0, Vertical = 1, Mixed = 2 };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

/// What the hidden function represents, so a recovered model can be
/// rendered back into the right kind of signal.
struct SignalInfo {
    enum class Kind : std::uint8_t { Image = 0, Grid = 1 };
    Kind kind = Kind::Image;
    /// Grid value range used for min-max normalization; unused for images.
    double lo = 0.0;
    double hi = 1.0;

    friend bool operator==(const SignalInfo&, const SignalInfo&) = default;
};

/// Per-layer bitstrings marking secret neurons in a stego function.
///
/// Layer 0 has one bit per first-layer input (the encoded width when RFF is
/// used). With shared_io the input layer is implicitly secret for every
/// strategy, and the output layer is implicitly secret for vertical
/// expansion, where cover and secret share their outputs. Their bitstrings
/// are written all-zero by convention.
struct StegoKey {
    std::vector<std::vector<std::uint8_t>> layer_bits;
    Strategy strategy = Strategy::Vertical;
    bool shared_io = true;
    /// Optional: kind/range of the hidden message (key file line 4).
    std::optional<SignalInfo> message;

    std::size_t layer_count() const { return layer_bits.size(); }
    std::size_t popcount(std::size_t layer) const;

    bool input_implicit() const { return shared_io; }
    bool output_implicit() const { return shared_io && strategy == Strategy::Vertical; }

    /// Bit value after applying the shared-I/O convention.
    bool is_secret(std::size_t layer, std::size_t index) const;
    std::size_t secret_count(std::size_t layer) const;
    /// Secret neuron indices of a layer in ascending order.
    std::vector<std::size_t> secret_indices(std::size_t layer) const;

    /// Layer widths of the hidden function: the secret neuron count of each
    /// layer up to the last layer holding any. Throws ErrorCode::Key when a
    /// layer inside that prefix has no secret neuron, or none exist.
    std::vector<std::size_t> secret_layer_widths() const;

    friend bool operator==(const StegoKey&, const StegoKey&) = default;
};

/// Bit count of each key layer for a stego spec: fan_in(0) for the input
/// layer, widths[l] otherwise.
std::vector<std::size_t> key_layer_widths(const FunctionSpec& stego_spec);

/// Throws ErrorCode::Structural naming the first layer whose bit count does
/// not match `stego_spec`.
void require_key_congruent(const StegoKey& key, const FunctionSpec& stego_spec);

/// "{00, 1010, 1010101, 1101, 000}"
std::string format_key_bits(const std::vector<std::vector<std::uint8_t>>& bits);
/// Inverse of format_key_bits. Whitespace around entries is ignored.
/// Throws ErrorCode::Format naming the (1-based) offending layer.
std::vector<std::vector<std::uint8_t>> parse_key_bits(const std::string& text);

/// Key file text. An optional last line records the message kind:
/// "message image" or "message grid <lo> <hi>".
std::string format_key(const StegoKey& key);
StegoKey parse_key(const std::string& text);

void save_key(const std::string& path, const StegoKey& key);
StegoKey load_key(const std::string& path);

}  // namespace stegainr
