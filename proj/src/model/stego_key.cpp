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


#include "stegainr/model/stego_key.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stegainr/error.hpp"

namespace stegainr {

namespace {

std::string
trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string
format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string
strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Horizontal:
            return "horizontal";
        case Strategy::Vertical:
            return "vertical";
        case Strategy::Mixed:
            return "mixed";
    }
    return "unknown";
}

Strategy
parse_strategy(const std::string& name) {
    if (name == "horizontal") {
        return Strategy::Horizontal;
    }
    if (name == "vertical") {
        return Strategy::Vertical;
    }
    if (name == "mixed") {
        return Strategy::Mixed;
    }
    fail(ErrorCode::Format, "unknown strategy '" + name + "' (horizontal|vertical|mixed)");
}

std::size_t
StegoKey::popcount(std::size_t layer) const {
    std::size_t n = 0;
    for (auto b : layer_bits[layer]) {
        n += b != 0;
    }
    return n;
}

bool
StegoKey::is_secret(std::size_t layer, std::size_t index) const {
    if (layer == 0 && input_implicit()) {
        return true;
    }
    if (layer + 1 == layer_bits.size() && output_implicit()) {
        return true;
    }
    return layer_bits[layer][index] != 0;
}

std::size_t
StegoKey::secret_count(std::size_t layer) const {
    if ((layer == 0 && input_implicit()) || (layer + 1 == layer_bits.size() && output_implicit())) {
        return layer_bits[layer].size();
    }
    return popcount(layer);
}

std::vector<std::size_t>
StegoKey::secret_indices(std::size_t layer) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < layer_bits[layer].size(); ++i) {
        if (is_secret(layer, i)) {
            idx.push_back(i);
        }
    }
    return idx;
}

std::vector<std::size_t>
StegoKey::secret_layer_widths() const {
    std::size_t last = layer_bits.size();
    for (std::size_t l = layer_bits.size(); l-- > 0;) {
        if (secret_count(l) > 0) {
            last = l;
            break;
        }
    }
    if (last == layer_bits.size()) {
        fail(ErrorCode::Key, "key marks no secret neurons");
    }
    std::vector<std::size_t> widths;
    for (std::size_t l = 0; l <= last; ++l) {
        const std::size_t n = secret_count(l);
        if (n == 0) {
            fail(ErrorCode::Key, "key layer " + std::to_string(l) +
                                     " carries no secret neurons but a later layer does");
        }
        widths.push_back(n);
    }
    if (widths.size() < 3) {
        fail(ErrorCode::Key, "key describes a hidden function with only " +
                                 std::to_string(widths.size()) + " layers");
    }
    return widths;
}

std::vector<std::size_t>
key_layer_widths(const FunctionSpec& stego_spec) {
    std::vector<std::size_t> w = stego_spec.widths;
    if (!w.empty()) {
        w[0] = stego_spec.encoded_input_width();
    }
    return w;
}

void
require_key_congruent(const StegoKey& key, const FunctionSpec& stego_spec) {
    const auto widths = key_layer_widths(stego_spec);
    if (key.layer_bits.size() != widths.size()) {
        fail(ErrorCode::Structural, "key has " + std::to_string(key.layer_bits.size()) +
                                        " layers, stego function " + describe(stego_spec) +
                                        " has " + std::to_string(widths.size()));
    }
    for (std::size_t l = 0; l < widths.size(); ++l) {
        if (key.layer_bits[l].size() != widths[l]) {
            fail(ErrorCode::Structural, "key layer " + std::to_string(l) + " has " +
                                            std::to_string(key.layer_bits[l].size()) +
                                            " bits, stego layer width is " +
                                            std::to_string(widths[l]));
        }
    }
}

std::string
format_key_bits(const std::vector<std::vector<std::uint8_t>>& bits) {
    std::string out = "{";
    for (std::size_t l = 0; l < bits.size(); ++l) {
        if (l) {
            out += ", ";
        }
        for (auto b : bits[l]) {
            out += b ? '1' : '0';
        }
    }
    out += "}";
    return out;
}

std::vector<std::vector<std::uint8_t>>
parse_key_bits(const std::string& text) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
        fail(ErrorCode::Format, "key bits must be enclosed in braces: '" + t + "'");
    }
    const std::string body = t.substr(1, t.size() - 2);
    std::vector<std::vector<std::uint8_t>> bits;
    std::stringstream ss(body);
    std::string item;
    std::size_t layer = 0;
    while (std::getline(ss, item, ',')) {
        ++layer;
        const std::string entry = trim(item);
        if (entry.empty()) {
            fail(ErrorCode::Format, "key layer " + std::to_string(layer) + " is empty");
        }
        std::vector<std::uint8_t> row;
        row.reserve(entry.size());
        for (char c : entry) {
            if (c != '0' && c != '1') {
                fail(ErrorCode::Format, "key layer " + std::to_string(layer) +
                                            ": non-binary character '" + std::string(1, c) +
                                            "' in '" + entry + "'");
            }
            row.push_back(c == '1');
        }
        bits.push_back(std::move(row));
    }
    if (bits.empty()) {
        fail(ErrorCode::Format, "key has no layers");
    }
    if (!body.empty() && trim(body).back() == ',') {
        fail(ErrorCode::Format, "key layer " + std::to_string(layer + 1) + " is empty");
    }
    return bits;
}

std::string
format_key(const StegoKey& key) {
    std::string out = strategy_name(key.strategy) + "\n";
    out += format_key_bits(key.layer_bits) + "\n";
    out += std::string("shared_io ") + (key.shared_io ? "1" : "0") + "\n";
    if (key.message) {
        if (key.message->kind == SignalInfo::Kind::Image) {
            out += "message image\n";
        } else {
            out += "message grid " + format_double(key.message->lo) + " " +
                   format_double(key.message->hi) + "\n";
        }
    }
    return out;
}

StegoKey
parse_key(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!trim(line).empty()) {
            lines.push_back(trim(line));
        }
    }
    if (lines.size() < 3 || lines.size() > 4) {
        fail(ErrorCode::Format, "key file must have 3 or 4 non-empty lines, found " +
                                    std::to_string(lines.size()));
    }
    StegoKey key;
    key.strategy = parse_strategy(lines[0]);
    key.layer_bits = parse_key_bits(lines[1]);
    if (lines[2] == "shared_io 1") {
        key.shared_io = true;
    } else if (lines[2] == "shared_io 0") {
        key.shared_io = false;
    } else {
        fail(ErrorCode::Format, "expected 'shared_io 0|1', found '" + lines[2] + "'");
    }
    if (lines.size() == 4) {
        std::istringstream in(lines[3]);
        std::string tag, kind;
        in >> tag >> kind;
        if (tag != "message") {
            fail(ErrorCode::Format, "unexpected key line '" + lines[3] + "'");
        }
        SignalInfo info;
        if (kind == "image") {
            info.kind = SignalInfo::Kind::Image;
        } else if (kind == "grid") {
            info.kind = SignalInfo::Kind::Grid;
            if (!(in >> info.lo >> info.hi) || !std::isfinite(info.lo) || !std::isfinite(info.hi)) {
                fail(ErrorCode::Format, "grid message line needs finite '<lo> <hi>'");
            }
        } else {
            fail(ErrorCode::Format, "unknown message kind '" + kind + "'");
        }
        std::string extra;
        if (in >> extra) {
            fail(ErrorCode::Format, "trailing text on message line: '" + extra + "'");
        }
        key.message = info;
    }
    return key;
}

void
save_key(const std::string& path, const StegoKey& key) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    out << format_key(key);
    if (!out) {
        fail(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

StegoKey
load_key(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open key file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_key(buf.str());
}

}  // namespace stegainr
