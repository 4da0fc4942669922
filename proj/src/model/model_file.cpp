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


#include "stegainr/model/model_file.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>

#include "stegainr/error.hpp"

namespace stegainr {

namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'I', 'N', 'R'};

class Writer {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u16(std::uint16_t v) { put(v, 2); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }
    void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void raw(std::span<const std::uint8_t> b) { bytes_.insert(bytes_.end(), b.begin(), b.end()); }
    std::vector<std::uint8_t>& bytes() { return bytes_; }

private:
    void put(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i) {
            bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    std::vector<std::uint8_t> bytes_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}
    std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
    std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
    std::uint64_t u64() { return get(8); }
    float f32() { return std::bit_cast<float>(u32()); }
    double f64() { return std::bit_cast<double>(u64()); }
    std::size_t offset() const { return at_; }
    std::size_t remaining() const { return b_.size() - at_; }
    void need(std::size_t n, const char* what) const {
        if (remaining() < n) {
            fail(ErrorCode::Truncated, std::string("model file truncated while reading ") + what);
        }
    }

private:
    std::uint64_t get(int n) {
        need(static_cast<std::size_t>(n), "header");
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i) {
            v |= static_cast<std::uint64_t>(b_[at_ + i]) << (8 * i);
        }
        at_ += static_cast<std::size_t>(n);
        return v;
    }
    std::span<const std::uint8_t> b_;
    std::size_t at_ = 0;
};

// Upper bounds that keep a corrupt header from requesting absurd allocations.
constexpr std::uint32_t kMaxLayers = 1024;
constexpr std::uint32_t kMaxWidth = 1u << 20;

}  // namespace

std::string
role_name(ModelRole role) {
    switch (role) {
        case ModelRole::Plain:
            return "plain";
        case ModelRole::Secret:
            return "secret";
        case ModelRole::Stego:
            return "stego";
    }
    return "unknown";
}

std::uint64_t
fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<std::uint8_t>
encode_model(const ModelFile& model) {
    model.spec.validate();
    model.params.require_congruent(model.spec);

    Writer w;
    w.raw(kMagic);
    w.u16(kModelFormatVersion);
    w.u8(static_cast<std::uint8_t>(model.role));
    w.u8(kPrngCounterSplitMix64);
    w.u8(static_cast<std::uint8_t>(model.spec.activation));
    w.u32(static_cast<std::uint32_t>(model.spec.widths.size()));
    for (auto width : model.spec.widths) {
        w.u32(static_cast<std::uint32_t>(width));
    }
    w.u8(model.spec.rff ? 1 : 0);
    if (model.spec.rff) {
        w.u32(model.spec.rff->frequencies);
        w.f64(model.spec.rff->sigma);
        w.u64(model.spec.rff->seed);
    }
    w.u8(static_cast<std::uint8_t>(model.signal.kind));
    w.f64(model.signal.lo);
    w.f64(model.signal.hi);

    const std::vector<double> flat = model.params.flatten();
    w.u64(flat.size());
    for (double v : flat) {
        w.f32(static_cast<float>(v));
    }
    w.u64(fnv1a64(w.bytes()));
    return std::move(w.bytes());
}

ModelFile
decode_model(std::span<const std::uint8_t> bytes) {
    const std::size_t head = std::min<std::size_t>(bytes.size(), 4);
    if (!std::equal(bytes.begin(), bytes.begin() + head, std::begin(kMagic))) {
        fail(ErrorCode::Format, "not a model file (bad magic)");
    }
    if (head < 4) {
        fail(ErrorCode::Truncated, "model file truncated inside the magic");
    }
    Reader r(bytes.subspan(4));
    const std::uint16_t version = r.u16();
    if (version != kModelFormatVersion) {
        fail(ErrorCode::Version, "unsupported model format version " + std::to_string(version) +
                                     " (this build reads " +
                                     std::to_string(kModelFormatVersion) + ")");
    }

    ModelFile model;
    const std::uint8_t role = r.u8();
    const std::uint8_t prng = r.u8();
    const std::uint8_t activation = r.u8();
    const std::uint32_t layers = r.u32();
    if (layers > kMaxLayers) {
        fail(ErrorCode::Format, "implausible layer count " + std::to_string(layers));
    }
    r.need(4ull * layers, "layer widths");
    for (std::uint32_t l = 0; l < layers; ++l) {
        const std::uint32_t width = r.u32();
        if (width > kMaxWidth) {
            fail(ErrorCode::Format, "implausible width " + std::to_string(width));
        }
        model.spec.widths.push_back(width);
    }
    const std::uint8_t has_rff = r.u8();
    if (has_rff > 1) {
        fail(ErrorCode::Format, "bad RFF flag");
    }
    if (has_rff) {
        RffConfig rff;
        rff.frequencies = r.u32();
        rff.sigma = r.f64();
        rff.seed = r.u64();
        if (rff.frequencies > kMaxWidth) {
            fail(ErrorCode::Format, "implausible RFF frequency count");
        }
        model.spec.rff = rff;
    }
    const std::uint8_t signal_kind = r.u8();
    model.signal.lo = r.f64();
    model.signal.hi = r.f64();
    const std::uint64_t count = r.u64();
    if (count > (r.remaining() / 4)) {
        fail(ErrorCode::Truncated, "model file truncated in parameter payload");
    }
    std::vector<double> flat;
    flat.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        flat.push_back(static_cast<double>(r.f32()));
    }
    const std::size_t checked = 4 + r.offset();
    if (r.remaining() < 8) {
        fail(ErrorCode::Truncated, "model file truncated before checksum");
    }
    const std::uint64_t stored = r.u64();
    if (r.remaining() != 0) {
        fail(ErrorCode::Format, "trailing bytes after checksum");
    }
    if (stored != fnv1a64(bytes.first(checked))) {
        fail(ErrorCode::Checksum, "model file checksum mismatch");
    }

    // Header fields are only trusted once the checksum has passed.
    if (role > static_cast<std::uint8_t>(ModelRole::Stego)) {
        fail(ErrorCode::Format, "unknown role tag " + std::to_string(role));
    }
    model.role = static_cast<ModelRole>(role);
    if (prng != kPrngCounterSplitMix64) {
        fail(ErrorCode::Format, "unknown PRNG id " + std::to_string(prng));
    }
    if (activation > static_cast<std::uint8_t>(Activation::Identity)) {
        fail(ErrorCode::Format, "unknown activation tag " + std::to_string(activation));
    }
    model.spec.activation = static_cast<Activation>(activation);
    if (signal_kind > static_cast<std::uint8_t>(SignalInfo::Kind::Grid)) {
        fail(ErrorCode::Format, "unknown signal kind " + std::to_string(signal_kind));
    }
    model.signal.kind = static_cast<SignalInfo::Kind>(signal_kind);
    try {
        model.spec.validate();
        model.params = ParameterSet::unflatten(model.spec, flat);
    } catch (const Error& e) {
        fail(ErrorCode::Format, std::string("inconsistent model header: ") + e.what());
    }
    if (!model.params.all_finite()) {
        fail(ErrorCode::Format, "model contains non-finite parameters");
    }
    return model;
}

void
save_model(const std::string& path, const ModelFile& model) {
    const auto bytes = encode_model(model);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        fail(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

ModelFile
load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open model file '" + path + "'");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_model(bytes);
}

std::vector<std::uint32_t>
stored_bits(const ParameterSet& params) {
    std::vector<std::uint32_t> bits;
    bits.reserve(params.count());
    for (double v : params.flatten()) {
        bits.push_back(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    }
    return bits;
}

}  // namespace stegainr
