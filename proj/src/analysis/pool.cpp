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


#include "stegainr/analysis/pool.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "stegainr/error.hpp"
#include "stegainr/expansion/hide.hpp"
#include "stegainr/log.hpp"
#include "stegainr/model/prng.hpp"

namespace stegainr {

namespace {

namespace fs = std::filesystem;

std::string
numbered(const char* stem, std::size_t i, const char* ext) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_%04zu%s", stem, i, ext);
    return buf;
}

std::uint64_t
hash_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot read " + p.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return fnv1a64(bytes);
}

struct ItemResult {
    PoolItem stego;
    PoolItem clean;
    std::string error;
};

ItemResult
build_item(const RasterImage& cover, std::size_t cover_index, const ModelFile& secret,
           const ExpansionPlan& plan, std::size_t i, std::uint64_t seed, const fs::path& dir,
           const TrainConfig& base) {
    ItemResult r;
    const std::uint64_t s = derive_seed(seed, i);
    const CoordinateDataset ds = image_to_dataset(cover);
    const SignalInfo signal{};

    ExpansionPlan p = plan;
    p.placement_seed = derive_seed(s, 1);
    StegoKey key = keygen(secret.spec, p);
    key.message = secret.signal;

    TrainConfig cs = base;
    cs.seed = derive_seed(s, 3);
    HideResult h = hide(secret, key, ds, signal, cs, derive_seed(s, 2));

    ModelFile clean;
    clean.role = ModelRole::Plain;
    clean.spec = h.stego.spec;
    clean.signal = signal;
    TrainConfig cc = base;
    cc.seed = derive_seed(s, 5);
    FitResult fc = fit(clean.spec, init_params(clean.spec, derive_seed(s, 4)), ds, cc);
    clean.params = std::move(fc.params);
    clean.params.round_to_f32();

    const std::string stego_name = numbered("stego", i, ".sinr");
    const std::string clean_name = numbered("clean", i, ".sinr");
    save_model((dir / stego_name).string(), h.stego);
    save_key((dir / numbered("stego", i, ".key")).string(), key);
    save_model((dir / clean_name).string(), clean);

    r.stego = {1, stego_name, s, cover_index, h.report.diverged, hash_file(dir / stego_name)};
    r.clean = {0, clean_name, s, cover_index, fc.report.diverged, hash_file(dir / clean_name)};
    if (h.report.diverged) {
        warn("pool item " + std::to_string(i) + " stego diverged: " + h.report.diagnostic);
    }
    if (fc.report.diverged) {
        warn("pool item " + std::to_string(i) + " clean diverged: " + fc.report.diagnostic);
    }
    return r;
}

}  // namespace

PoolManifest
build_pool(const std::vector<RasterImage>& covers, const ModelFile& secret,
           const ExpansionPlan& plan, std::size_t count, std::uint64_t seed,
           const std::string& out_dir, const PoolOptions& options) {
    if (covers.empty()) {
        fail(ErrorCode::Argument, "pool needs at least one cover");
    }
    if (count == 0) {
        fail(ErrorCode::Argument, "pool count must be at least 1");
    }
    options.train.validate();
    stego_spec(secret.spec, plan);  // validates the plan up front
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        fail(ErrorCode::Io, "cannot create " + out_dir + ": " + ec.message());
    }

    std::vector<ItemResult> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::size_t ci = i % covers.size();
            try {
                results[i] = build_item(covers[ci], ci, secret, plan, i, seed, dir, options.train);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };
    const std::size_t n = std::clamp<std::size_t>(options.workers, 1, count);
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < n; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
        t.join();
    }

    PoolManifest m;
    for (std::size_t i = 0; i < count; ++i) {
        if (!results[i].error.empty()) {
            fail(ErrorCode::Io, "pool item " + std::to_string(i) + ": " + results[i].error);
        }
        m.items.push_back(results[i].clean);
        m.items.push_back(results[i].stego);
    }
    save_manifest((dir / "manifest.csv").string(), m);
    return m;
}

std::string
format_manifest(const PoolManifest& manifest) {
    std::ostringstream out;
    out << "label,path,seed,cover,status,fnv64\n";
    for (const auto& it : manifest.items) {
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(it.file_hash));
        out << it.label << ',' << it.path << ',' << it.seed << ',' << it.cover << ','
            << (it.diverged ? "diverged" : "ok") << ',' << hash << '\n';
    }
    return out.str();
}

PoolManifest
parse_manifest(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "label,path,seed,cover,status,fnv64") {
        fail(ErrorCode::Format, "manifest: bad header");
    }
    PoolManifest m;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) {
            f.push_back(cell);
        }
        const std::string where = "manifest line " + std::to_string(lineno);
        if (f.size() != 6 || (f[0] != "0" && f[0] != "1") || f[1].empty() ||
            (f[4] != "ok" && f[4] != "diverged")) {
            fail(ErrorCode::Format, where + ": malformed row");
        }
        PoolItem it;
        it.label = f[0] == "1" ? 1 : 0;
        it.path = f[1];
        it.diverged = f[4] == "diverged";
        try {
            std::size_t used = 0;
            it.seed = std::stoull(f[2], &used);
            if (used != f[2].size()) throw std::invalid_argument("seed");
            it.cover = std::stoull(f[3], &used);
            if (used != f[3].size()) throw std::invalid_argument("cover");
            it.file_hash = std::stoull(f[5], &used, 16);
            if (used != f[5].size()) throw std::invalid_argument("hash");
        } catch (const std::exception&) {
            fail(ErrorCode::Format, where + ": bad number");
        }
        m.items.push_back(std::move(it));
    }
    return m;
}

void
save_manifest(const std::string& path, const PoolManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    out << format_manifest(manifest);
    if (!out) {
        fail(ErrorCode::Io, "cannot write " + path);
    }
}

PoolManifest
load_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

std::vector<std::size_t>
feature_positions(const FunctionSpec& spec, std::size_t count, std::uint64_t seed) {
    const std::size_t n = parameter_count(spec);
    if (n < count) {
        fail(ErrorCode::Argument, describe(spec) + " has " + std::to_string(n) +
                                      " parameters, fewer than " + std::to_string(count));
    }
    const std::string d = describe(spec);
    const std::uint64_t spec_hash =
        fnv1a64({reinterpret_cast<const std::uint8_t*>(d.data()), d.size()});
    CounterRng rng(derive_seed(seed, spec_hash));
    auto pos = sample_without_replacement(n, count, rng);
    std::sort(pos.begin(), pos.end());
    return pos;
}

std::string
export_features(const PoolManifest& manifest, const std::string& base_dir, std::size_t count,
                std::uint64_t seed) {
    if (count == 0) {
        fail(ErrorCode::Argument, "feature count must be at least 1");
    }
    std::string out = "label";
    char buf[48];
    for (std::size_t i = 1; i <= count; ++i) {
        std::snprintf(buf, sizeof buf, ",f%04zu", i);
        out += buf;
    }
    out += '\n';
    std::vector<std::pair<FunctionSpec, std::vector<std::size_t>>> cache;
    for (const auto& it : manifest.items) {
        const std::string path = (fs::path(base_dir) / it.path).string();
        const ModelFile m = load_model(path);
        if (parameter_count(m.spec) < count) {
            fail(ErrorCode::Argument, path + " has " + std::to_string(parameter_count(m.spec)) +
                                          " parameters, fewer than " + std::to_string(count));
        }
        auto hit = std::find_if(cache.begin(), cache.end(),
                                [&](const auto& e) { return e.first == m.spec; });
        if (hit == cache.end()) {
            cache.emplace_back(m.spec, feature_positions(m.spec, count, seed));
            hit = cache.end() - 1;
        }
        const auto values = m.params.flatten();
        out += std::to_string(it.label);
        for (std::size_t p : hit->second) {
            std::snprintf(buf, sizeof buf, ",%.9g", static_cast<double>(static_cast<float>(values[p])));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace stegainr
