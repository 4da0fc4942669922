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


// Command-line front end over the library.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stegainr/analysis/pool.hpp"
#include "stegainr/codec/io.hpp"
#include "stegainr/codec/render.hpp"
#include "stegainr/codec/synthetic.hpp"
#include "stegainr/error.hpp"
#include "stegainr/expansion/expansion.hpp"
#include "stegainr/expansion/hide.hpp"
#include "stegainr/log.hpp"
#include "stegainr/model/prng.hpp"
#include "stegainr/numerics/gradcheck.hpp"
#include "stegainr/platform.hpp"
#include "stegainr/recovery/recovery.hpp"
#include "stegainr/model/rff.hpp"
#include "stegainr/simd/kernels.hpp"

namespace {

using namespace stegainr;

constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;
constexpr int kExitArgument = 4;
constexpr int kExitDivergence = 5;
constexpr int kExitCheckFailed = 1;

int
exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Io:
            return kExitIo;
        case ErrorCode::Format:
        case ErrorCode::Checksum:
        case ErrorCode::Version:
        case ErrorCode::Truncated:
            return kExitFormat;
        case ErrorCode::Divergence:
            return kExitDivergence;
        case ErrorCode::Structural:
        case ErrorCode::Argument:
        case ErrorCode::Key:
            return kExitArgument;
    }
    return kExitArgument;
}

std::string
extension(const std::string& path) {
    return std::filesystem::path(path).extension().string();
}

// Seed from the flag; absent seeds are an error unless a person is typing.
std::uint64_t
resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return *seed;
    }
    if (!isatty(STDIN_FILENO)) {
        fail(ErrorCode::Argument, "--seed is required when not running interactively");
    }
    const auto t = static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
    warn("no --seed given, using time-derived seed " + std::to_string(t));
    return t;
}

struct Signal {
    CoordinateDataset data;
    SignalInfo info;
};

Signal
load_signal(const std::string& path) {
    const std::string ext = extension(path);
    if (ext == ".png") {
        return {image_to_dataset(read_png(path)), SignalInfo{}};
    }
    if (ext == ".grid") {
        const ScalarGrid g = read_grid(path);
        return {grid_to_dataset(g), SignalInfo{SignalInfo::Kind::Grid, g.lo, g.hi}};
    }
    fail(ErrorCode::Argument, "'" + path + "': expected a .png or .grid file");
}

void
write_rendered(const std::string& path, const Rendered& r) {
    const std::string ext = extension(path);
    if (const auto* img = std::get_if<RasterImage>(&r)) {
        if (ext != ".png") {
            fail(ErrorCode::Argument, "image output needs a .png path");
        }
        write_png(path, *img);
    } else {
        if (ext != ".grid") {
            fail(ErrorCode::Argument, "grid output needs a .grid path");
        }
        write_grid(path, std::get<ScalarGrid>(r));
    }
}

std::pair<std::size_t, std::size_t>
parse_shape(const std::string& s) {
    const auto x = s.find('x');
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument(s);
        }
        std::size_t used = 0;
        const auto w = std::stoull(s.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(s);
        const auto h = std::stoull(s.substr(x + 1), &used);
        if (used != s.size() - x - 1 || w == 0 || h == 0) throw std::invalid_argument(s);
        return {w, h};
    } catch (const std::exception&) {
        fail(ErrorCode::Argument, "shape must look like 64x64, got '" + s + "'");
    }
}

std::optional<RffConfig>
parse_rff(const std::string& s, std::uint64_t seed) {
    if (s.empty()) {
        return std::nullopt;
    }
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(s);
        std::size_t used = 0;
        const auto m = std::stoul(s.substr(0, comma), &used);
        if (used != comma || m == 0) throw std::invalid_argument(s);
        const double sigma = std::stod(s.substr(comma + 1), &used);
        if (used != s.size() - comma - 1 || !(sigma > 0)) throw std::invalid_argument(s);
        return RffConfig{static_cast<std::uint32_t>(m), sigma, derive_seed(seed, 0x726666)};
    } catch (const std::exception&) {
        fail(ErrorCode::Argument, "--rff must look like 32,1.5, got '" + s + "'");
    }
}

// Flags common to the training subcommands.
struct TrainFlags {
    explicit TrainFlags(double default_eta) : eta(default_eta) {}

    double eta;
    std::size_t epochs = 2000;
    std::size_t batch = 0;
    std::string loss = "sum";
    std::size_t log_every = 10;
    std::string log_path;
    std::string curve_path;

    TrainConfig config(std::uint64_t seed) const {
        TrainConfig c;
        c.eta = eta;
        c.epochs = epochs;
        c.batch = batch == 0 ? BatchPolicy::full() : BatchPolicy::subset(batch);
        c.seed = seed;
        c.log_every = log_every;
        c.reduction = loss == "mean" ? LossReduction::Mean : LossReduction::Sum;
        c.validate();
        return c;
    }
};

void
add_train_flags(CLI::App* cmd, TrainFlags& f, bool reports) {
    cmd->add_option("--eta", f.eta, "Learning rate")->capture_default_str();
    cmd->add_option("--epochs", f.epochs, "Full passes over the data")->capture_default_str();
    cmd->add_option("--batch", f.batch, "Samples drawn per epoch (0 = full batch)")
        ->capture_default_str();
    cmd->add_option("--loss", f.loss, "Loss reduction over samples")
        ->check(CLI::IsMember({"sum", "mean"}))
        ->capture_default_str();
    cmd->add_option("--log-every", f.log_every, "Epoch interval of the loss curve")
        ->capture_default_str();
    if (reports) {
        cmd->add_option("--log", f.log_path, "Write the text training log here");
        cmd->add_option("--curve", f.curve_path, "Write the epoch,loss CSV here");
    }
}

void
write_reports(const TrainFlags& f, const TrainReport& r) {
    if (!f.log_path.empty()) {
        std::ofstream out(f.log_path);
        write_report_log(out, r);
        if (!out) fail(ErrorCode::Io, "cannot write " + f.log_path);
    }
    if (!f.curve_path.empty()) {
        std::ofstream out(f.curve_path);
        write_loss_csv(out, r);
        if (!out) fail(ErrorCode::Io, "cannot write " + f.curve_path);
    }
}

int
finish_training(const TrainReport& r, const std::string& what) {
    std::printf("%s: %zu epochs, final loss %.9g, %.2f s\n", what.c_str(), r.epochs_completed,
                r.final_loss, r.wall_seconds);
    if (r.diverged) {
        std::fprintf(stderr, "error: %s diverged: %s\n", what.c_str(), r.diagnostic.c_str());
        return kExitDivergence;
    }
    return 0;
}

std::vector<std::size_t>
full_widths(std::size_t in, const std::vector<std::size_t>& hidden, std::size_t out) {
    std::vector<std::size_t> w{in};
    w.insert(w.end(), hidden.begin(), hidden.end());
    w.push_back(out);
    return w;
}

Activation
activation_flag(const std::string& s) {
    return parse_activation(s);
}

// Stego widths from the hidden-layer flag: outputs default to the secret's.
ExpansionPlan
make_plan(const FunctionSpec& secret, const std::string& strategy,
          const std::vector<std::size_t>& hidden, std::size_t out_width, std::uint64_t seed) {
    ExpansionPlan plan;
    plan.strategy = parse_strategy(strategy);
    plan.stego_widths =
        full_widths(secret.input_dim(), hidden, out_width == 0 ? secret.output_dim() : out_width);
    plan.placement_seed = seed;
    validate_plan(secret, plan);
    return plan;
}

std::vector<RasterImage>
load_covers(const std::vector<std::string>& specs, std::uint64_t seed) {
    std::vector<RasterImage> covers;
    for (const auto& s : specs) {
        // "synthetic:N[:WxH]" generates N procedural scenes.
        if (s.rfind("synthetic:", 0) == 0) {
            std::string rest = s.substr(10);
            std::string shape = "64x64";
            if (const auto c = rest.find(':'); c != std::string::npos) {
                shape = rest.substr(c + 1);
                rest = rest.substr(0, c);
            }
            std::size_t n = 0;
            try {
                n = std::stoull(rest);
            } catch (const std::exception&) {
                fail(ErrorCode::Argument, "bad cover spec '" + s + "'");
            }
            const auto [w, h] = parse_shape(shape);
            for (std::size_t i = 0; i < n; ++i) {
                covers.push_back(synthetic_scene(w, h, derive_seed(seed, 0x636f766572 + i)));
            }
        } else {
            covers.push_back(read_png(s));
        }
    }
    return covers;
}

}  // namespace

int
main(int argc, char** argv) {
    tune_allocator();
    CLI::App app{"stegainr: hide a coordinate network inside a larger one"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "stegainr 1.0.0");
    std::string isa = "auto";
    app.add_option("--isa", isa, "Kernel variant: auto, generic or avx2")
        ->check(CLI::IsMember({"auto", "generic", "avx2"}))
        ->capture_default_str();

    std::optional<std::uint64_t> seed;
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Seed for all randomness of this command");
    };

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit a coordinate network to an image or grid");
    std::string fit_data, fit_out, fit_rff, fit_act = "relu", fit_role = "secret";
    std::vector<std::size_t> fit_widths;
    TrainFlags fit_train{1e-4};
    fit_cmd->add_option("--data", fit_data, "Training signal (.png or .grid)")->required();
    fit_cmd->add_option("--widths", fit_widths, "Hidden layer widths, e.g. 64,64,64")
        ->delimiter(',')
        ->required();
    fit_cmd->add_option("--rff", fit_rff, "Random Fourier features: count,sigma");
    fit_cmd->add_option("--activation", fit_act, "Hidden activation")
        ->check(CLI::IsMember({"relu", "sine"}))
        ->capture_default_str();
    fit_cmd->add_option("--role", fit_role, "Role recorded in the model file")
        ->check(CLI::IsMember({"secret", "plain"}))
        ->capture_default_str();
    add_train_flags(fit_cmd, fit_train, true);
    add_seed(fit_cmd);
    fit_cmd->add_option("--out", fit_out, "Output model")->required();

    // keygen
    auto* key_cmd = app.add_subcommand("keygen", "Choose secret neuron positions in a stego net");
    std::string key_secret, key_strategy, key_out;
    std::vector<std::size_t> key_widths;
    std::size_t key_out_width = 0;
    key_cmd->add_option("--secret", key_secret, "Hidden model")->required();
    key_cmd->add_option("--strategy", key_strategy, "Expansion strategy")
        ->check(CLI::IsMember({"vertical", "horizontal", "mixed"}))
        ->required();
    key_cmd->add_option("--stego-widths", key_widths, "Hidden layer widths of the stego net")
        ->delimiter(',')
        ->required();
    key_cmd->add_option("--out-width", key_out_width,
                        "Stego output width (default: the secret's)");
    add_seed(key_cmd);
    key_cmd->add_option("--out", key_out, "Output key file")->required();

    // hide
    auto* hide_cmd = app.add_subcommand("hide", "Embed a hidden model and fit the cover");
    std::string hide_secret, hide_key, hide_cover, hide_out;
    TrainFlags hide_train{1e-3};
    hide_cmd->add_option("--secret", hide_secret, "Hidden model")->required();
    hide_cmd->add_option("--key", hide_key, "Key from keygen")->required();
    hide_cmd->add_option("--cover", hide_cover, "Cover signal (.png or .grid)")->required();
    add_train_flags(hide_cmd, hide_train, true);
    add_seed(hide_cmd);
    hide_cmd->add_option("--out", hide_out, "Output stego model")->required();

    // recover
    auto* rec_cmd = app.add_subcommand("recover", "Extract the hidden model with the key");
    std::string rec_stego, rec_key, rec_out;
    rec_cmd->add_option("--stego", rec_stego, "Stego model")->required();
    rec_cmd->add_option("--key", rec_key, "Key file")->required();
    rec_cmd->add_option("--out", rec_out, "Output model")->required();

    // render
    auto* ren_cmd = app.add_subcommand("render", "Sample a model on a regular grid");
    std::string ren_model, ren_shape, ren_out;
    ren_cmd->add_option("--model", ren_model, "Model file")->required();
    ren_cmd->add_option("--shape", ren_shape, "Width x height, e.g. 64x64")->required();
    ren_cmd->add_option("--out", ren_out, ".png for images, .grid for grids")->required();

    // metrics
    auto* met_cmd = app.add_subcommand("metrics", "Fidelity, bit error rate, expansion rate");
    met_cmd->require_subcommand(1);
    auto* psnr_cmd = met_cmd->add_subcommand("psnr", "PSNR in dB between two PNG images");
    std::string psnr_a, psnr_b;
    psnr_cmd->add_option("--a", psnr_a, "Reference image")->required();
    psnr_cmd->add_option("--b", psnr_b, "Test image")->required();
    auto* ber_cmd = met_cmd->add_subcommand("ber", "Bit error rate between two models");
    std::string ber_a, ber_b;
    ber_cmd->add_option("--a", ber_a, "First model")->required();
    ber_cmd->add_option("--b", ber_b, "Second model")->required();
    auto* erate_cmd = met_cmd->add_subcommand("erate", "Parameter expansion rate");
    std::string er_secret, er_stego;
    erate_cmd->add_option("--secret", er_secret, "Hidden model")->required();
    erate_cmd->add_option("--stego", er_stego, "Stego model")->required();

    // pool
    auto* pool_cmd = app.add_subcommand("pool", "Clean/stego model pools for steganalysis");
    pool_cmd->require_subcommand(1);
    auto* pb_cmd = pool_cmd->add_subcommand("build", "Train clean and stego pairs");
    std::string pb_secret, pb_strategy, pb_dir;
    std::vector<std::string> pb_covers;
    std::vector<std::size_t> pb_widths;
    std::size_t pb_out_width = 0, pb_count = 60, pb_workers = 1;
    TrainFlags pb_train{1e-4};
    pb_cmd->add_option("--secret", pb_secret, "Hidden model")->required();
    pb_cmd->add_option("--covers", pb_covers,
                       "Cover PNGs, or synthetic:N[:WxH] for procedural scenes")
        ->required();
    pb_cmd->add_option("--strategy", pb_strategy, "Expansion strategy")
        ->check(CLI::IsMember({"vertical", "horizontal", "mixed"}))
        ->required();
    pb_cmd->add_option("--stego-widths", pb_widths, "Hidden layer widths of the stego net")
        ->delimiter(',')
        ->required();
    pb_cmd->add_option("--out-width", pb_out_width, "Stego output width (default: the secret's)");
    pb_cmd->add_option("--count", pb_count, "Number of clean/stego pairs")->capture_default_str();
    pb_cmd->add_option("--workers", pb_workers, "Parallel training jobs")->capture_default_str();
    add_train_flags(pb_cmd, pb_train, false);
    add_seed(pb_cmd);
    pb_cmd->add_option("--out-dir", pb_dir, "Directory for models and manifest.csv")->required();
    auto* pe_cmd = pool_cmd->add_subcommand("export", "Export labeled parameter features as CSV");
    std::string pe_manifest, pe_out;
    std::size_t pe_features = 1000;
    pe_cmd->add_option("--manifest", pe_manifest, "manifest.csv from pool build")->required();
    pe_cmd->add_option("--features", pe_features, "Parameters sampled per model")
        ->capture_default_str();
    add_seed(pe_cmd);
    pe_cmd->add_option("--out", pe_out, "Output CSV")->required();

    // gradcheck
    auto* gc_cmd = app.add_subcommand("gradcheck", "Compare backprop with finite differences");
    std::vector<std::size_t> gc_widths{8, 8};
    std::size_t gc_in = 2, gc_out = 3, gc_samples = 16;
    std::string gc_act = "relu", gc_rff, gc_loss = "sum";
    double gc_tol = 1e-6;
    gc_cmd->add_option("--widths", gc_widths, "Hidden layer widths")
        ->delimiter(',')
        ->capture_default_str();
    gc_cmd->add_option("--in", gc_in, "Input dimension")->capture_default_str();
    gc_cmd->add_option("--out-dim", gc_out, "Output dimension")->capture_default_str();
    gc_cmd->add_option("--samples", gc_samples, "Random samples")->capture_default_str();
    gc_cmd->add_option("--activation", gc_act, "Hidden activation")
        ->check(CLI::IsMember({"relu", "sine"}))
        ->capture_default_str();
    gc_cmd->add_option("--rff", gc_rff, "Random Fourier features: count,sigma");
    gc_cmd->add_option("--loss", gc_loss, "Loss reduction")
        ->check(CLI::IsMember({"sum", "mean"}))
        ->capture_default_str();
    gc_cmd->add_option("--tolerance", gc_tol, "Maximum relative error")->capture_default_str();
    add_seed(gc_cmd);

    // synth
    auto* syn_cmd = app.add_subcommand("synth", "Write a procedural test signal");
    std::string syn_kind, syn_shape = "64x64", syn_out;
    syn_cmd->add_option("--kind", syn_kind, "Signal kind")
        ->check(CLI::IsMember({"face", "scene", "climate"}))
        ->required();
    syn_cmd->add_option("--shape", syn_shape, "Width x height")->capture_default_str();
    add_seed(syn_cmd);
    syn_cmd->add_option("--out", syn_out, ".png for face/scene, .grid for climate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitArgument;
    }

    try {
        if (isa != "auto") {
            const auto want = isa == "avx2" ? simd::Isa::Avx2 : simd::Isa::Generic;
            if (!simd::force_isa(want)) {
                fail(ErrorCode::Argument, "kernel variant '" + isa + "' is not supported here");
            }
        }

        if (*fit_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const Signal sig = load_signal(fit_data);
            FunctionSpec spec;
            spec.widths = full_widths(sig.data.coord_dim(), fit_widths, sig.data.feature_dim());
            spec.activation = activation_flag(fit_act);
            spec.rff = parse_rff(fit_rff, s);
            spec.validate();
            const TrainConfig cfg = fit_train.config(s);
            FitResult r = fit(spec, init_params(spec, s), sig.data, cfg);
            ModelFile m;
            m.role = fit_role == "secret" ? ModelRole::Secret : ModelRole::Plain;
            m.spec = spec;
            m.signal = sig.info;
            m.params = std::move(r.params);
            m.params.round_to_f32();
            save_model(fit_out, m);
            write_reports(fit_train, r.report);
            return finish_training(r.report, "fit " + describe(spec));
        }

        if (*key_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const ModelFile secret = load_model(key_secret);
            const ExpansionPlan plan =
                make_plan(secret.spec, key_strategy, key_widths, key_out_width, s);
            StegoKey key = keygen(secret.spec, plan);
            key.message = secret.signal;
            save_key(key_out, key);
            std::printf("stego %s, expansion rate %.6g\n",
                        describe(stego_spec(secret.spec, plan)).c_str(),
                        expansion_rate(secret.spec, stego_spec(secret.spec, plan)));
            return 0;
        }

        if (*hide_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const ModelFile secret = load_model(hide_secret);
            const StegoKey key = load_key(hide_key);
            const Signal cover = load_signal(hide_cover);
            const TrainConfig cfg = hide_train.config(derive_seed(s, 1));
            HideResult r = hide(secret, key, cover.data, cover.info, cfg, derive_seed(s, 0));
            save_model(hide_out, r.stego);
            write_reports(hide_train, r.report);
            const ChangeCensus& c = r.report.census;
            std::printf("frozen parameters changed: %zu of %zu\n", c.frozen_changed,
                        c.frozen_total);
            return finish_training(r.report, "hide into " + describe(r.stego.spec));
        }

        if (*rec_cmd) {
            const ModelFile secret = recover(load_model(rec_stego), load_key(rec_key));
            save_model(rec_out, secret);
            std::printf("recovered %s\n", describe(secret.spec).c_str());
            return 0;
        }

        if (*ren_cmd) {
            const auto [w, h] = parse_shape(ren_shape);
            write_rendered(ren_out, render(load_model(ren_model), w, h));
            return 0;
        }

        if (*psnr_cmd) {
            std::printf("%.6f\n", psnr(read_png(psnr_a), read_png(psnr_b)));
            return 0;
        }
        if (*ber_cmd) {
            std::printf("%.9g\n", ber(load_model(ber_a), load_model(ber_b)));
            return 0;
        }
        if (*erate_cmd) {
            std::printf("%.6f\n",
                        expansion_rate(load_model(er_secret).spec, load_model(er_stego).spec));
            return 0;
        }

        if (*pb_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const ModelFile secret = load_model(pb_secret);
            const ExpansionPlan plan = make_plan(secret.spec, pb_strategy, pb_widths,
                                                 pb_out_width, derive_seed(s, 0));
            PoolOptions opt;
            opt.train = pb_train.config(0);
            opt.workers = pb_workers;
            const auto covers = load_covers(pb_covers, s);
            const PoolManifest m = build_pool(covers, secret, plan, pb_count, s, pb_dir, opt);
            std::size_t diverged = 0;
            for (const auto& it : m.items) diverged += it.diverged ? 1 : 0;
            std::printf("pool: %zu models, %zu diverged\n", m.items.size(), diverged);
            return 0;
        }
        if (*pe_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const PoolManifest m = load_manifest(pe_manifest);
            const std::string base = std::filesystem::path(pe_manifest).parent_path().string();
            const std::string csv = export_features(m, base, pe_features, s);
            std::ofstream out(pe_out, std::ios::binary);
            out << csv;
            if (!out) fail(ErrorCode::Io, "cannot write " + pe_out);
            return 0;
        }

        if (*gc_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            FunctionSpec spec;
            spec.widths = full_widths(gc_in, gc_widths, gc_out);
            spec.activation = activation_flag(gc_act);
            spec.rff = parse_rff(gc_rff, s);
            spec.validate();
            const ParameterSet p = init_params(spec, s);
            CounterRng rng(derive_seed(s, 1));
            Matrix coords(gc_samples, gc_in), targets(gc_samples, gc_out);
            for (double& v : coords.values()) v = rng.uniform(-1.0, 1.0);
            for (double& v : targets.values()) v = rng.uniform(0.0, 1.0);
            GradcheckOptions opt;
            opt.reduction = gc_loss == "mean" ? LossReduction::Mean : LossReduction::Sum;
            const GradcheckReport r =
                gradcheck(spec, p, encode_inputs(spec, coords), targets, gc_tol, opt);
            std::printf("%s: max relative error %.3e at parameter %zu (%zu parameters, "
                        "%zu samples used, %zu skipped) %s\n",
                        describe(spec).c_str(), r.max_relative_error, r.worst_parameter,
                        r.parameters_checked, r.samples_used, r.samples_skipped,
                        r.passed ? "PASS" : "FAIL");
            return r.passed ? 0 : kExitCheckFailed;
        }

        if (*syn_cmd) {
            const std::uint64_t s = resolve_seed(seed);
            const auto [w, h] = parse_shape(syn_shape);
            if (syn_kind == "climate") {
                write_rendered(syn_out, synthetic_climate(h, w, s));
            } else {
                write_rendered(syn_out, syn_kind == "face" ? synthetic_face(w, h, s)
                                                           : synthetic_scene(w, h, s));
            }
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", std::string(error_code_name(e.code())).c_str(),
                     e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
