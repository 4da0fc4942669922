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
#include <vector>

namespace stegainr {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t
splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64: draw i is mix(seed + (i + 1) * golden_gamma).
///
/// This is the one generator used for every random quantity in the project.
/// Its identity is
/// recorded in the model file format version; changing it breaks
/// reproducibility of stored RFF matrices.
class CounterRng {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        ++counter_;
        return splitmix64_mix(seed_ + counter_ * kGamma);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes exactly two draws.
    double normal();

    /// Uniform integer in [0, n), unbiased (rejection sampling). n > 0.
    std::uint64_t below(std::uint64_t n);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Independent child seed for a named sub-stream (epoch, pool item, ...).
constexpr std::uint64_t
derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64_mix(seed ^ splitmix64_mix(stream + CounterRng::kGamma));
}

/// k distinct indices from [0, n), uniformly, in draw order (partial
/// Fisher-Yates). Requires k <= n.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, CounterRng& rng);

}  // namespace stegainr
