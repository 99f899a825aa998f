// Copyright 2026 The holevo-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>

namespace holevo {

/// Seeded random source. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; all distributions are implemented here rather
/// than taken from <random>, whose distribution algorithms vary by vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Independent stream for trial `index` of a campaign seeded with `master`.
    /// Depends only on (master, index), never on scheduling.
    static Rng for_stream(std::uint64_t master, std::uint64_t index) {
        return Rng(stream_seed(master, index));
    }
    static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on (0, 1): never returns 0, so log() is always safe.
    double uniform();

    /// Uniform integer in [0, n), n >= 1, by rejection (no modulo bias).
    std::size_t uniform_index(std::size_t n);

    /// Standard normal via Box-Muller.
    double normal();

    /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2),
    /// so E|z|^2 = 1.
    std::complex<double> complex_normal();

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace holevo
