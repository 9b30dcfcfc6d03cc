// Copyright 2026 The AAVQE Authors
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

#include <cstdint>
#include <numbers>
#include <random>

namespace aavqe {

/// Uniform double in [0, 1) built from the top 53 bits of the engine output.
/// std::mt19937_64 is fully specified by the standard, so this is
/// bit-reproducible across platforms (distributions are not).
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-pi, pi).
inline double uniform_angle(std::mt19937_64 &rng) {
    return (2.0 * uniform_unit(rng) - 1.0) * std::numbers::pi_v<double>;
}

/// +1 or -1 with equal probability.
inline int rademacher(std::mt19937_64 &rng) {
    return (rng() & 1ull) ? 1 : -1;
}

/// Splitting rule for evaluation seeds: seed_i = master XOR counter.
/// mt19937_64 initialization scrambles nearby seeds into unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return master ^ counter;
}

}  // namespace aavqe
