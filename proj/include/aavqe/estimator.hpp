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
#include <optional>
#include <span>
#include <vector>

#include "aavqe/exact_cover.hpp"
#include "aavqe/pauli.hpp"
#include "aavqe/state_vector.hpp"

namespace aavqe {

/// Either exact expectation values or a per-measurement-group shot count.
class ShotBudget {
  public:
    ShotBudget() = default;  // exact
    static ShotBudget exact() { return ShotBudget(); }
    static ShotBudget shots(int per_group);

    bool is_exact() const { return shots_per_group_ == 0; }
    int shots_per_group() const;

    bool operator==(const ShotBudget &) const = default;

  private:
    int shots_per_group_ = 0;
};

/// Exact <psi|H|psi> including the constant term.
double expectation_exact(const StateVector &state, const PauliHamiltonian &h);

/// Diagonal energy of one computational basis state under a diagonal
/// Hamiltonian; O(#terms), no state vector needed.
double diagonal_energy(const PauliHamiltonian &h, std::uint64_t basis_state);

struct SampledEstimate {
    double value = 0.0;
    /// Raw computational-basis shots of the diagonal measurement group
    /// (empty when the Hamiltonian has no diagonal terms). Callers reuse
    /// these for solution detection at no extra shot cost.
    std::vector<std::uint64_t> diagonal_samples;
};

/// Finite-shot estimate of <psi|H|psi>. Terms are grouped by measurement
/// basis: all I/Z-only terms form one group read from computational-basis
/// shots; every term containing X or Y gets its own group, measured after
/// rotating X to Z with H and Y to Z with RX(pi/2) on the affected qubits.
/// Groups draw `shots_per_group` samples each, in a fixed order (diagonal
/// group first, then remaining terms in storage order), with sub-seeds from
/// one engine seeded by rng_seed. Unbiased: the mean over seeds equals
/// expectation_exact.
SampledEstimate expectation_sampled_detail(const StateVector &state,
                                           const PauliHamiltonian &h,
                                           const ShotBudget &budget,
                                           std::uint64_t rng_seed);

double expectation_sampled(const StateVector &state, const PauliHamiltonian &h,
                           const ShotBudget &budget, std::uint64_t rng_seed);

/// First sampled bitstring satisfying every clause, if any. Samples decode
/// with qubit 0 = LSB = variable 0.
std::optional<std::uint64_t> detect_solution(std::span<const std::uint64_t> samples,
                                             const ExactCoverInstance &instance);

}  // namespace aavqe
