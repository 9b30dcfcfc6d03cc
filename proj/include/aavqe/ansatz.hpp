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
#include <span>
#include <vector>

#include "aavqe/state_vector.hpp"

namespace aavqe {

using ParameterVector = std::vector<double>;

/// Hardware-efficient layered circuit: a RY+RZ rotation pair on every qubit,
/// then `depth` repetitions of [CZ ladder over pairs (0,1),(2,3),... then
/// (1,2),(3,4),...; another rotation layer]. The same family serves every
/// problem; nothing in it depends on the Hamiltonian.
struct AnsatzSpec {
    int n_qubits = 1;
    int depth = 3;

    /// 2 * N * (depth + 1): RY and RZ angle per qubit per rotation layer.
    int parameter_count() const { return 2 * n_qubits * (depth + 1); }

    void validate() const;
};

/// Gate sequence for the given angles. Layout: layer by layer, within a
/// layer qubit by qubit, RY angle before RZ angle.
std::vector<Gate> ansatz_circuit(const AnsatzSpec &spec, std::span<const double> theta);

/// |0...0> run through ansatz_circuit. With all angles zero this is exactly
/// |0...0>. Throws std::invalid_argument on a parameter-count mismatch.
StateVector prepare_state(const AnsatzSpec &spec, std::span<const double> theta);

/// I.i.d. uniform angles in [-pi, pi), deterministic in the seed.
ParameterVector random_parameters(const AnsatzSpec &spec, std::uint64_t rng_seed);

}  // namespace aavqe
