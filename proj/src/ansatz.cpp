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

#include "aavqe/ansatz.hpp"

#include <stdexcept>

#include "aavqe/rng.hpp"

namespace aavqe {

void AnsatzSpec::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("ansatz n_qubits must be in [1, 24]");
    }
    if (depth < 0) {
        throw std::invalid_argument("ansatz depth must be >= 0");
    }
}

std::vector<Gate> ansatz_circuit(const AnsatzSpec &spec, std::span<const double> theta) {
    spec.validate();
    if (theta.size() != static_cast<std::size_t>(spec.parameter_count())) {
        throw std::invalid_argument("parameter vector length does not match ansatz");
    }

    std::vector<Gate> gates;
    gates.reserve(static_cast<std::size_t>(spec.parameter_count() +
                                           spec.depth * (spec.n_qubits - 1)));
    std::size_t p = 0;
    auto rotation_layer = [&] {
        for (int q = 0; q < spec.n_qubits; ++q) {
            gates.push_back(Gate::ry(q, theta[p++]));
            gates.push_back(Gate::rz(q, theta[p++]));
        }
    };

    rotation_layer();
    for (int layer = 0; layer < spec.depth; ++layer) {
        for (int q = 0; q + 1 < spec.n_qubits; q += 2) gates.push_back(Gate::cz(q, q + 1));
        for (int q = 1; q + 1 < spec.n_qubits; q += 2) gates.push_back(Gate::cz(q, q + 1));
        rotation_layer();
    }
    return gates;
}

StateVector prepare_state(const AnsatzSpec &spec, std::span<const double> theta) {
    const std::vector<Gate> gates = ansatz_circuit(spec, theta);
    StateVector state = StateVector::basis_state(spec.n_qubits, 0);
    state.apply(gates);
    return state;
}

ParameterVector random_parameters(const AnsatzSpec &spec, std::uint64_t rng_seed) {
    spec.validate();
    std::mt19937_64 rng(rng_seed);
    ParameterVector theta(static_cast<std::size_t>(spec.parameter_count()));
    for (double &value : theta) value = uniform_angle(rng);
    return theta;
}

}  // namespace aavqe
