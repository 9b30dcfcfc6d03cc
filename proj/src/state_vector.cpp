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

#include "aavqe/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aavqe/rng.hpp"

namespace aavqe {

namespace {

bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

Gate make_single(GateKind kind, int qubit, double angle) {
    Gate g;
    g.kind = kind;
    g.angle = angle;
    g.targets = {qubit, -1};
    g.n_targets = 1;
    return g;
}

Gate make_pair(GateKind kind, int a, int b) {
    Gate g;
    g.kind = kind;
    g.targets = {a, b};
    g.n_targets = 2;
    return g;
}

}  // namespace

Gate Gate::rx(int qubit, double angle) { return make_single(GateKind::RX, qubit, angle); }
Gate Gate::ry(int qubit, double angle) { return make_single(GateKind::RY, qubit, angle); }
Gate Gate::rz(int qubit, double angle) { return make_single(GateKind::RZ, qubit, angle); }
Gate Gate::x(int qubit) { return make_single(GateKind::X, qubit, 0.0); }
Gate Gate::h(int qubit) { return make_single(GateKind::H, qubit, 0.0); }
Gate Gate::cz(int a, int b) { return make_pair(GateKind::CZ, a, b); }
Gate Gate::cnot(int control, int target) { return make_pair(GateKind::CNOT, control, target); }

StateVector StateVector::basis_state(int n_qubits, std::uint64_t bitstring) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    const std::uint64_t dim = 1ull << n_qubits;
    if (bitstring >= dim) {
        throw std::invalid_argument("basis bitstring out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[bitstring] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

void StateVector::apply_single(const std::array<Complex, 4> &u, int target) {
    const std::uint64_t bit = 1ull << target;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t block = 0; block < dim; block += 2 * bit) {
        for (std::uint64_t i = block; i < block + bit; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i | bit];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i | bit] = u[2] * a0 + u[3] * a1;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    const int expected = is_rotation(gate.kind) || gate.kind == GateKind::X ||
                                 gate.kind == GateKind::H
                             ? 1
                             : 2;
    if (gate.n_targets != expected) {
        throw std::invalid_argument("gate has wrong number of targets");
    }
    for (int t = 0; t < gate.n_targets; ++t) {
        if (gate.targets[t] < 0 || gate.targets[t] >= n_qubits_) {
            throw std::invalid_argument("gate target out of range");
        }
    }
    if (gate.n_targets == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument("gate targets must be distinct");
    }
    if (is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }

    switch (gate.kind) {
        case GateKind::RX: {
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            apply_single({Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}},
                         gate.targets[0]);
            break;
        }
        case GateKind::RY: {
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            apply_single({Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}},
                         gate.targets[0]);
            break;
        }
        case GateKind::RZ: {
            // Diagonal: no pairing pass needed.
            const Complex p0 = std::polar(1.0, -gate.angle / 2.0);
            const Complex p1 = std::polar(1.0, gate.angle / 2.0);
            const std::uint64_t bit = 1ull << gate.targets[0];
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                amps_[i] *= (i & bit) ? p1 : p0;
            }
            break;
        }
        case GateKind::X: {
            const std::uint64_t bit = 1ull << gate.targets[0];
            const std::uint64_t dim = amps_.size();
            for (std::uint64_t block = 0; block < dim; block += 2 * bit) {
                for (std::uint64_t i = block; i < block + bit; ++i) {
                    std::swap(amps_[i], amps_[i | bit]);
                }
            }
            break;
        }
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            apply_single({Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}},
                         gate.targets[0]);
            break;
        }
        case GateKind::CZ: {
            const std::uint64_t mask =
                (1ull << gate.targets[0]) | (1ull << gate.targets[1]);
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                if ((i & mask) == mask) amps_[i] = -amps_[i];
            }
            break;
        }
        case GateKind::CNOT: {
            const std::uint64_t control = 1ull << gate.targets[0];
            const std::uint64_t target = 1ull << gate.targets[1];
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                if ((i & control) && !(i & target)) {
                    std::swap(amps_[i], amps_[i | target]);
                }
            }
            break;
        }
    }
}

void StateVector::apply(std::span<const Gate> circuit) {
    for (const Gate &g : circuit) apply(g);
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex &a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) probs[i] = std::norm(amps_[i]);
    return probs;
}

std::vector<std::uint64_t> StateVector::sample(int shots, std::uint64_t seed) const {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");

    std::vector<double> cumulative = probabilities();
    double running = 0.0;
    for (double &p : cumulative) {
        running += p;
        p = running;
    }
    // Normalization drift is below 1e-10; make the last bin catch-all.
    cumulative.back() = std::max(cumulative.back(), 1.0);

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> samples(static_cast<std::size_t>(shots));
    for (int s = 0; s < shots; ++s) {
        const double u = uniform_unit(rng);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        samples[static_cast<std::size_t>(s)] =
            static_cast<std::uint64_t>(it - cumulative.begin());
    }
    return samples;
}

std::uint64_t StateVector::most_probable() const {
    std::uint64_t best = 0;
    double best_p = std::norm(amps_[0]);
    for (std::uint64_t i = 1; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    return best;
}

}  // namespace aavqe
