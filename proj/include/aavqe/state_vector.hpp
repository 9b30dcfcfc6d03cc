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

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace aavqe {

using Complex = std::complex<double>;

/// Dense representations cap out here; 2^24 amplitudes is the largest
/// register the experiment code is meant to drive.
inline constexpr int kMaxQubits = 24;

enum class GateKind { RX, RY, RZ, CZ, CNOT, X, H };

/// A single gate instance. Rotation kinds carry one target and an angle in
/// radians; CZ and CNOT carry two targets (CNOT order: control, target).
struct Gate {
    GateKind kind;
    double angle = 0.0;
    std::array<int, 2> targets{-1, -1};
    int n_targets = 0;

    static Gate rx(int qubit, double angle);
    static Gate ry(int qubit, double angle);
    static Gate rz(int qubit, double angle);
    static Gate x(int qubit);
    static Gate h(int qubit);
    static Gate cz(int a, int b);
    static Gate cnot(int control, int target);
};

/// Dense N-qubit register: 2^N complex amplitudes. Qubit 0 is the least
/// significant bit of the amplitude index. Gate application mutates in
/// place; copy first if the previous state is still needed.
///
/// Conventions:
///   RY(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>
///   RZ(theta)    = diag(exp(-i theta/2), exp(+i theta/2))
///   CZ flips the sign of |11>.
class StateVector {
  public:
    /// |bitstring> with amplitude 1 at the given index.
    static StateVector basis_state(int n_qubits, std::uint64_t bitstring);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

    void apply(const Gate &gate);
    void apply(std::span<const Gate> circuit);

    double norm() const;
    std::vector<double> probabilities() const;

    /// `shots` computational-basis samples drawn with probability
    /// |amplitude|^2 each, deterministic in the seed.
    std::vector<std::uint64_t> sample(int shots, std::uint64_t seed) const;

    /// Basis index with the largest probability (lowest index on ties).
    std::uint64_t most_probable() const;

  private:
    StateVector(int n_qubits, std::vector<Complex> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    void apply_single(const std::array<Complex, 4> &u, int target);

    int n_qubits_ = 0;
    std::vector<Complex> amps_;
};

}  // namespace aavqe
