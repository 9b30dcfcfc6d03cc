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
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aavqe/exact_cover.hpp"

namespace aavqe {

enum class PauliAxis : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// One weighted tensor product of single-qubit Paulis. `axes` has one label
/// per qubit (index = qubit). An all-identity product never appears as a
/// term; constants live on the owning Hamiltonian.
struct PauliString {
    std::string axes;  // characters 'I','X','Y','Z', length n_qubits
    double coefficient = 0.0;

    bool is_diagonal() const;  // true when axes contain only I and Z
    bool operator==(const PauliString &) const = default;
};

/// Bit-mask view of a Pauli string used by expectation and matrix kernels:
///   P|i> = i^y_count * (-1)^popcount(i & phase) * |i XOR flip>
struct PauliMasks {
    std::uint64_t flip = 0;     // X and Y positions
    std::uint64_t phase = 0;    // Z and Y positions
    std::uint64_t support = 0;  // all non-identity positions
    int y_count = 0;
};
PauliMasks masks_of(const PauliString &term);

/// Coefficients smaller than this are dropped during construction.
inline constexpr double kCoefficientEpsilon = 1e-12;

/// Weighted sum of Pauli strings plus a real constant offset. Terms are
/// stored merged (no two share axes) in lexicographic axes order, which
/// keeps construction, serialization and measurement grouping
/// deterministic. Immutable after construction.
class PauliHamiltonian {
  public:
    explicit PauliHamiltonian(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliString> &terms() const { return terms_; }
    double constant() const { return constant_; }
    bool is_diagonal() const;

    bool operator==(const PauliHamiltonian &) const = default;

    friend class HamiltonianBuilder;

  private:
    int n_qubits_ = 0;
    std::vector<PauliString> terms_;
    double constant_ = 0.0;
};

/// Accumulates terms with merge-by-axes semantics, then freezes into a
/// PauliHamiltonian. All-identity contributions fold into the constant.
class HamiltonianBuilder {
  public:
    explicit HamiltonianBuilder(int n_qubits);

    /// factors: (qubit, axis) pairs; unlisted qubits are identity.
    HamiltonianBuilder &add_term(std::span<const std::pair<int, PauliAxis>> factors,
                                 double coefficient);
    HamiltonianBuilder &add_term(std::initializer_list<std::pair<int, PauliAxis>> factors,
                                 double coefficient);
    HamiltonianBuilder &add_string(const std::string &axes, double coefficient);
    HamiltonianBuilder &add_constant(double value);
    HamiltonianBuilder &add_scaled(const PauliHamiltonian &h, double factor);

    PauliHamiltonian build() const;

  private:
    int n_qubits_;
    std::map<std::string, double> coefficients_;
    double constant_ = 0.0;
};

/// Transverse-field / longitudinal spin chain with open boundaries:
///   H = sum_i sigma_i^a sigma_{i+1}^a + lambda * sum_i sigma_i^b
struct ChainSpec {
    int n_qubits = 2;
    double lambda = 0.0;
    PauliAxis coupling_axis = PauliAxis::X;
    PauliAxis field_axis = PauliAxis::X;
};

/// H_0 = sum_i sigma_i^x. Ground state |-...->, ground energy -N.
PauliHamiltonian build_driver(int n_qubits);

PauliHamiltonian build_chain(const ChainSpec &spec);

/// Diagonal clause-penalty Hamiltonian: sum over clauses of
/// (Z_i + Z_j + Z_k - 1)^2 with Z_q = (1 - sigma_q^z)/2, so basis state
/// |1> at qubit q counts as Z_q = 1 and a valid assignment has energy 0.
PauliHamiltonian build_exact_cover(const ExactCoverInstance &instance);

/// (1 - s) * h0 + s * hp with shared-axes merging.
PauliHamiltonian interpolate(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                             double s);

/// Number of qubits above which to_dense refuses to allocate.
inline constexpr int kDenseMaxQubits = 14;

/// Full 2^N x 2^N Hermitian matrix. Entries are exact (coefficients times
/// powers of i), so the result equals its adjoint bit for bit. Throws
/// std::length_error above kDenseMaxQubits.
Eigen::MatrixXcd to_dense(const PauliHamiltonian &h);

}  // namespace aavqe
