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

#include "aavqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "aavqe/state_vector.hpp"

namespace aavqe {

bool PauliString::is_diagonal() const {
    return axes.find('X') == std::string::npos && axes.find('Y') == std::string::npos;
}

PauliMasks masks_of(const PauliString &term) {
    PauliMasks m;
    for (std::size_t q = 0; q < term.axes.size(); ++q) {
        const char axis = term.axes[q];
        const std::uint64_t bit = 1ull << q;
        switch (axis) {
            case 'I':
                break;
            case 'X':
                m.flip |= bit;
                m.support |= bit;
                break;
            case 'Y':
                m.flip |= bit;
                m.phase |= bit;
                m.support |= bit;
                ++m.y_count;
                break;
            case 'Z':
                m.phase |= bit;
                m.support |= bit;
                break;
            default:
                throw std::invalid_argument("invalid Pauli axis character");
        }
    }
    return m;
}

PauliHamiltonian::PauliHamiltonian(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, 24]");
    }
}

bool PauliHamiltonian::is_diagonal() const {
    for (const auto &t : terms_) {
        if (!t.is_diagonal()) return false;
    }
    return true;
}

HamiltonianBuilder::HamiltonianBuilder(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, 24]");
    }
}

HamiltonianBuilder &
HamiltonianBuilder::add_term(std::span<const std::pair<int, PauliAxis>> factors,
                             double coefficient) {
    std::string axes(static_cast<std::size_t>(n_qubits_), 'I');
    for (const auto &[qubit, axis] : factors) {
        if (qubit < 0 || qubit >= n_qubits_) {
            throw std::invalid_argument("qubit index out of range");
        }
        if (axes[static_cast<std::size_t>(qubit)] != 'I') {
            throw std::invalid_argument("repeated qubit in Pauli term");
        }
        axes[static_cast<std::size_t>(qubit)] = static_cast<char>(axis);
    }
    return add_string(axes, coefficient);
}

HamiltonianBuilder &
HamiltonianBuilder::add_term(std::initializer_list<std::pair<int, PauliAxis>> factors,
                             double coefficient) {
    return add_term(std::span<const std::pair<int, PauliAxis>>(factors.begin(), factors.size()),
                    coefficient);
}

HamiltonianBuilder &HamiltonianBuilder::add_string(const std::string &axes,
                                                   double coefficient) {
    if (axes.size() != static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("axes length must equal n_qubits");
    }
    if (axes.find_first_not_of("IXYZ") != std::string::npos) {
        throw std::invalid_argument("invalid Pauli axis character");
    }
    if (axes.find_first_not_of('I') == std::string::npos) {
        constant_ += coefficient;
    } else {
        coefficients_[axes] += coefficient;
    }
    return *this;
}

HamiltonianBuilder &HamiltonianBuilder::add_constant(double value) {
    constant_ += value;
    return *this;
}

HamiltonianBuilder &HamiltonianBuilder::add_scaled(const PauliHamiltonian &h,
                                                   double factor) {
    if (h.n_qubits() != n_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    for (const auto &t : h.terms()) add_string(t.axes, factor * t.coefficient);
    constant_ += factor * h.constant();
    return *this;
}

PauliHamiltonian HamiltonianBuilder::build() const {
    PauliHamiltonian h(n_qubits_);
    for (const auto &[axes, coefficient] : coefficients_) {
        if (std::abs(coefficient) < kCoefficientEpsilon) continue;
        h.terms_.push_back(PauliString{axes, coefficient});
    }
    h.constant_ = constant_;
    return h;
}

PauliHamiltonian build_driver(int n_qubits) {
    HamiltonianBuilder builder(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        builder.add_term({{q, PauliAxis::X}}, 1.0);
    }
    return builder.build();
}

PauliHamiltonian build_chain(const ChainSpec &spec) {
    if (spec.n_qubits < 2) {
        throw std::invalid_argument("chain requires n_qubits >= 2");
    }
    if ((spec.coupling_axis != PauliAxis::X && spec.coupling_axis != PauliAxis::Z) ||
        (spec.field_axis != PauliAxis::X && spec.field_axis != PauliAxis::Z)) {
        throw std::invalid_argument("chain axes must be X or Z");
    }
    HamiltonianBuilder builder(spec.n_qubits);
    for (int q = 0; q + 1 < spec.n_qubits; ++q) {
        builder.add_term({{q, spec.coupling_axis}, {q + 1, spec.coupling_axis}}, 1.0);
    }
    for (int q = 0; q < spec.n_qubits; ++q) {
        builder.add_term({{q, spec.field_axis}}, spec.lambda);
    }
    return builder.build();
}

PauliHamiltonian build_exact_cover(const ExactCoverInstance &instance) {
    instance.validate();
    HamiltonianBuilder builder(instance.n_vars);
    // (Z_i + Z_j + Z_k - 1)^2 with Z_q = (1 - sigma_q^z)/2 expands to
    //   1 - (sz_i + sz_j + sz_k)/2 + (sz_i sz_j + sz_i sz_k + sz_j sz_k)/2
    for (const auto &clause : instance.clauses) {
        builder.add_constant(1.0);
        for (int q : clause) {
            builder.add_term({{q, PauliAxis::Z}}, -0.5);
        }
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                builder.add_term({{clause[a], PauliAxis::Z}, {clause[b], PauliAxis::Z}},
                                 0.5);
            }
        }
    }
    return builder.build();
}

PauliHamiltonian interpolate(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                             double s) {
    if (h0.n_qubits() != hp.n_qubits()) {
        throw std::invalid_argument("interpolate: qubit count mismatch");
    }
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument("interpolate: s must lie in [0, 1]");
    }
    HamiltonianBuilder builder(h0.n_qubits());
    builder.add_scaled(h0, 1.0 - s);
    builder.add_scaled(hp, s);
    return builder.build();
}

Eigen::MatrixXcd to_dense(const PauliHamiltonian &h) {
    if (h.n_qubits() > kDenseMaxQubits) {
        throw std::length_error("to_dense supports at most 14 qubits");
    }
    const std::uint64_t dim = 1ull << h.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    static const std::complex<double> kIPower[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (const auto &term : h.terms()) {
        const PauliMasks masks = masks_of(term);
        const std::complex<double> base = kIPower[masks.y_count & 3] * term.coefficient;
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & masks.phase) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(col ^ masks.flip),
              static_cast<Eigen::Index>(col)) += sign * base;
        }
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += h.constant();
    }
    return m;
}

}  // namespace aavqe
