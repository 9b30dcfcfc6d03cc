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

#include "aavqe/oracle.hpp"

#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace aavqe {

namespace {

constexpr double kDegenerateGap = 1e-9;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const Eigen::MatrixXcd &m) {
    const Eigen::MatrixXcd symmetrized = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    return solver;
}

}  // namespace

SpectrumReport exact_spectrum(const PauliHamiltonian &h, int k) {
    if (k < 2) throw std::invalid_argument("exact_spectrum requires k >= 2");
    if (h.n_qubits() > kDenseMaxQubits) {
        throw std::length_error("exact_spectrum supports at most 14 qubits");
    }
    const auto solver = solve(to_dense(h));
    const auto &values = solver.eigenvalues();
    const int count = std::min<int>(k, static_cast<int>(values.size()));

    SpectrumReport report;
    report.eigenvalues.assign(values.data(), values.data() + count);
    report.ground_state = solver.eigenvectors().col(0);
    report.gap = values[1] - values[0];
    return report;
}

std::vector<std::uint64_t> brute_force_exact_cover(const ExactCoverInstance &instance) {
    instance.validate();
    std::vector<std::uint64_t> solutions;
    const std::uint64_t dim = 1ull << instance.n_vars;
    for (std::uint64_t a = 0; a < dim; ++a) {
        if (evaluate(instance, a) == 0) solutions.push_back(a);
    }
    return solutions;
}

AdiabaticErrorProfile adiabatic_error_profile(const PauliHamiltonian &h0,
                                              const PauliHamiltonian &hp,
                                              std::span<const double> grid) {
    if (h0.n_qubits() != hp.n_qubits()) {
        throw std::invalid_argument("adiabatic_error_profile: qubit count mismatch");
    }
    if (h0.n_qubits() > kProfileMaxQubits) {
        throw std::length_error("adiabatic_error_profile supports at most 12 qubits");
    }
    if (grid.empty()) throw std::invalid_argument("grid must be non-empty");

    const Eigen::MatrixXcd m0 = to_dense(h0);
    const Eigen::MatrixXcd mp = to_dense(hp);
    const Eigen::MatrixXcd dh = mp - m0;

    AdiabaticErrorProfile profile;
    profile.points.reserve(grid.size());
    for (double s : grid) {
        if (!(s >= 0.0 && s <= 1.0)) {
            throw std::invalid_argument("grid values must lie in [0, 1]");
        }
        const auto solver = solve((1.0 - s) * m0 + s * mp);
        ProfilePoint point;
        point.s = s;
        point.gap = solver.eigenvalues()[1] - solver.eigenvalues()[0];
        const Eigen::VectorXcd psi0 = solver.eigenvectors().col(0);
        const Eigen::VectorXcd psi1 = solver.eigenvectors().col(1);
        point.numerator = std::abs((psi1.adjoint() * dh * psi0)(0, 0));
        point.degenerate = point.gap < kDegenerateGap;
        point.ratio = point.degenerate
                          ? std::numeric_limits<double>::infinity()
                          : point.numerator / (point.gap * point.gap);
        profile.max_ratio = std::max(profile.max_ratio, point.ratio);
        profile.points.push_back(point);
    }
    return profile;
}

double min_interpolation_gap(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                             int grid_points) {
    const std::vector<double> grid = uniform_grid(grid_points);
    double min_gap = std::numeric_limits<double>::infinity();
    for (const ProfilePoint &p : adiabatic_error_profile(h0, hp, grid).points) {
        min_gap = std::min(min_gap, p.gap);
    }
    return min_gap;
}

std::vector<double> uniform_grid(int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            i == points - 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    }
    return grid;
}

}  // namespace aavqe
