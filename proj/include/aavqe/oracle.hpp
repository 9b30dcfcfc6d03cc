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

#include <Eigen/Core>

#include "aavqe/exact_cover.hpp"
#include "aavqe/pauli.hpp"

namespace aavqe {

// Exact classical references used as ground truth by tests and experiment
// summaries. Dense diagonalization only; caps keep everything desk-scale.

inline constexpr int kProfileMaxQubits = 12;

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending, k entries
    Eigen::VectorXcd ground_state;
    double gap = 0.0;  // E1 - E0
};

/// Lowest k eigenpairs of the Hermitian-symmetrized dense matrix, k >= 2.
SpectrumReport exact_spectrum(const PauliHamiltonian &h, int k);

/// All assignments with exactly one true variable per clause, ascending.
std::vector<std::uint64_t> brute_force_exact_cover(const ExactCoverInstance &instance);

struct ProfilePoint {
    double s = 0.0;
    double gap = 0.0;
    double numerator = 0.0;  // |<psi1| (H_P - H_0) |psi0>|
    double ratio = 0.0;      // numerator / gap^2; +inf when degenerate
    bool degenerate = false;
};

struct AdiabaticErrorProfile {
    std::vector<ProfilePoint> points;
    double max_ratio = 0.0;
};

/// Transition-amplitude-over-gap-squared diagnostic along the interpolation
/// H(s) = (1-s) h0 + s hp. dH/ds = hp - h0 for this linear schedule. Points
/// with gap < 1e-9 are flagged degenerate and report an infinite ratio.
AdiabaticErrorProfile adiabatic_error_profile(const PauliHamiltonian &h0,
                                              const PauliHamiltonian &hp,
                                              std::span<const double> grid);

/// Smallest gap over a uniform grid of the given size; convenience wrapper
/// used by instance-hardness filters.
double min_interpolation_gap(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                             int grid_points);

std::vector<double> uniform_grid(int points);  // 0 .. 1 inclusive

}  // namespace aavqe
