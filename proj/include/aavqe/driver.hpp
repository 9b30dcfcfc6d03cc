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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "aavqe/ansatz.hpp"
#include "aavqe/estimator.hpp"
#include "aavqe/pauli.hpp"
#include "aavqe/spsa.hpp"
#include "aavqe/state_vector.hpp"

namespace aavqe {

/// Discretization of the interpolation parameter. The default grid is
/// linear: s_i = i * delta_s for i = 0..T with T = ceil(1/delta_s) and the
/// last point clamped to exactly 1. A custom monotone grid (0 ... 1) can be
/// supplied instead.
struct ScheduleConfig {
    double delta_s = 0.05;
    std::vector<double> custom_grid;  // empty = linear from delta_s
    int iterations_per_step = 100;
    ShotBudget budget = ShotBudget::exact();
    std::uint64_t master_seed = 0;

    /// Re-run a step once with fresh perturbations when its energy rises
    /// above the previous step's by more than half the previous gap. The
    /// gap comes from dense diagonalization, so the check is active only
    /// up to this many qubits.
    bool retry_on_divergence = true;
    int retry_gap_max_qubits = 8;

    std::vector<double> grid() const;
    void validate() const;
};

/// Basis states satisfying this predicate count as problem solutions; wired
/// to clause evaluation for EXACT COVER runs.
using SolutionPredicate = std::function<bool(std::uint64_t)>;

struct VqeOptions {
    /// Master for per-evaluation sampling seeds (seed_i = master XOR i).
    std::uint64_t sampling_seed = 0;
    /// Checked against the diagonal samples of every sampled evaluation
    /// until the first hit.
    SolutionPredicate solution_check;
    /// Also evaluate the exact energy at every traced iterate (affordable
    /// up to kDenseMaxQubits; ignored above).
    bool record_exact_energies = true;
};

struct VqeResult {
    OptTrace trace;
    StateVector final_state;
    /// Exact energies aligned with trace.points (empty when not recorded).
    std::vector<double> exact_energies;
    std::optional<double> final_energy_exact;
    std::optional<double> final_energy_sampled;
    std::optional<int> first_solution_iteration;
    std::optional<std::uint64_t> first_solution_bitstring;
};

/// One VQE: minimizes the (exact or sampled) expectation of h over the
/// ansatz parameters with SPSA, starting from theta0.
VqeResult run_vqe(const PauliHamiltonian &h, const AnsatzSpec &spec,
                  const ParameterVector &theta0, const SpsaConfig &opt,
                  const ShotBudget &budget, const VqeOptions &options = {});

struct StepRecord {
    double s = 0.0;
    OptTrace trace;
    /// Per-iteration exact energies aligned with trace.points (empty when
    /// not recorded).
    std::vector<double> exact_energies;
    std::optional<double> final_energy_exact;
    std::optional<double> final_energy_sampled;
    std::optional<int> first_solution_iteration;
    std::vector<double> final_parameters;
    bool retried = false;
};

struct RunRecord {
    int n_qubits = 0;
    std::vector<StepRecord> steps;
    std::vector<double> final_parameters;
    std::uint64_t final_bitstring = 0;
    std::optional<double> first_solution_s;
    double wall_seconds = 0.0;
};

/// The full interpolation sweep: solve H(0) = h0 from random parameters,
/// then walk the s-grid, warm-starting every VQE from the previous step's
/// final parameters, until H(1) = hp. A failed step keeps the best-so-far
/// parameters and the sweep continues.
RunRecord run_aavqe(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                    const AnsatzSpec &spec, const ScheduleConfig &schedule,
                    const SpsaConfig &opt, const SolutionPredicate &solution_check = {});

/// Histogram of the earliest s at which each run sampled a solution.
/// Runs without a detection land in the `undetected` overflow bin. All
/// records must share one s-grid.
struct SolutionHistogram {
    std::vector<double> s_values;
    std::vector<int> counts;
    int undetected = 0;
};
SolutionHistogram first_solution_statistics(std::span<const RunRecord> records);

/// Predicate for run_aavqe wiring detection to clause evaluation.
SolutionPredicate make_exact_cover_predicate(const ExactCoverInstance &instance);

}  // namespace aavqe
