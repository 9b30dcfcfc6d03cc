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
#include <random>
#include <span>
#include <string>
#include <vector>

namespace aavqe {

using Objective = std::function<double(std::span<const double>)>;

/// Simultaneous-perturbation stochastic approximation. Gain sequences:
///   c_k = c / (k+1)^gamma        (perturbation size)
///   a_k = a / (A+k+1)^alpha      (step size)
/// Defaults follow Spall's published guidelines (alpha 0.602, gamma 0.101).
/// When step_gain is unset, minimize() calibrates `a` from 5 perturbation
/// pairs (10 objective calls) at theta0 so the first step moves each
/// coordinate by about step_target radians. When stability_offset is unset
/// it resolves to 0.1 * max_iterations.
struct SpsaConfig {
    std::optional<double> step_gain{};         // a
    double step_target = 0.1;                  // calibration goal, radians
    double perturbation = 0.1;                 // c
    std::optional<double> stability_offset{};  // A
    double alpha = 0.602;
    double gamma = 0.101;
    int max_iterations = 100;
    int convergence_window = 50;
    double convergence_tol = 1e-4;
    int snapshot_stride = 0;  // record theta every k-th iteration; 0 = never
    std::uint64_t rng_seed = 0;

    void validate() const;
    double resolved_stability_offset() const;
    double step_gain_at(int k, double resolved_gain) const;
    double perturbation_at(int k) const;
};

struct TracePoint {
    int iteration = 0;
    double value = 0.0;
    bool has_snapshot = false;
};

struct OptTrace {
    std::vector<TracePoint> points;
    std::vector<std::pair<int, std::vector<double>>> snapshots;
    std::vector<double> final_parameters;
    /// Value at the last recorded iterate (points.back().value).
    double final_objective = 0.0;
    double resolved_step_gain = 0.0;
    /// Exact accounting: calibration_calls plus 3 per full iteration
    /// (one trace evaluation, two perturbed evaluations); an iteration cut
    /// short by convergence contributes only its trace evaluation.
    int objective_calls = 0;
    int calibration_calls = 0;
    int iterations_run = 0;
    bool converged_early = false;
    bool failed = false;
    std::string failure_reason;
};

/// One SPSA update from iterate k: draws a Rademacher direction, evaluates
/// the objective at theta +- c_k * delta, and returns
/// theta - a_k * g where g_i = (f+ - f-) / (2 c_k) * delta_i.
/// Throws std::runtime_error on a non-finite objective value. The overload
/// without an engine seeds one from config.rng_seed and requires an
/// explicit step_gain (calibration happens in minimize()).
std::vector<double> spsa_gradient_step(std::span<const double> theta,
                                       const Objective &objective, int k,
                                       const SpsaConfig &config, std::mt19937_64 &rng,
                                       double resolved_gain);
std::vector<double> spsa_gradient_step(std::span<const double> theta,
                                       const Objective &objective, int k,
                                       const SpsaConfig &config);

/// Deterministic two-sided difference estimate with an injected direction;
/// the building block of spsa_gradient_step, exposed for direct checks.
std::vector<double> spsa_gradient_estimate(std::span<const double> theta,
                                           const Objective &objective, double ck,
                                           std::span<const int> delta);

/// Iterates SPSA from theta0. Each iteration records the objective at the
/// current iterate and then steps. Stops at max_iterations, or as soon as
/// the best recorded value has not improved by at least convergence_tol
/// for convergence_window consecutive iterations. A non-finite objective
/// value aborts with failed=true and a partial trace.
OptTrace minimize(const std::vector<double> &theta0, const Objective &objective,
                  const SpsaConfig &config);

}  // namespace aavqe
