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

#include "aavqe/driver.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "aavqe/oracle.hpp"
#include "aavqe/rng.hpp"

namespace aavqe {

std::vector<double> ScheduleConfig::grid() const {
    if (!custom_grid.empty()) {
        if (custom_grid.front() != 0.0 || custom_grid.back() != 1.0) {
            throw std::invalid_argument("custom grid must start at 0 and end at 1");
        }
        for (std::size_t i = 1; i < custom_grid.size(); ++i) {
            if (!(custom_grid[i] > custom_grid[i - 1])) {
                throw std::invalid_argument("custom grid must be strictly increasing");
            }
        }
        return custom_grid;
    }
    if (!(delta_s > 0.0 && delta_s <= 1.0)) {
        throw std::invalid_argument("delta_s must lie in (0, 1]");
    }
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double s = i * delta_s;
        if (s >= 1.0 - 1e-12) break;
        grid.push_back(s);
    }
    grid.push_back(1.0);
    return grid;
}

void ScheduleConfig::validate() const {
    grid();  // throws on a bad discretization
    if (iterations_per_step < 1) {
        throw std::invalid_argument("iterations_per_step must be >= 1");
    }
    if (retry_gap_max_qubits < 0) {
        throw std::invalid_argument("retry_gap_max_qubits must be >= 0");
    }
}

namespace {

// minimize() evaluates the objective in a fixed pattern: the calibration
// probes first (10 calls, only when no explicit step gain is set), then per
// iteration one trace evaluation followed by the two perturbed ones. The
// objective below keys off that pattern to tell trace calls apart and to
// map detections back onto iterations.
int calibration_calls_for(const SpsaConfig &opt) { return opt.step_gain ? 0 : 10; }

int iteration_of_call(int position, int calibration_calls) {
    if (position < calibration_calls) return 0;
    return (position - calibration_calls) / 3;
}

}  // namespace

VqeResult run_vqe(const PauliHamiltonian &h, const AnsatzSpec &spec,
                  const ParameterVector &theta0, const SpsaConfig &opt,
                  const ShotBudget &budget, const VqeOptions &options) {
    spec.validate();
    if (h.n_qubits() != spec.n_qubits) {
        throw std::invalid_argument("Hamiltonian and ansatz qubit counts differ");
    }
    if (theta0.size() != static_cast<std::size_t>(spec.parameter_count())) {
        throw std::invalid_argument("theta0 length does not match ansatz");
    }

    const int calibration_calls = calibration_calls_for(opt);
    const bool record_exact =
        options.record_exact_energies && h.n_qubits() <= kDenseMaxQubits;

    int call_position = 0;
    std::vector<double> exact_at_trace;
    std::optional<int> found_position;
    std::optional<std::uint64_t> found_bitstring;

    const Objective objective = [&](std::span<const double> theta) {
        const int position = call_position++;
        const StateVector state = prepare_state(spec, theta);
        if (budget.is_exact()) {
            return expectation_exact(state, h);
        }
        const SampledEstimate estimate = expectation_sampled_detail(
            state, h, budget, derive_seed(options.sampling_seed,
                                          static_cast<std::uint64_t>(position)));
        if (options.solution_check && !found_position) {
            for (std::uint64_t bits : estimate.diagonal_samples) {
                if (options.solution_check(bits)) {
                    found_position = position;
                    found_bitstring = bits;
                    break;
                }
            }
        }
        if (record_exact && position >= calibration_calls &&
            (position - calibration_calls) % 3 == 0) {
            exact_at_trace.push_back(expectation_exact(state, h));
        }
        return estimate.value;
    };

    OptTrace trace = minimize(theta0, objective, opt);
    StateVector final_state = prepare_state(spec, trace.final_parameters);
    VqeResult result{std::move(trace), std::move(final_state),
                     {},           std::nullopt,
                     std::nullopt, std::nullopt,
                     std::nullopt};

    if (record_exact) {
        if (budget.is_exact()) {
            result.exact_energies.reserve(result.trace.points.size());
            for (const TracePoint &p : result.trace.points) {
                result.exact_energies.push_back(p.value);
            }
        } else {
            result.exact_energies = std::move(exact_at_trace);
        }
    }
    if (h.n_qubits() <= 20) {
        result.final_energy_exact = expectation_exact(result.final_state, h);
    }
    if (!budget.is_exact()) {
        result.final_energy_sampled = expectation_sampled(
            result.final_state, h, budget,
            derive_seed(options.sampling_seed,
                        static_cast<std::uint64_t>(call_position)));
    }
    if (found_position) {
        result.first_solution_iteration =
            iteration_of_call(*found_position, calibration_calls);
        result.first_solution_bitstring = found_bitstring;
    }
    return result;
}

namespace {

double step_energy(const VqeResult &result) {
    if (result.final_energy_exact) return *result.final_energy_exact;
    if (result.final_energy_sampled) return *result.final_energy_sampled;
    return result.trace.final_objective;
}

}  // namespace

RunRecord run_aavqe(const PauliHamiltonian &h0, const PauliHamiltonian &hp,
                    const AnsatzSpec &spec, const ScheduleConfig &schedule,
                    const SpsaConfig &opt, const SolutionPredicate &solution_check) {
    if (h0.n_qubits() != hp.n_qubits()) {
        throw std::invalid_argument("run_aavqe: qubit count mismatch");
    }
    schedule.validate();
    opt.validate();

    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> grid = schedule.grid();

    RunRecord record;
    record.n_qubits = h0.n_qubits();
    record.steps.reserve(grid.size());

    ParameterVector theta =
        random_parameters(spec, derive_seed(schedule.master_seed, 0));

    const bool gap_oracle = schedule.retry_on_divergence &&
                            h0.n_qubits() <= schedule.retry_gap_max_qubits;
    std::optional<double> previous_energy;
    std::optional<double> previous_gap;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        const PauliHamiltonian hs = interpolate(h0, hp, s);
        const std::uint64_t seed_base = 1 + 4 * static_cast<std::uint64_t>(i);

        SpsaConfig step_opt = opt;
        step_opt.max_iterations = schedule.iterations_per_step;
        step_opt.rng_seed = derive_seed(schedule.master_seed, seed_base);

        VqeOptions vqe_options;
        vqe_options.sampling_seed = derive_seed(schedule.master_seed, seed_base + 1);
        vqe_options.solution_check = solution_check;

        VqeResult result = run_vqe(hs, spec, theta, step_opt, schedule.budget, vqe_options);
        double energy = step_energy(result);
        bool retried = false;

        if (i > 0 && gap_oracle && previous_energy && previous_gap &&
            !result.trace.failed && energy > *previous_energy + 0.5 * *previous_gap) {
            SpsaConfig retry_opt = step_opt;
            retry_opt.rng_seed = derive_seed(schedule.master_seed, seed_base + 2);
            VqeOptions retry_options = vqe_options;
            retry_options.sampling_seed = derive_seed(schedule.master_seed, seed_base + 3);
            VqeResult retry =
                run_vqe(hs, spec, theta, retry_opt, schedule.budget, retry_options);
            const double retry_energy = step_energy(retry);
            retried = true;
            if (retry_energy < energy) {
                // The first attempt's samples happened; its detection stands.
                if (result.first_solution_iteration) {
                    retry.first_solution_iteration = result.first_solution_iteration;
                    retry.first_solution_bitstring = result.first_solution_bitstring;
                }
                result = std::move(retry);
                energy = retry_energy;
            } else if (!result.first_solution_iteration && retry.first_solution_iteration) {
                result.first_solution_iteration = retry.first_solution_iteration;
                result.first_solution_bitstring = retry.first_solution_bitstring;
            }
        }

        if (!result.trace.failed) {
            theta = result.trace.final_parameters;
            if (std::isfinite(energy)) previous_energy = energy;
        }
        if (gap_oracle) previous_gap = exact_spectrum(hs, 2).gap;

        StepRecord step;
        step.s = s;
        step.trace = std::move(result.trace);
        step.exact_energies = std::move(result.exact_energies);
        step.final_energy_exact = result.final_energy_exact;
        step.final_energy_sampled = result.final_energy_sampled;
        step.first_solution_iteration = result.first_solution_iteration;
        step.final_parameters = theta;
        step.retried = retried;
        record.steps.push_back(std::move(step));
    }

    record.final_parameters = theta;
    record.final_bitstring = prepare_state(spec, theta).most_probable();
    for (const StepRecord &step : record.steps) {
        if (step.first_solution_iteration) {
            record.first_solution_s = step.s;
            break;
        }
    }
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

SolutionHistogram first_solution_statistics(std::span<const RunRecord> records) {
    SolutionHistogram histogram;
    if (records.empty()) return histogram;

    for (const StepRecord &step : records.front().steps) {
        histogram.s_values.push_back(step.s);
    }
    histogram.counts.assign(histogram.s_values.size(), 0);

    for (const RunRecord &record : records) {
        if (record.steps.size() != histogram.s_values.size()) {
            throw std::invalid_argument("records use different s-grids");
        }
        bool found = false;
        for (std::size_t i = 0; i < record.steps.size(); ++i) {
            if (std::abs(record.steps[i].s - histogram.s_values[i]) > 1e-12) {
                throw std::invalid_argument("records use different s-grids");
            }
            if (!found && record.steps[i].first_solution_iteration) {
                ++histogram.counts[i];
                found = true;
            }
        }
        if (!found) ++histogram.undetected;
    }
    return histogram;
}

SolutionPredicate make_exact_cover_predicate(const ExactCoverInstance &instance) {
    instance.validate();
    std::vector<std::uint64_t> masks;
    masks.reserve(instance.clauses.size());
    for (const auto &clause : instance.clauses) {
        masks.push_back((1ull << clause[0]) | (1ull << clause[1]) |
                        (1ull << clause[2]));
    }
    return [masks](std::uint64_t bits) {
        for (std::uint64_t mask : masks) {
            if (std::popcount(bits & mask) != 1) return false;
        }
        return true;
    };
}

}  // namespace aavqe
