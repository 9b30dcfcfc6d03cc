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

#include "aavqe/estimator.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "aavqe/rng.hpp"

namespace aavqe {

ShotBudget ShotBudget::shots(int per_group) {
    if (per_group < 1) {
        throw std::invalid_argument("shots_per_group must be >= 1");
    }
    ShotBudget b;
    b.shots_per_group_ = per_group;
    return b;
}

int ShotBudget::shots_per_group() const {
    if (is_exact()) {
        throw std::logic_error("shots_per_group() called on an exact budget");
    }
    return shots_per_group_;
}

namespace {

void check_sizes(const StateVector &state, const PauliHamiltonian &h) {
    if (state.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
}

double term_expectation(const StateVector &state, const PauliString &term) {
    const PauliMasks masks = masks_of(term);
    static const Complex kIPower[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex y_phase = kIPower[masks.y_count & 3];
    const std::span<const Complex> amps = state.amplitudes();

    Complex acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double sign = (std::popcount(i & masks.phase) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps[i ^ masks.flip]) * (sign * amps[i]);
    }
    return term.coefficient * (y_phase * acc).real();
}

double parity_mean(std::span<const std::uint64_t> samples, std::uint64_t mask) {
    std::int64_t sum = 0;
    for (std::uint64_t s : samples) {
        sum += (std::popcount(s & mask) & 1) ? -1 : 1;
    }
    return static_cast<double>(sum) / static_cast<double>(samples.size());
}

}  // namespace

double expectation_exact(const StateVector &state, const PauliHamiltonian &h) {
    check_sizes(state, h);
    double energy = h.constant();
    for (const auto &term : h.terms()) {
        energy += term_expectation(state, term);
    }
    return energy;
}

double diagonal_energy(const PauliHamiltonian &h, std::uint64_t basis_state) {
    double energy = h.constant();
    for (const auto &term : h.terms()) {
        if (!term.is_diagonal()) {
            throw std::invalid_argument("diagonal_energy requires a diagonal Hamiltonian");
        }
        const PauliMasks masks = masks_of(term);
        const double sign = (std::popcount(basis_state & masks.phase) & 1) ? -1.0 : 1.0;
        energy += sign * term.coefficient;
    }
    return energy;
}

SampledEstimate expectation_sampled_detail(const StateVector &state,
                                           const PauliHamiltonian &h,
                                           const ShotBudget &budget,
                                           std::uint64_t rng_seed) {
    check_sizes(state, h);
    if (budget.is_exact()) {
        throw std::invalid_argument("expectation_sampled requires a finite shot budget");
    }
    const int shots = budget.shots_per_group();
    std::mt19937_64 group_seeds(rng_seed);

    SampledEstimate estimate;
    estimate.value = h.constant();

    std::vector<const PauliString *> diagonal_terms;
    std::vector<const PauliString *> rotated_terms;
    for (const auto &term : h.terms()) {
        (term.is_diagonal() ? diagonal_terms : rotated_terms).push_back(&term);
    }

    if (!diagonal_terms.empty()) {
        estimate.diagonal_samples = state.sample(shots, group_seeds());
        for (const PauliString *term : diagonal_terms) {
            estimate.value += term->coefficient *
                              parity_mean(estimate.diagonal_samples, masks_of(*term).phase);
        }
    }

    for (const PauliString *term : rotated_terms) {
        StateVector rotated = state;
        for (std::size_t q = 0; q < term->axes.size(); ++q) {
            if (term->axes[q] == 'X') {
                rotated.apply(Gate::h(static_cast<int>(q)));
            } else if (term->axes[q] == 'Y') {
                rotated.apply(Gate::rx(static_cast<int>(q), std::numbers::pi_v<double> / 2));
            }
        }
        const std::vector<std::uint64_t> samples = rotated.sample(shots, group_seeds());
        estimate.value +=
            term->coefficient * parity_mean(samples, masks_of(*term).support);
    }
    return estimate;
}

double expectation_sampled(const StateVector &state, const PauliHamiltonian &h,
                           const ShotBudget &budget, std::uint64_t rng_seed) {
    return expectation_sampled_detail(state, h, budget, rng_seed).value;
}

std::optional<std::uint64_t> detect_solution(std::span<const std::uint64_t> samples,
                                             const ExactCoverInstance &instance) {
    for (std::uint64_t sample : samples) {
        if (evaluate(instance, sample) == 0) return sample;
    }
    return std::nullopt;
}

}  // namespace aavqe
