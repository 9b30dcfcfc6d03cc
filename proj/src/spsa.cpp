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

#include "aavqe/spsa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "aavqe/rng.hpp"

namespace aavqe {

namespace {

struct NonFiniteObjective {};

double checked_eval(const Objective &objective, std::span<const double> theta) {
    const double value = objective(theta);
    if (!std::isfinite(value)) throw NonFiniteObjective{};
    return value;
}

std::vector<int> draw_direction(std::size_t dim, std::mt19937_64 &rng) {
    std::vector<int> delta(dim);
    for (int &d : delta) d = rademacher(rng);
    return delta;
}

}  // namespace

void SpsaConfig::validate() const {
    if (step_gain && !(*step_gain > 0.0)) {
        throw std::invalid_argument("spsa: step gain must be positive");
    }
    if (!(perturbation > 0.0)) {
        throw std::invalid_argument("spsa: perturbation must be positive");
    }
    if (!(gamma > 0.0 && gamma < alpha && alpha <= 1.0)) {
        throw std::invalid_argument("spsa: require 0 < gamma < alpha <= 1");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("spsa: max_iterations must be >= 1");
    }
    if (convergence_window < 1) {
        throw std::invalid_argument("spsa: convergence_window must be >= 1");
    }
    if (stability_offset && !(*stability_offset >= 0.0)) {
        throw std::invalid_argument("spsa: stability offset must be >= 0");
    }
    if (snapshot_stride < 0) {
        throw std::invalid_argument("spsa: snapshot_stride must be >= 0");
    }
    if (!(step_target > 0.0)) {
        throw std::invalid_argument("spsa: step_target must be positive");
    }
}

double SpsaConfig::resolved_stability_offset() const {
    return stability_offset ? *stability_offset : 0.1 * max_iterations;
}

double SpsaConfig::step_gain_at(int k, double resolved_gain) const {
    return resolved_gain / std::pow(resolved_stability_offset() + k + 1.0, alpha);
}

double SpsaConfig::perturbation_at(int k) const {
    return perturbation / std::pow(k + 1.0, gamma);
}

std::vector<double> spsa_gradient_estimate(std::span<const double> theta,
                                           const Objective &objective, double ck,
                                           std::span<const int> delta) {
    if (delta.size() != theta.size()) {
        throw std::invalid_argument("spsa: direction length mismatch");
    }
    std::vector<double> plus(theta.begin(), theta.end());
    std::vector<double> minus(theta.begin(), theta.end());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        plus[i] += ck * delta[i];
        minus[i] -= ck * delta[i];
    }
    const double f_plus = objective(plus);
    const double f_minus = objective(minus);
    if (!std::isfinite(f_plus) || !std::isfinite(f_minus)) {
        throw std::runtime_error("spsa: non-finite objective value");
    }
    const double slope = (f_plus - f_minus) / (2.0 * ck);
    std::vector<double> gradient(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        gradient[i] = slope * delta[i];  // delta_i^-1 == delta_i for +-1
    }
    return gradient;
}

std::vector<double> spsa_gradient_step(std::span<const double> theta,
                                       const Objective &objective, int k,
                                       const SpsaConfig &config, std::mt19937_64 &rng,
                                       double resolved_gain) {
    if (k < 0) throw std::invalid_argument("spsa: iteration index must be >= 0");
    const std::vector<int> delta = draw_direction(theta.size(), rng);
    const std::vector<double> gradient =
        spsa_gradient_estimate(theta, objective, config.perturbation_at(k), delta);
    const double ak = config.step_gain_at(k, resolved_gain);
    std::vector<double> next(theta.begin(), theta.end());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        next[i] -= ak * gradient[i];
    }
    return next;
}

std::vector<double> spsa_gradient_step(std::span<const double> theta,
                                       const Objective &objective, int k,
                                       const SpsaConfig &config) {
    config.validate();
    if (!config.step_gain) {
        throw std::invalid_argument(
            "spsa: standalone step needs an explicit step_gain; minimize() calibrates it");
    }
    std::mt19937_64 rng(config.rng_seed);
    return spsa_gradient_step(theta, objective, k, config, rng, *config.step_gain);
}

OptTrace minimize(const std::vector<double> &theta0, const Objective &objective,
                  const SpsaConfig &config) {
    config.validate();
    OptTrace trace;
    const Objective counted = [&](std::span<const double> theta) {
        ++trace.objective_calls;
        return objective(theta);
    };

    std::mt19937_64 rng(config.rng_seed);
    std::vector<double> theta = theta0;

    try {
        double gain = 0.0;
        if (config.step_gain) {
            gain = *config.step_gain;
        } else {
            // Calibrate so the first update moves each coordinate by about
            // step_target: a_0 * |slope| == step_target on average.
            constexpr int kProbePairs = 5;
            const double c0 = config.perturbation_at(0);
            double slope_sum = 0.0;
            for (int probe = 0; probe < kProbePairs; ++probe) {
                const std::vector<int> delta = draw_direction(theta.size(), rng);
                std::vector<double> plus = theta;
                std::vector<double> minus = theta;
                for (std::size_t i = 0; i < theta.size(); ++i) {
                    plus[i] += c0 * delta[i];
                    minus[i] -= c0 * delta[i];
                }
                slope_sum += std::abs(checked_eval(counted, plus) -
                                      checked_eval(counted, minus)) /
                             (2.0 * c0);
            }
            trace.calibration_calls = 2 * kProbePairs;
            const double mean_slope = std::max(slope_sum / kProbePairs, 1e-10);
            gain = config.step_target *
                   std::pow(config.resolved_stability_offset() + 1.0, config.alpha) /
                   mean_slope;
        }
        trace.resolved_step_gain = gain;

        double best = std::numeric_limits<double>::infinity();
        int stale = 0;
        for (int k = 0; k < config.max_iterations; ++k) {
            const double value = checked_eval(counted, theta);
            trace.iterations_run = k + 1;
            const bool snapshot =
                config.snapshot_stride > 0 && k % config.snapshot_stride == 0;
            trace.points.push_back(TracePoint{k, value, snapshot});
            if (snapshot) trace.snapshots.emplace_back(k, theta);

            // NaN-safe: with tol = inf the comparison is false for every
            // value, so the window fills and the loop stops.
            if (value <= best - config.convergence_tol) {
                stale = 0;
            } else {
                ++stale;
            }
            if (value < best) best = value;
            if (stale >= config.convergence_window) {
                trace.converged_early = true;
                break;
            }

            const std::vector<int> delta = draw_direction(theta.size(), rng);
            const double ck = config.perturbation_at(k);
            std::vector<double> plus = theta;
            std::vector<double> minus = theta;
            for (std::size_t i = 0; i < theta.size(); ++i) {
                plus[i] += ck * delta[i];
                minus[i] -= ck * delta[i];
            }
            const double slope =
                (checked_eval(counted, plus) - checked_eval(counted, minus)) / (2.0 * ck);
            const double ak = config.step_gain_at(k, gain);
            for (std::size_t i = 0; i < theta.size(); ++i) {
                theta[i] -= ak * slope * delta[i];
            }
        }
    } catch (const NonFiniteObjective &) {
        trace.failed = true;
        trace.failure_reason = "non-finite objective value";
    }

    trace.final_parameters = std::move(theta);
    trace.final_objective =
        trace.points.empty() ? std::numeric_limits<double>::quiet_NaN()
                             : trace.points.back().value;
    return trace;
}

}  // namespace aavqe
