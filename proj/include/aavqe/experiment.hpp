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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aavqe/driver.hpp"
#include "aavqe/pauli.hpp"

namespace aavqe {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGeneration = 3;
inline constexpr int kExitIo = 4;

inline constexpr int kSchemaVersion = 1;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { Chain, ExactCover, DriverOnly };

/// Resolved settings for one experiment invocation. Populated from
/// defaults, then a key-value config file, then command-line overrides.
struct ExperimentConfig {
    ProblemKind problem = ProblemKind::Chain;
    ChainSpec chain{4, 1.0, PauliAxis::X, PauliAxis::X};
    std::string ec_instance;      // path to a single instance file
    std::string ec_instance_dir;  // or a directory of *.txt instances
    int driver_n_qubits = 4;

    int ansatz_depth = 3;
    double delta_s = 0.05;
    int iterations_per_step = 100;
    SpsaConfig spsa{};  // spsa.max_iterations drives plain VQE runs
    ShotBudget budget = ShotBudget::exact();
    std::vector<std::uint64_t> seeds{0};
    std::string out_dir = "runs/out";
    int workers = 1;
    int spectrum_grid_points = 101;

    // gen-ec settings
    int gen_n_vars = 8;
    int gen_count = 1;
    std::uint64_t gen_seed = 1;
    int gen_max_attempts = 10000;
    std::optional<double> gen_max_min_gap;  // optional hardness filter (N <= 12)

    void validate_common() const;
};

/// Parses `key = value` lines ('#' starts a comment) into the config.
/// Unknown keys raise std::invalid_argument. See the shipped recipes for
/// the key inventory.
void apply_config_file(ExperimentConfig &config, const std::string &path);
void apply_config_text(ExperimentConfig &config, const std::string &text,
                       const std::string &origin);

/// Seed lists accept "1,2,3" and ranges "0..19" (inclusive), mixed freely.
std::vector<std::uint64_t> parse_seed_list(const std::string &text);
ShotBudget parse_shot_spec(const std::string &text);  // "exact" or an integer

/// Plain VQE, one run per seed. Writes vqe_traces.csv and
/// vqe_summary.json under out_dir.
int cmd_vqe(const ExperimentConfig &config);

/// Full interpolation sweep per seed (and per instance when
/// ec.instance_dir is set). Writes aavqe_traces.csv and
/// aavqe_summary.json.
int cmd_aavqe(const ExperimentConfig &config);

/// Generates unique-solution instances plus manifest.json.
int cmd_gen_ec(const ExperimentConfig &config);

/// Gap/transition-amplitude profile of the interpolation. Writes
/// spectrum.csv with columns s,gap,numerator,ratio ("inf" at degenerate
/// points).
int cmd_spectrum(const ExperimentConfig &config);

}  // namespace aavqe
