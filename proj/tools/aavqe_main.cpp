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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aavqe/experiment.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string seeds;
    std::string shots;
    std::optional<double> delta_s;
    std::string out;
    std::optional<int> workers;
    std::string instance;
    std::string instance_dir;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--config", flags.config_path, "experiment config file (key = value)");
    cmd->add_option("--seeds", flags.seeds, "seed list, e.g. 1,2,3 or 0..19");
    cmd->add_option("--shots", flags.shots, "shots per measurement group, or 'exact'");
    cmd->add_option("--delta-s", flags.delta_s, "interpolation step");
    cmd->add_option("--out", flags.out, "output directory");
    cmd->add_option("--workers", flags.workers, "parallel runs");
    cmd->add_option("--instance", flags.instance, "EXACT COVER instance file");
    cmd->add_option("--instance-dir", flags.instance_dir, "directory of instance files");
}

// File first, explicit flags on top.
int resolve(aavqe::ExperimentConfig &config, const CommonFlags &flags) {
    try {
        if (!flags.config_path.empty()) aavqe::apply_config_file(config, flags.config_path);
        if (!flags.seeds.empty()) config.seeds = aavqe::parse_seed_list(flags.seeds);
        if (!flags.shots.empty()) config.budget = aavqe::parse_shot_spec(flags.shots);
        if (flags.delta_s) config.delta_s = *flags.delta_s;
        if (!flags.out.empty()) config.out_dir = flags.out;
        if (flags.workers) config.workers = *flags.workers;
        if (!flags.instance.empty()) {
            config.problem = aavqe::ProblemKind::ExactCover;
            config.ec_instance = flags.instance;
        }
        if (!flags.instance_dir.empty()) {
            config.problem = aavqe::ProblemKind::ExactCover;
            config.ec_instance_dir = flags.instance_dir;
        }
    } catch (const std::exception &e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return aavqe::kExitValidation;
    }
    return aavqe::kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"State-vector VQE / AAVQE experiment runner"};
    app.require_subcommand(1);

    CommonFlags vqe_flags, aavqe_flags, spectrum_flags, gen_flags;

    CLI::App *vqe = app.add_subcommand("vqe", "plain VQE, one run per seed");
    add_common(vqe, vqe_flags);

    CLI::App *aavqe_cmd =
        app.add_subcommand("aavqe", "adiabatically assisted VQE sweep per seed");
    add_common(aavqe_cmd, aavqe_flags);

    CLI::App *spectrum =
        app.add_subcommand("spectrum", "gap profile of the interpolation");
    add_common(spectrum, spectrum_flags);
    std::optional<int> grid_points;
    spectrum->add_option("--grid-points", grid_points, "profile grid size (default 101)");

    CLI::App *gen = app.add_subcommand("gen-ec", "generate unique-solution instances");
    add_common(gen, gen_flags);
    std::optional<int> gen_n_vars, gen_count, gen_max_attempts;
    std::optional<std::uint64_t> gen_seed;
    std::optional<double> gen_max_min_gap;
    gen->add_option("--n-vars", gen_n_vars, "variables per instance (6..24)");
    gen->add_option("--count", gen_count, "number of instances");
    gen->add_option("--seed", gen_seed, "base seed; instance i uses seed + i");
    gen->add_option("--max-attempts", gen_max_attempts, "clause draws before giving up");
    gen->add_option("--max-min-gap", gen_max_min_gap,
                    "keep only instances whose interpolation min-gap is at most this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? aavqe::kExitOk : aavqe::kExitValidation;
    }

    aavqe::ExperimentConfig config;
    if (vqe->parsed()) {
        if (int rc = resolve(config, vqe_flags); rc != 0) return rc;
        return aavqe::cmd_vqe(config);
    }
    if (aavqe_cmd->parsed()) {
        if (int rc = resolve(config, aavqe_flags); rc != 0) return rc;
        return aavqe::cmd_aavqe(config);
    }
    if (spectrum->parsed()) {
        if (int rc = resolve(config, spectrum_flags); rc != 0) return rc;
        if (grid_points) config.spectrum_grid_points = *grid_points;
        return aavqe::cmd_spectrum(config);
    }
    if (gen->parsed()) {
        if (int rc = resolve(config, gen_flags); rc != 0) return rc;
        if (gen_n_vars) config.gen_n_vars = *gen_n_vars;
        if (gen_count) config.gen_count = *gen_count;
        if (gen_seed) config.gen_seed = *gen_seed;
        if (gen_max_attempts) config.gen_max_attempts = *gen_max_attempts;
        if (gen_max_min_gap) config.gen_max_min_gap = *gen_max_min_gap;
        return aavqe::cmd_gen_ec(config);
    }
    return aavqe::kExitValidation;
}
