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

#include "aavqe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "aavqe/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace aavqe {

namespace {

// ---------------------------------------------------------------------------
// small utilities

std::string trim(std::string_view text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

long long to_int(const std::string &value, const std::string &key) {
    std::size_t consumed = 0;
    long long parsed = 0;
    try {
        parsed = std::stoll(value, &consumed);
    } catch (const std::exception &) {
        throw std::invalid_argument("config key '" + key + "': not an integer: " + value);
    }
    if (consumed != value.size()) {
        throw std::invalid_argument("config key '" + key + "': not an integer: " + value);
    }
    return parsed;
}

double to_double(const std::string &value, const std::string &key) {
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &consumed);
    } catch (const std::exception &) {
        throw std::invalid_argument("config key '" + key + "': not a number: " + value);
    }
    if (consumed != value.size()) {
        throw std::invalid_argument("config key '" + key + "': not a number: " + value);
    }
    return parsed;
}

PauliAxis to_axis(const std::string &value, const std::string &key) {
    if (value == "X") return PauliAxis::X;
    if (value == "Z") return PauliAxis::Z;
    throw std::invalid_argument("config key '" + key + "': axis must be X or Z");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

/// Bits of `value`, variable 0 (qubit 0, LSB) first.
std::string bits_lsb_first(std::uint64_t value, int n) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (value >> i & 1) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

std::ofstream open_output(const fs::path &path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void finish_output(std::ofstream &out, const fs::path &path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

void ensure_out_dir(const std::string &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory: " + dir);
    }
}

std::string read_file(const std::string &path) {
    if (!fs::exists(path)) {
        throw std::invalid_argument("referenced file does not exist: " + path);
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot read: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Runs fn(0..n_jobs-1) across up to `workers` threads. Results must be
/// written to pre-sized slots; the caller emits files only after this
/// returns, so output order never depends on scheduling.
void run_indexed(int n_jobs, int workers, const std::function<void(int)> &fn) {
    workers = std::clamp(workers, 1, std::max(1, n_jobs));
    if (workers == 1) {
        for (int i = 0; i < n_jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < n_jobs; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

/// 256 sub-streams per user seed; keeps every run's streams disjoint.
std::uint64_t sub_seed(std::uint64_t seed, int stream) {
    return (seed << 8) | static_cast<std::uint64_t>(stream);
}

int map_current_exception(const char *command) {
    try {
        throw;
    } catch (const IoError &e) {
        std::cerr << command << ": io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error &e) {
        std::cerr << command << ": io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const GenerationError &e) {
        std::cerr << command << ": generation failed: " << e.what() << '\n';
        return kExitGeneration;
    } catch (const ParseError &e) {
        std::cerr << command << ": invalid instance: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        std::cerr << command << ": invalid configuration: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::length_error &e) {
        std::cerr << command << ": size cap exceeded: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << command << ": error: " << e.what() << '\n';
        return 1;
    }
}

// ---------------------------------------------------------------------------
// problem resolution

struct Problem {
    std::string label;
    PauliHamiltonian hamiltonian;
    std::optional<ExactCoverInstance> instance;
};

Problem load_instance_problem(const std::string &path) {
    ExactCoverInstance instance = parse_instance(read_file(path));
    PauliHamiltonian h = build_exact_cover(instance);
    return Problem{path, std::move(h), std::move(instance)};
}

std::vector<Problem> resolve_problems(const ExperimentConfig &config) {
    std::vector<Problem> problems;
    switch (config.problem) {
        case ProblemKind::Chain:
            problems.push_back(Problem{"chain", build_chain(config.chain), std::nullopt});
            break;
        case ProblemKind::DriverOnly:
            problems.push_back(
                Problem{"driver", build_driver(config.driver_n_qubits), std::nullopt});
            break;
        case ProblemKind::ExactCover: {
            if (!config.ec_instance_dir.empty()) {
                if (!fs::is_directory(config.ec_instance_dir)) {
                    throw std::invalid_argument("ec.instance_dir is not a directory: " +
                                                config.ec_instance_dir);
                }
                std::vector<std::string> paths;
                for (const auto &entry : fs::directory_iterator(config.ec_instance_dir)) {
                    if (entry.path().extension() == ".txt") {
                        paths.push_back(entry.path().string());
                    }
                }
                std::sort(paths.begin(), paths.end());
                if (paths.empty()) {
                    throw std::invalid_argument("no *.txt instances in " +
                                                config.ec_instance_dir);
                }
                for (const auto &path : paths) problems.push_back(load_instance_problem(path));
            } else if (!config.ec_instance.empty()) {
                problems.push_back(load_instance_problem(config.ec_instance));
            } else {
                throw std::invalid_argument(
                    "problem = ec needs ec.instance or ec.instance_dir");
            }
            break;
        }
    }
    return problems;
}

json problem_json(const ExperimentConfig &config, const Problem &problem) {
    json j;
    j["label"] = problem.label;
    j["n_qubits"] = problem.hamiltonian.n_qubits();
    switch (config.problem) {
        case ProblemKind::Chain:
            j["kind"] = "chain";
            j["lambda"] = config.chain.lambda;
            j["coupling_axis"] = std::string(1, static_cast<char>(config.chain.coupling_axis));
            j["field_axis"] = std::string(1, static_cast<char>(config.chain.field_axis));
            break;
        case ProblemKind::DriverOnly:
            j["kind"] = "driver";
            break;
        case ProblemKind::ExactCover:
            j["kind"] = "ec";
            j["n_clauses"] = problem.instance->clauses.size();
            break;
    }
    return j;
}

json budget_json(const ShotBudget &budget) {
    if (budget.is_exact()) return "exact";
    return budget.shots_per_group();
}

// Oracle lookups shared by both run commands.
struct ProblemTruth {
    std::optional<double> ground_energy;          // dense, n <= 14
    std::optional<std::uint64_t> unique_solution; // EC with exactly one
};

ProblemTruth truth_for(const Problem &problem) {
    ProblemTruth truth;
    if (problem.hamiltonian.n_qubits() <= kDenseMaxQubits) {
        truth.ground_energy = exact_spectrum(problem.hamiltonian, 2).eigenvalues[0];
    }
    if (problem.instance) {
        const auto solutions = brute_force_exact_cover(*problem.instance);
        if (solutions.size() == 1) truth.unique_solution = solutions[0];
    }
    return truth;
}

constexpr double kEnergyTolerance = 0.1;

}  // namespace

// ---------------------------------------------------------------------------
// configuration

void ExperimentConfig::validate_common() const {
    if (seeds.empty()) throw std::invalid_argument("seed list must be non-empty");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (ansatz_depth < 0) throw std::invalid_argument("ansatz.depth must be >= 0");
    if (out_dir.empty()) throw std::invalid_argument("output directory must be set");
    spsa.validate();
}

std::vector<std::uint64_t> parse_seed_list(const std::string &text) {
    std::vector<std::uint64_t> seeds;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto range = item.find("..");
        if (range == std::string::npos) {
            seeds.push_back(static_cast<std::uint64_t>(to_int(item, "seeds")));
        } else {
            const long long lo = to_int(trim(item.substr(0, range)), "seeds");
            const long long hi = to_int(trim(item.substr(range + 2)), "seeds");
            if (hi < lo) throw std::invalid_argument("seed range is descending: " + item);
            for (long long s = lo; s <= hi; ++s) {
                seeds.push_back(static_cast<std::uint64_t>(s));
            }
        }
    }
    if (seeds.empty()) throw std::invalid_argument("seed list must be non-empty");
    return seeds;
}

ShotBudget parse_shot_spec(const std::string &text) {
    if (text == "exact") return ShotBudget::exact();
    return ShotBudget::shots(static_cast<int>(to_int(text, "shots")));
}

void apply_config_text(ExperimentConfig &config, const std::string &text,
                       const std::string &origin) {
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_number) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_number) +
                                        ": expected 'key = value'");
        }

        if (key == "problem") {
            if (value == "chain") config.problem = ProblemKind::Chain;
            else if (value == "ec") config.problem = ProblemKind::ExactCover;
            else if (value == "driver") config.problem = ProblemKind::DriverOnly;
            else throw std::invalid_argument("problem must be chain, ec or driver");
        } else if (key == "chain.n_qubits") {
            config.chain.n_qubits = static_cast<int>(to_int(value, key));
        } else if (key == "chain.lambda") {
            config.chain.lambda = to_double(value, key);
        } else if (key == "chain.coupling_axis") {
            config.chain.coupling_axis = to_axis(value, key);
        } else if (key == "chain.field_axis") {
            config.chain.field_axis = to_axis(value, key);
        } else if (key == "ec.instance") {
            config.ec_instance = value;
        } else if (key == "ec.instance_dir") {
            config.ec_instance_dir = value;
        } else if (key == "driver.n_qubits") {
            config.driver_n_qubits = static_cast<int>(to_int(value, key));
        } else if (key == "ansatz.depth") {
            config.ansatz_depth = static_cast<int>(to_int(value, key));
        } else if (key == "schedule.delta_s") {
            config.delta_s = to_double(value, key);
        } else if (key == "schedule.iterations_per_step") {
            config.iterations_per_step = static_cast<int>(to_int(value, key));
        } else if (key == "spsa.max_iterations") {
            config.spsa.max_iterations = static_cast<int>(to_int(value, key));
        } else if (key == "spsa.a") {
            if (value == "auto") config.spsa.step_gain.reset();
            else config.spsa.step_gain = to_double(value, key);
        } else if (key == "spsa.c") {
            config.spsa.perturbation = to_double(value, key);
        } else if (key == "spsa.big_a") {
            if (value == "auto") config.spsa.stability_offset.reset();
            else config.spsa.stability_offset = to_double(value, key);
        } else if (key == "spsa.alpha") {
            config.spsa.alpha = to_double(value, key);
        } else if (key == "spsa.gamma") {
            config.spsa.gamma = to_double(value, key);
        } else if (key == "spsa.convergence_window") {
            config.spsa.convergence_window = static_cast<int>(to_int(value, key));
        } else if (key == "spsa.convergence_tol") {
            config.spsa.convergence_tol = to_double(value, key);
        } else if (key == "spsa.step_target") {
            config.spsa.step_target = to_double(value, key);
        } else if (key == "shots") {
            config.budget = parse_shot_spec(value);
        } else if (key == "seeds") {
            config.seeds = parse_seed_list(value);
        } else if (key == "out") {
            config.out_dir = value;
        } else if (key == "workers") {
            config.workers = static_cast<int>(to_int(value, key));
        } else if (key == "spectrum.grid_points") {
            config.spectrum_grid_points = static_cast<int>(to_int(value, key));
        } else if (key == "gen.n_vars") {
            config.gen_n_vars = static_cast<int>(to_int(value, key));
        } else if (key == "gen.count") {
            config.gen_count = static_cast<int>(to_int(value, key));
        } else if (key == "gen.seed") {
            config.gen_seed = static_cast<std::uint64_t>(to_int(value, key));
        } else if (key == "gen.max_attempts") {
            config.gen_max_attempts = static_cast<int>(to_int(value, key));
        } else if (key == "gen.max_min_gap") {
            config.gen_max_min_gap = to_double(value, key);
        } else {
            throw std::invalid_argument(origin + ":" + std::to_string(line_number) +
                                        ": unknown config key '" + key + "'");
        }
    }
}

void apply_config_file(ExperimentConfig &config, const std::string &path) {
    apply_config_text(config, read_file(path), path);
}

// ---------------------------------------------------------------------------
// vqe

int cmd_vqe(const ExperimentConfig &config) {
    try {
        config.validate_common();
        const std::vector<Problem> problems = resolve_problems(config);
        if (problems.size() != 1) {
            throw std::invalid_argument("vqe runs a single problem; use one instance");
        }
        const Problem &problem = problems.front();
        const AnsatzSpec spec{problem.hamiltonian.n_qubits(), config.ansatz_depth};
        const ProblemTruth truth = truth_for(problem);

        std::vector<std::optional<VqeResult>> results(config.seeds.size());
        run_indexed(static_cast<int>(config.seeds.size()), config.workers, [&](int i) {
            const std::uint64_t seed = config.seeds[static_cast<std::size_t>(i)];
            SpsaConfig opt = config.spsa;
            opt.rng_seed = sub_seed(seed, 1);
            VqeOptions options;
            options.sampling_seed = sub_seed(seed, 2);
            const ParameterVector theta0 = random_parameters(spec, sub_seed(seed, 0));
            results[static_cast<std::size_t>(i)] =
                run_vqe(problem.hamiltonian, spec, theta0, opt, config.budget, options);
        });

        ensure_out_dir(config.out_dir);
        const fs::path csv_path = fs::path(config.out_dir) / "vqe_traces.csv";
        std::ofstream csv = open_output(csv_path);
        csv << "run_id,iteration,energy,energy_exact\n";
        for (std::size_t run = 0; run < results.size(); ++run) {
            const VqeResult &result = *results[run];
            for (std::size_t k = 0; k < result.trace.points.size(); ++k) {
                csv << run << ',' << result.trace.points[k].iteration << ','
                    << fmt(result.trace.points[k].value) << ',';
                if (k < result.exact_energies.size()) csv << fmt(result.exact_energies[k]);
                csv << '\n';
            }
        }
        finish_output(csv, csv_path);

        json summary;
        summary["schema_version"] = kSchemaVersion;
        summary["command"] = "vqe";
        summary["problem"] = problem_json(config, problem);
        summary["ansatz_depth"] = config.ansatz_depth;
        summary["shots"] = budget_json(config.budget);
        summary["max_iterations"] = config.spsa.max_iterations;
        summary["energy_tolerance"] = kEnergyTolerance;
        summary["seeds"] = config.seeds;
        if (truth.ground_energy) summary["exact_ground_energy"] = *truth.ground_energy;
        json runs = json::array();
        for (std::size_t run = 0; run < results.size(); ++run) {
            const VqeResult &result = *results[run];
            json r;
            r["run_id"] = run;
            r["seed"] = config.seeds[run];
            r["iterations"] = result.trace.iterations_run;
            r["converged_early"] = result.trace.converged_early;
            r["failed"] = result.trace.failed;
            r["final_objective"] = result.trace.final_objective;
            r["final_energy_exact"] =
                result.final_energy_exact ? json(*result.final_energy_exact) : json();
            r["final_energy_sampled"] =
                result.final_energy_sampled ? json(*result.final_energy_sampled) : json();
            if (truth.ground_energy && result.final_energy_exact) {
                r["success"] = std::abs(*result.final_energy_exact - *truth.ground_energy) <=
                               kEnergyTolerance;
            } else {
                r["success"] = json();
            }
            runs.push_back(std::move(r));
        }
        summary["runs"] = std::move(runs);

        const fs::path json_path = fs::path(config.out_dir) / "vqe_summary.json";
        std::ofstream js = open_output(json_path);
        js << summary.dump(2) << '\n';
        finish_output(js, json_path);
        return kExitOk;
    } catch (...) {
        return map_current_exception("vqe");
    }
}

// ---------------------------------------------------------------------------
// aavqe

int cmd_aavqe(const ExperimentConfig &config) {
    try {
        config.validate_common();
        const std::vector<Problem> problems = resolve_problems(config);

        struct Job {
            const Problem *problem;
            std::size_t problem_index;
            std::uint64_t seed;
        };
        std::vector<Job> jobs;
        for (std::size_t p = 0; p < problems.size(); ++p) {
            for (std::uint64_t seed : config.seeds) {
                jobs.push_back(Job{&problems[p], p, seed});
            }
        }

        std::vector<std::optional<RunRecord>> records(jobs.size());
        run_indexed(static_cast<int>(jobs.size()), config.workers, [&](int i) {
            const Job &job = jobs[static_cast<std::size_t>(i)];
            const AnsatzSpec spec{job.problem->hamiltonian.n_qubits(), config.ansatz_depth};
            ScheduleConfig schedule;
            schedule.delta_s = config.delta_s;
            schedule.iterations_per_step = config.iterations_per_step;
            schedule.budget = config.budget;
            schedule.master_seed = job.seed << 16;
            SolutionPredicate predicate;
            if (job.problem->instance) {
                predicate = make_exact_cover_predicate(*job.problem->instance);
            }
            records[static_cast<std::size_t>(i)] =
                run_aavqe(build_driver(spec.n_qubits), job.problem->hamiltonian, spec,
                          schedule, config.spsa, predicate);
        });

        std::vector<ProblemTruth> truths;
        truths.reserve(problems.size());
        for (const Problem &problem : problems) truths.push_back(truth_for(problem));

        ensure_out_dir(config.out_dir);
        const fs::path csv_path = fs::path(config.out_dir) / "aavqe_traces.csv";
        std::ofstream csv = open_output(csv_path);
        csv << "run_id,s,iteration_global,energy,energy_exact,solution_found_flag\n";
        for (std::size_t run = 0; run < records.size(); ++run) {
            const RunRecord &record = *records[run];
            int iteration_global = 0;
            bool found = false;
            for (const StepRecord &step : record.steps) {
                for (std::size_t k = 0; k < step.trace.points.size(); ++k) {
                    if (!found && step.first_solution_iteration &&
                        static_cast<int>(k) >= *step.first_solution_iteration) {
                        found = true;
                    }
                    csv << run << ',' << fmt(step.s) << ',' << iteration_global << ','
                        << fmt(step.trace.points[k].value) << ',';
                    if (k < step.exact_energies.size()) csv << fmt(step.exact_energies[k]);
                    csv << ',' << (found ? 1 : 0) << '\n';
                    ++iteration_global;
                }
            }
        }
        finish_output(csv, csv_path);

        json summary;
        summary["schema_version"] = kSchemaVersion;
        summary["command"] = "aavqe";
        summary["ansatz_depth"] = config.ansatz_depth;
        summary["shots"] = budget_json(config.budget);
        summary["delta_s"] = config.delta_s;
        summary["iterations_per_step"] = config.iterations_per_step;
        summary["energy_tolerance"] = kEnergyTolerance;
        summary["seeds"] = config.seeds;
        {
            ScheduleConfig schedule;
            schedule.delta_s = config.delta_s;
            summary["s_grid"] = schedule.grid();
        }
        json problem_list = json::array();
        for (std::size_t p = 0; p < problems.size(); ++p) {
            json pj = problem_json(config, problems[p]);
            if (truths[p].ground_energy) pj["exact_ground_energy"] = *truths[p].ground_energy;
            if (truths[p].unique_solution) {
                pj["solution"] = *truths[p].unique_solution;
                pj["solution_bits"] =
                    bits_lsb_first(*truths[p].unique_solution,
                                   problems[p].hamiltonian.n_qubits());
            }
            problem_list.push_back(std::move(pj));
        }
        summary["problems"] = std::move(problem_list);

        json runs = json::array();
        for (std::size_t run = 0; run < records.size(); ++run) {
            const Job &job = jobs[run];
            const RunRecord &record = *records[run];
            const ProblemTruth &truth = truths[job.problem_index];
            json r;
            r["run_id"] = run;
            r["problem_index"] = job.problem_index;
            r["instance"] = job.problem->instance ? json(job.problem->label) : json();
            r["seed"] = job.seed;
            const StepRecord &last = record.steps.back();
            r["final_energy_exact"] =
                last.final_energy_exact ? json(*last.final_energy_exact) : json();
            r["final_energy_sampled"] =
                last.final_energy_sampled ? json(*last.final_energy_sampled) : json();
            r["final_bitstring"] = record.final_bitstring;
            r["final_bits"] = bits_lsb_first(record.final_bitstring, record.n_qubits);
            r["first_solution_s"] =
                record.first_solution_s ? json(*record.first_solution_s) : json();
            r["wall_seconds"] = record.wall_seconds;
            int retried = 0;
            for (const StepRecord &step : record.steps) retried += step.retried ? 1 : 0;
            r["steps_retried"] = retried;
            if (truth.ground_energy && last.final_energy_exact) {
                r["success_energy"] = std::abs(*last.final_energy_exact -
                                               *truth.ground_energy) <= kEnergyTolerance;
            } else {
                r["success_energy"] = json();
            }
            r["success_bitstring"] = truth.unique_solution
                                         ? json(record.final_bitstring ==
                                                *truth.unique_solution)
                                         : json();
            runs.push_back(std::move(r));
        }
        summary["runs"] = std::move(runs);

        if (config.problem == ProblemKind::ExactCover && !config.budget.is_exact()) {
            std::vector<RunRecord> all;
            all.reserve(records.size());
            for (const auto &record : records) all.push_back(*record);
            const SolutionHistogram histogram = first_solution_statistics(all);
            summary["histogram"] = {{"s_values", histogram.s_values},
                                    {"counts", histogram.counts},
                                    {"undetected", histogram.undetected}};
        }

        const fs::path json_path = fs::path(config.out_dir) / "aavqe_summary.json";
        std::ofstream js = open_output(json_path);
        js << summary.dump(2) << '\n';
        finish_output(js, json_path);
        return kExitOk;
    } catch (...) {
        return map_current_exception("aavqe");
    }
}

// ---------------------------------------------------------------------------
// gen-ec

int cmd_gen_ec(const ExperimentConfig &config) {
    try {
        if (config.gen_count < 1) throw std::invalid_argument("gen.count must be >= 1");
        if (config.gen_max_min_gap && config.gen_n_vars > kProfileMaxQubits) {
            throw std::invalid_argument("gap filter needs n_vars <= 12");
        }
        ensure_out_dir(config.out_dir);

        json manifest;
        manifest["schema_version"] = kSchemaVersion;
        manifest["command"] = "gen-ec";
        manifest["n_vars"] = config.gen_n_vars;
        manifest["count"] = config.gen_count;
        manifest["base_seed"] = config.gen_seed;
        json instances = json::array();

        for (int i = 0; i < config.gen_count; ++i) {
            const std::uint64_t seed = config.gen_seed + static_cast<std::uint64_t>(i);
            ExactCoverInstance instance;
            HardnessReport report;
            // The optional hardness filter redraws with derived seeds until
            // the interpolation min-gap is small enough.
            std::uint64_t attempt_seed = seed;
            for (int round = 0;; ++round) {
                std::tie(instance, report) = generate_hard_instance(
                    config.gen_n_vars, attempt_seed, config.gen_max_attempts);
                if (!config.gen_max_min_gap) break;
                const double gap = min_interpolation_gap(
                    build_driver(config.gen_n_vars), build_exact_cover(instance), 41);
                if (gap <= *config.gen_max_min_gap) {
                    report.min_gap = gap;
                    break;
                }
                if (round >= 49) {
                    throw GenerationError("no instance met the gap filter (seed " +
                                          std::to_string(seed) + ")");
                }
                attempt_seed = derive_seed(seed, 0x10000ull * (round + 1));
            }

            const std::string name = "ec_n" + std::to_string(config.gen_n_vars) + "_s" +
                                     std::to_string(seed) + ".txt";
            const fs::path path = fs::path(config.out_dir) / name;
            std::ofstream out = open_output(path);
            out << serialize_instance(instance);
            finish_output(out, path);

            json entry;
            entry["file"] = name;
            entry["seed"] = seed;
            entry["n_clauses"] = report.clause_count;
            entry["solution"] = report.solution;
            entry["solution_bits"] = bits_lsb_first(report.solution, config.gen_n_vars);
            entry["min_gap"] = report.min_gap ? json(*report.min_gap) : json();
            instances.push_back(std::move(entry));
        }
        manifest["instances"] = std::move(instances);

        const fs::path manifest_path = fs::path(config.out_dir) / "manifest.json";
        std::ofstream out = open_output(manifest_path);
        out << manifest.dump(2) << '\n';
        finish_output(out, manifest_path);
        return kExitOk;
    } catch (...) {
        return map_current_exception("gen-ec");
    }
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const ExperimentConfig &config) {
    try {
        const std::vector<Problem> problems = resolve_problems(config);
        if (problems.size() != 1) {
            throw std::invalid_argument("spectrum profiles a single problem");
        }
        const Problem &problem = problems.front();
        const PauliHamiltonian h0 = build_driver(problem.hamiltonian.n_qubits());
        const std::vector<double> grid = uniform_grid(config.spectrum_grid_points);
        const AdiabaticErrorProfile profile =
            adiabatic_error_profile(h0, problem.hamiltonian, grid);

        ensure_out_dir(config.out_dir);
        const fs::path csv_path = fs::path(config.out_dir) / "spectrum.csv";
        std::ofstream csv = open_output(csv_path);
        csv << "s,gap,numerator,ratio\n";
        for (const ProfilePoint &point : profile.points) {
            csv << fmt(point.s) << ',' << fmt(point.gap) << ',' << fmt(point.numerator)
                << ',' << fmt(point.ratio) << '\n';
        }
        finish_output(csv, csv_path);
        return kExitOk;
    } catch (...) {
        return map_current_exception("spectrum");
    }
}

}  // namespace aavqe
