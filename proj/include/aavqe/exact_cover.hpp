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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aavqe {

/// EXACT COVER instance: N binary variables and a collection of 3-variable
/// clauses. A clause is satisfied when exactly one of its variables is 1;
/// an assignment is valid when every clause is satisfied. Variable i maps
/// to bit i of an assignment (qubit 0 = LSB = variable 0).
struct ExactCoverInstance {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // each triple sorted ascending

    /// Throws std::invalid_argument on out-of-range indices, non-distinct
    /// triples, unsorted triples, or duplicate clauses.
    void validate() const;

    bool operator==(const ExactCoverInstance &) const = default;
};

/// Clause penalty sum: for each clause, (t - 1)^2 where t is the number of
/// its variables set to 1 in the assignment. Zero iff the assignment is
/// valid. Equals the diagonal entry of the corresponding Hamiltonian.
int evaluate(const ExactCoverInstance &instance, std::uint64_t assignment);

struct HardnessReport {
    int solution_count = 0;
    std::uint64_t solution = 0;  // meaningful when solution_count == 1
    int clause_count = 0;
    std::optional<double> min_gap;  // filled by callers with oracle access
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection-sampled instance with exactly one valid assignment: draws
/// uniformly random distinct triples one at a time, keeps a clause only if
/// at least one assignment still satisfies everything, and accepts as soon
/// as the count reaches 1. Deterministic given the seed. Throws
/// GenerationError when max_attempts clause draws are exhausted.
std::pair<ExactCoverInstance, HardnessReport>
generate_hard_instance(int n_vars, std::uint64_t rng_seed, int max_attempts = 10000);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_number(line) {}
    int line_number;
};

/// Text format, one instance per file:
///   c free-form comment lines
///   p ec <n_vars> <n_clauses>
///   i j k          (one clause per line, zero-based indices)
ExactCoverInstance parse_instance(std::string_view text);
std::string serialize_instance(const ExactCoverInstance &instance);

}  // namespace aavqe
