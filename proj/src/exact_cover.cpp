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

#include "aavqe/exact_cover.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "aavqe/rng.hpp"

namespace aavqe {

void ExactCoverInstance::validate() const {
    if (n_vars < 1 || n_vars > 24) {
        throw std::invalid_argument("n_vars must be in [1, 24]");
    }
    std::set<std::array<int, 3>> seen;
    for (const auto &clause : clauses) {
        for (int v : clause) {
            if (v < 0 || v >= n_vars) {
                throw std::invalid_argument("clause index out of range");
            }
        }
        if (clause[0] >= clause[1] || clause[1] >= clause[2]) {
            throw std::invalid_argument("clause must be a sorted triple of distinct indices");
        }
        if (!seen.insert(clause).second) {
            throw std::invalid_argument("duplicate clause");
        }
    }
}

int evaluate(const ExactCoverInstance &instance, std::uint64_t assignment) {
    int total = 0;
    for (const auto &clause : instance.clauses) {
        const std::uint64_t mask = (1ull << clause[0]) | (1ull << clause[1]) |
                                   (1ull << clause[2]);
        const int t = std::popcount(assignment & mask);
        total += (t - 1) * (t - 1);
    }
    return total;
}

namespace {

bool clause_satisfied(std::uint64_t assignment, const std::array<int, 3> &clause) {
    const std::uint64_t mask =
        (1ull << clause[0]) | (1ull << clause[1]) | (1ull << clause[2]);
    return std::popcount(assignment & mask) == 1;
}

std::array<int, 3> random_triple(int n_vars, std::mt19937_64 &rng) {
    std::array<int, 3> t{};
    t[0] = static_cast<int>(rng() % static_cast<std::uint64_t>(n_vars));
    do {
        t[1] = static_cast<int>(rng() % static_cast<std::uint64_t>(n_vars));
    } while (t[1] == t[0]);
    do {
        t[2] = static_cast<int>(rng() % static_cast<std::uint64_t>(n_vars));
    } while (t[2] == t[0] || t[2] == t[1]);
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

std::pair<ExactCoverInstance, HardnessReport>
generate_hard_instance(int n_vars, std::uint64_t rng_seed, int max_attempts) {
    if (n_vars < 6 || n_vars > 24) {
        throw std::invalid_argument("generate_hard_instance requires 6 <= n_vars <= 24");
    }
    if (max_attempts < 1) {
        throw std::invalid_argument("max_attempts must be >= 1");
    }

    std::mt19937_64 rng(rng_seed);
    ExactCoverInstance instance{n_vars, {}};
    std::set<std::array<int, 3>> used;

    // Assignments satisfying all clauses accepted so far.
    std::vector<std::uint32_t> live(1ull << n_vars);
    for (std::uint32_t a = 0; a < live.size(); ++a) live[a] = a;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const auto candidate = random_triple(n_vars, rng);
        if (used.count(candidate)) continue;

        std::vector<std::uint32_t> filtered;
        filtered.reserve(live.size());
        for (std::uint32_t a : live) {
            if (clause_satisfied(a, candidate)) filtered.push_back(a);
        }
        if (filtered.empty()) continue;  // would be unsatisfiable: drop the clause

        used.insert(candidate);
        instance.clauses.push_back(candidate);
        live = std::move(filtered);

        if (live.size() == 1) {
            HardnessReport report;
            report.solution_count = 1;
            report.solution = live[0];
            report.clause_count = static_cast<int>(instance.clauses.size());
            return {std::move(instance), report};
        }
    }
    throw GenerationError("no unique-solution instance after " +
                          std::to_string(max_attempts) + " clause draws (seed " +
                          std::to_string(rng_seed) + ")");
}

ExactCoverInstance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    bool have_header = false;
    ExactCoverInstance instance;
    std::size_t expected_clauses = 0;
    std::set<std::array<int, 3>> seen;

    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;   // blank line
        if (first == "c") continue;         // comment

        if (!have_header) {
            if (first != "p") throw ParseError(line_number, "expected 'p ec <n_vars> <n_clauses>' header");
            std::string format;
            long long n = 0, m = 0;
            if (!(tokens >> format >> n >> m) || format != "ec") {
                throw ParseError(line_number, "malformed header");
            }
            if (n < 1 || n > 24) throw ParseError(line_number, "n_vars out of range [1, 24]");
            if (m < 0) throw ParseError(line_number, "negative clause count");
            instance.n_vars = static_cast<int>(n);
            expected_clauses = static_cast<std::size_t>(m);
            have_header = true;
            continue;
        }

        if (instance.clauses.size() == expected_clauses) {
            throw ParseError(line_number, "more clauses than declared in header");
        }
        std::array<int, 3> clause{};
        std::istringstream clause_tokens(line);
        for (int k = 0; k < 3; ++k) {
            if (!(clause_tokens >> clause[k])) {
                throw ParseError(line_number, "clause must contain exactly three indices");
            }
            if (clause[k] < 0 || clause[k] >= instance.n_vars) {
                throw ParseError(line_number, "clause index out of range");
            }
        }
        std::string extra;
        if (clause_tokens >> extra) {
            throw ParseError(line_number, "clause must contain exactly three indices");
        }
        std::sort(clause.begin(), clause.end());
        if (clause[0] == clause[1] || clause[1] == clause[2]) {
            throw ParseError(line_number, "duplicate index inside clause");
        }
        if (!seen.insert(clause).second) {
            throw ParseError(line_number, "duplicate clause");
        }
        instance.clauses.push_back(clause);
    }

    if (!have_header) throw ParseError(line_number, "missing header");
    if (instance.clauses.size() != expected_clauses) {
        throw ParseError(line_number, "fewer clauses than declared in header");
    }
    return instance;
}

std::string serialize_instance(const ExactCoverInstance &instance) {
    std::ostringstream out;
    out << "p ec " << instance.n_vars << ' ' << instance.clauses.size() << '\n';
    for (const auto &clause : instance.clauses) {
        out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << '\n';
    }
    return out.str();
}

}  // namespace aavqe
