/*
   Copyright 2026 The msolab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"

namespace msolab {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Inputs shared by the CLI commands and the suites. Unset fields fall back
/// to per-suite defaults.
struct SuiteConfig {
    std::optional<BlaschkeProduct> theta;
    std::optional<BlaschkeProduct> alpha;
    std::optional<LaurentPolynomial> symbol;
    std::optional<int> depth;
    std::optional<double> tolerance;
    std::uint64_t seed = kDefaultSeed;
    /// Case count for the fuzz suite.
    int cases = 50;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string summary;
    nlohmann::json details;
    double seconds = 0.0;
    /// Runtime limit in seconds, when the criterion has one.
    std::optional<double> budget;
};

struct SuiteReport {
    std::string name;
    bool pass = true;
    std::vector<CriterionResult> criteria;
};

inline constexpr int kAcceptanceCriteria = 10;

/// Runs one acceptance criterion (1..10) with its pinned parameters.
CriterionResult run_acceptance_criterion(int id, std::uint64_t seed = kDefaultSeed);

SuiteReport run_acceptance(const SuiteConfig& config);
/// Random ADTTO round trips, annihilator pairings and perturbation detection.
SuiteReport run_fuzz(const SuiteConfig& config);
/// Largest singular value of truncated D_phi for M in {16, 32, 64, 128, 256}.
SuiteReport run_convergence(const SuiteConfig& config);

/// Report without wall-clock numbers, so equal inputs give equal bytes.
nlohmann::json to_json(const SuiteReport& report);

}  // namespace msolab
