// Copyright 2026 The bargmann-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BARGMANN_VALIDATION_HPP
#define BARGMANN_VALIDATION_HPP

// Invariant checks across all modules, run by `bargmann_phase validate`.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bargmann {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
};

struct ValidationOptions {
    int n_max = 25;
    std::uint64_t seed = 20261015;
    int random_configurations = 10;
};

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options);

nlohmann::json validation_to_json(const ValidationOptions& options, const std::vector<CheckResult>& checks);

}  // namespace bargmann

#endif  // BARGMANN_VALIDATION_HPP
