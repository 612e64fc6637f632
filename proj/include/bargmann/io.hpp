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

#ifndef BARGMANN_IO_HPP
#define BARGMANN_IO_HPP

// JSON documents (schema "bargmann-phase/1") and CSV rows.

#include <json.hpp>

#include <optional>
#include <string>

#include "bargmann/fock.hpp"
#include "bargmann/geomphase.hpp"
#include "bargmann/pfunction.hpp"

namespace bargmann {

inline constexpr const char* kSchemaVersion = "bargmann-phase/1";

/// Scientific notation with 12 significant digits; "nan" for undefined values.
std::string format_number(double value);
std::string format_number(const std::optional<double>& value);

/// Fock state and shift a P-function was built from, stored next to its terms.
struct PFunctionSource {
    Occupation occupation;
    TwoModePoint shift;
};

nlohmann::json pfunc_to_json(const QuasiProbability& p, const std::optional<PFunctionSource>& source = std::nullopt);

/// Throws std::invalid_argument on a malformed document or wrong schema.
QuasiProbability pfunc_from_json(const nlohmann::json& doc);
std::optional<PFunctionSource> pfunc_source_from_json(const nlohmann::json& doc);

/// entries[row][col] = [re, im], row-major over (n1, n2).
nlohmann::json operator_to_json(const TruncatedOperator& op);
TruncatedOperator operator_from_json(const nlohmann::json& doc);

nlohmann::json phase_result_to_json(const PhaseResult& r);
nlohmann::json report_to_json(const ReconciliationReport& report);

inline constexpr const char* kSweepCsvHeader = "theta1,theta2,phase_fock,phase_pairing,phase_printed,abs_delta_max,flag";

std::string sweep_csv_row(double theta1, double theta2, const ReconciliationReport& report);

}  // namespace bargmann

#endif  // BARGMANN_IO_HPP
