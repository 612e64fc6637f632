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

#include "bargmann/phase.hpp"

#include <cmath>
#include <numbers>

namespace bargmann {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::fock_oracle:
            return "fock_oracle";
        case Method::coherent_closed_form:
            return "coherent_closed_form";
        case Method::phase_space_pairing:
            return "phase_space_pairing";
        case Method::printed_closed_form:
            return "printed_closed_form";
    }
    return "unknown";
}

double wrap_phase(double radians) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::remainder(radians, two_pi);  // [-pi, pi]
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

std::optional<double> principal_arg(complex z) {
    if (std::abs(z) < kUndefinedPhaseModulus) {
        return std::nullopt;
    }
    return wrap_phase(std::arg(z));
}

double phase_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

}  // namespace bargmann
