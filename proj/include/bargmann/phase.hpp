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

#ifndef BARGMANN_PHASE_HPP
#define BARGMANN_PHASE_HPP

#include <complex>
#include <optional>
#include <string_view>

namespace bargmann {

using complex = std::complex<double>;

/// Below this modulus the argument of a Bargmann invariant is reported as undefined.
inline constexpr double kUndefinedPhaseModulus = 1e-12;

enum class Method {
    fock_oracle,
    coherent_closed_form,
    phase_space_pairing,
    printed_closed_form,
};

std::string_view method_name(Method m);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

/// Principal argument in (-pi, pi]; nullopt when |z| < kUndefinedPhaseModulus.
std::optional<double> principal_arg(complex z);

/// Smallest absolute difference between two angles modulo 2*pi.
double phase_distance(double a, double b);

/// Value of Tr(rho1 rho2 rho3) and its argument, tagged with the route that produced it.
struct PhaseResult {
    complex invariant{};
    std::optional<double> phase;  // empty: phase undefined (vanishing invariant)
    Method method = Method::fock_oracle;

    static PhaseResult from_invariant(complex invariant, Method method) {
        return PhaseResult{invariant, principal_arg(invariant), method};
    }

    bool defined() const { return phase.has_value(); }
};

}  // namespace bargmann

#endif  // BARGMANN_PHASE_HPP
