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

#include "bargmann/coherent.hpp"

#include <cmath>
#include <stdexcept>

namespace bargmann {

PolarizerAngle::PolarizerAngle(double theta) : theta_(theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("polarizer angle must be finite");
    }
}

complex overlap(const CoherentLabel& a, const CoherentLabel& b) {
    const double norms = std::norm(a.z1) + std::norm(a.z2) + std::norm(b.z1) + std::norm(b.z2);
    return std::exp(-0.5 * norms + std::conj(a.z1) * b.z1 + std::conj(a.z2) * b.z2);
}

Eigen::Matrix2cd polarizer_label_matrix(PolarizerAngle theta) {
    const double c = std::cos(theta.radians());
    const complex mis = complex(0.0, -std::sin(theta.radians()));
    Eigen::Matrix2cd m;
    m << c, mis, mis, c;
    return m;
}

CoherentLabel apply_label_matrix(const Eigen::Matrix2cd& m, const CoherentLabel& v) {
    return {m(0, 0) * v.z1 + m(0, 1) * v.z2, m(1, 0) * v.z1 + m(1, 1) * v.z2};
}

CoherentLabel polarizer_label_map(PolarizerAngle theta, const CoherentLabel& v) {
    return apply_label_matrix(polarizer_label_matrix(theta), v);
}

double coherent_triangle_phase(const CoherentLabel& a, const CoherentLabel& b, const CoherentLabel& c) {
    const complex s = std::conj(a.z1) * b.z1 + std::conj(a.z2) * b.z2 + std::conj(b.z1) * c.z1 +
                      std::conj(b.z2) * c.z2 + std::conj(c.z1) * a.z1 + std::conj(c.z2) * a.z2;
    return s.imag();
}

PhaseResult bargmann_triple_coherent(const CoherentLabel& a, const CoherentLabel& b, const CoherentLabel& c) {
    const complex inv = overlap(a, b) * overlap(b, c) * overlap(c, a);
    return PhaseResult{inv, wrap_phase(coherent_triangle_phase(a, b, c)), Method::coherent_closed_form};
}

complex fock_amplitude(complex z, int n) {
    if (n < 0) {
        throw std::out_of_range("negative occupation");
    }
    complex power = 1.0;
    for (int k = 0; k < n; ++k) {
        power *= z;
    }
    return std::exp(-0.5 * std::norm(z) - 0.5 * std::lgamma(n + 1.0)) * power;
}

}  // namespace bargmann
