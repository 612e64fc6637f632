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

#ifndef BARGMANN_COHERENT_HPP
#define BARGMANN_COHERENT_HPP

// Closed-form algebra of two-mode coherent states |z1, z2>.

#include <Eigen/Dense>

#include "bargmann/phase.hpp"

namespace bargmann {

struct CoherentLabel {
    complex z1{};
    complex z2{};

    bool operator==(const CoherentLabel&) const = default;
};

/// Polarizer setting in radians. Not reduced modulo 2 pi; every map below is
/// 2 pi periodic anyway.
class PolarizerAngle {
 public:
    explicit PolarizerAngle(double theta);
    double radians() const { return theta_; }

 private:
    double theta_;
};

/// <a|b> = exp{-(|a1|^2 + |a2|^2 + |b1|^2 + |b2|^2)/2 + a1* b1 + a2* b2}.
complex overlap(const CoherentLabel& a, const CoherentLabel& b);

/// SU(2) matrix M(theta) with U_p(theta)^dagger |z> = |M z>:
/// ((cos, -i sin), (-i sin, cos)).
Eigen::Matrix2cd polarizer_label_matrix(PolarizerAngle theta);

/// (z1 cos - i z2 sin, z2 cos - i z1 sin): the label of U_p(theta)^dagger |z1, z2>.
CoherentLabel polarizer_label_map(PolarizerAngle theta, const CoherentLabel& v);

/// Applies a 2x2 label matrix to (z1, z2).
CoherentLabel apply_label_matrix(const Eigen::Matrix2cd& m, const CoherentLabel& v);

/// <a|b><b|c><c|a>. The phase is taken from the closed form
/// Im(a.b* + b.c* + c.a*) (conjugate on the left factor), wrapped to (-pi, pi].
PhaseResult bargmann_triple_coherent(const CoherentLabel& a, const CoherentLabel& b, const CoherentLabel& c);

/// Im(a1* b1 + a2* b2 + b1* c1 + b2* c2 + c1* a1 + c2* a2), unwrapped.
double coherent_triangle_phase(const CoherentLabel& a, const CoherentLabel& b, const CoherentLabel& c);

/// <n|z> = e^{-|z|^2/2} z^n / sqrt(n!).
complex fock_amplitude(complex z, int n);

}  // namespace bargmann

#endif  // BARGMANN_COHERENT_HPP
