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

#ifndef BARGMANN_GEOMPHASE_HPP
#define BARGMANN_GEOMPHASE_HPP

// Geometric phase arg Tr(rho1 rho2 rho3) of three two-mode beam states, by
// phase-space pairing of their P-functions, by the literal closed form in
// terms of triangle vertices, and reconciled against the Fock oracle.

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bargmann/coherent.hpp"
#include "bargmann/fock.hpp"
#include "bargmann/pfunction.hpp"

namespace bargmann {

/// D(center)|n1, n2> sent through a sequence of polarizers, each step acting
/// as rho -> U_p(theta)^dagger rho U_p(theta).
struct StateSpec {
    Occupation occupation{1, 1};
    TwoModePoint center{};
    std::vector<double> polarizer_steps;

    /// M(theta_m) ... M(theta_1): the state equals (1/pi^2) Int P(z) |M z><M z|.
    Eigen::Matrix2cd label_matrix() const;
    /// M applied to the center label.
    CoherentLabel vertex() const;
};

/// A P-function together with the label map relating its variables to the
/// coherent states it weights.
struct PairingState {
    QuasiProbability p;
    Eigen::Matrix2cd label_matrix = Eigen::Matrix2cd::Identity();
};

enum class KernelForm {
    /// Product of the three coherent overlaps, exp{-|a|^2 - |b|^2 - |c|^2 + a*b + b*c + c*a}.
    overlap_product,
    /// The same kernel written out term by term in the real (q, p) variables.
    printed,
};

/// Tr(rho1 rho2 rho3) as the distributional pairing of the three P-functions
/// with the overlap kernel; exact up to rounding. Method::phase_space_pairing.
PhaseResult phase_space_trace(const std::array<PairingState, 3>& states,
                              KernelForm kernel = KernelForm::overlap_product);
PhaseResult phase_space_trace(const StateSpec& s1, const StateSpec& s2, const StateSpec& s3);

struct TriangleConfig {
    TwoModePoint vertex_a{};
    TwoModePoint vertex_b{};
    TwoModePoint vertex_c{};
    /// Modes with occupation 0 carry no delta derivatives, so their X = 1 and Y = 0.
    Occupation occupation{1, 1};
};

struct ClosedFormTerms {
    double X1 = 1.0;
    double Y1 = 0.0;
    double X2 = 1.0;
    double Y2 = 0.0;
    double symplectic_sum = 0.0;
};

/// Vertices M_k c_k of three states with a common occupation; nullopt when the
/// occupations differ.
std::optional<TriangleConfig> triangle_from_states(const StateSpec& s1, const StateSpec& s2, const StateSpec& s3);

/// Sum over modes of q p' - q' p + q' p'' - q'' p' + q'' p - q p''
/// (twice the signed area of each mode's triangle).
double symplectic_sum(const TriangleConfig& t);

ClosedFormTerms closed_form_terms(const TriangleConfig& t);

/// symplectic_sum + atan2(Y1, X1) + atan2(Y2, X2), wrapped; Method::printed_closed_form.
/// The invariant field holds e^{i symplectic_sum} (X1 + i Y1)(X2 + i Y2); only its
/// argument is meaningful.
PhaseResult geometric_phase(const TriangleConfig& t);

enum class EnvelopeAnchor {
    /// e^{|z - z0|^2}: the P-function of the displaced Fock state.
    vertex,
    /// e^{|z|^2} left at the origin while the deltas move.
    origin,
};

/// Pairing trace when every vertex is given its own unrotated P-function at the
/// vertex centers (mode-local reading of the triangle). Diagnostic only.
PhaseResult vertex_model_trace(const TriangleConfig& t, EnvelopeAnchor anchor, KernelForm kernel);

struct MethodDelta {
    Method a;
    Method b;
    std::optional<double> phase_delta;  // empty when either phase is undefined
    bool gated = false;
};

struct ReconciliationReport {
    std::vector<PhaseResult> results;
    std::vector<MethodDelta> deltas;
    /// Methods whose agreement decides `passed`.
    std::vector<Method> gated;
    double abs_delta_max = 0.0;
    /// |I_fock - I_pairing| / max(|I_fock|, |I_pairing|).
    double invariant_rel_delta = 0.0;
    bool passed = false;
    std::string flag;  // pass | fail | undefined

    std::optional<TriangleConfig> triangle;
    std::optional<ClosedFormTerms> printed_terms;
    std::optional<PhaseResult> vertex_model;
    std::optional<PhaseResult> vertex_model_origin_envelope;

    const PhaseResult* find(Method m) const;
};

struct ReconciliationOptions {
    int n_max = kDefaultNMax;
    double tolerance = 1e-6;
    /// Replaces the mehta P-function of every state (label maps still come from the specs).
    std::optional<QuasiProbability> p_override;
};

/// Runs every applicable method on the three states and compares them. The Fock
/// oracle and the pairing route are always gated; the coherent closed form joins
/// when all occupations are 0, and so does the printed closed form. For occupied
/// modes the printed form is reported but not gated.
ReconciliationReport method_reconciliation(const std::array<StateSpec, 3>& states,
                                           const ReconciliationOptions& options = {});

/// Initial state plus two polarizer settings: rho1, rho2 = U(t1)^dag rho1 U(t1),
/// rho3 = U(t2)^dag rho2 U(t2).
std::array<StateSpec, 3> polarizer_sequence(Occupation occupation, const TwoModePoint& center, double theta1,
                                            double theta2);

/// Three displaced states with no polarizers.
std::array<StateSpec, 3> explicit_triangle(Occupation occupation, const std::array<TwoModePoint, 3>& centers);

struct RandomConfiguration {
    Occupation occupation;
    TwoModePoint center;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// Centers uniform in [-0.5, 0.5] per coordinate, angles uniform in [0, pi),
/// occupations uniform in {0, 1}^2.
RandomConfiguration random_configuration(std::mt19937_64& rng);

}  // namespace bargmann

#endif  // BARGMANN_GEOMPHASE_HPP
