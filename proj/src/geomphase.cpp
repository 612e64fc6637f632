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

#include "bargmann/geomphase.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "bargmann/exp_quadratic.hpp"

namespace bargmann {

namespace {

constexpr Eigen::Index kVarsPerState = 4;
constexpr Eigen::Index kPairingVars = 3 * kVarsPerState;

complex to_label(const PhaseSpacePoint& pt) {
    return pt.to_complex();
}

// Complex label of mode j of state k as a linear form in the 12 pairing variables.
LinearForm label_form(const Eigen::Matrix2cd& m, Eigen::Index state, Eigen::Index mode) {
    LinearForm l = LinearForm::Zero(kPairingVars);
    for (Eigen::Index src = 0; src < 2; ++src) {
        const Eigen::Index q = state * kVarsPerState + 2 * src;
        l(q) += m(mode, src);
        l(q + 1) += m(mode, src) * complex(0.0, 1.0);
    }
    return l;
}

void add_overlap_kernel(ComplexQuadratic& kernel, const std::array<std::array<LinearForm, 2>, 3>& labels) {
    for (int k = 0; k < 3; ++k) {
        const int next = (k + 1) % 3;
        for (int j = 0; j < 2; ++j) {
            const LinearForm& a = labels[k][j];
            const LinearForm& b = labels[next][j];
            // log <a|b> = -|a|^2/2 - |b|^2/2 + a* b
            kernel.add_product(a.conjugate(), a, -0.5);
            kernel.add_product(b.conjugate(), b, -0.5);
            kernel.add_product(a.conjugate(), b, 1.0);
        }
    }
}

void add_printed_kernel(ComplexQuadratic& kernel, const std::array<std::array<LinearForm, 2>, 3>& labels) {
    const complex i(0.0, 1.0);
    for (int j = 0; j < 2; ++j) {
        std::array<LinearForm, 3> q;
        std::array<LinearForm, 3> p;
        for (int k = 0; k < 3; ++k) {
            q[k] = 0.5 * (labels[k][j] + labels[k][j].conjugate());
            p[k] = (labels[k][j] - labels[k][j].conjugate()) / (2.0 * i);
        }
        // e^{-(q^2 + p^2)} from the first factor.
        kernel.add_product(q[0], q[0], -1.0);
        kernel.add_product(p[0], p[0], -1.0);
        // q q' + p p' - (q'^2 + p'^2) + i (q p' - p q')
        kernel.add_product(q[0], q[1], 1.0);
        kernel.add_product(p[0], p[1], 1.0);
        kernel.add_product(q[1], q[1], -1.0);
        kernel.add_product(p[1], p[1], -1.0);
        kernel.add_product(q[0], p[1], i);
        kernel.add_product(p[0], q[1], -i);
        // q' q'' + p' p'' + q'' q + p'' p - (q''^2 + p''^2)
        //   + i (q' p'' - q'' p' + q'' p - q p'')
        kernel.add_product(q[1], q[2], 1.0);
        kernel.add_product(p[1], p[2], 1.0);
        kernel.add_product(q[2], q[0], 1.0);
        kernel.add_product(p[2], p[0], 1.0);
        kernel.add_product(q[2], q[2], -1.0);
        kernel.add_product(p[2], p[2], -1.0);
        kernel.add_product(q[1], p[2], i);
        kernel.add_product(q[2], p[1], -i);
        kernel.add_product(q[2], p[0], i);
        kernel.add_product(q[0], p[2], -i);
    }
}

void add_envelope(ComplexQuadratic& kernel, const QuasiProbability& p, Eigen::Index state) {
    if (!p.envelope()) {
        return;
    }
    const auto& c = p.envelope_center();
    const std::array<double, 4> centers{c[0].q, c[0].p, c[1].q, c[1].p};
    for (Eigen::Index v = 0; v < kVarsPerState; ++v) {
        const LinearForm e = unit_form(kPairingVars, state * kVarsPerState + v);
        // (x - c)^2
        kernel.add_product(e, e, 1.0);
        kernel.add_linear(e, -2.0 * centers[v]);
        kernel.add_constant(centers[v] * centers[v]);
    }
}

double mode_y(const PhaseSpacePoint& a, const PhaseSpacePoint& b, const PhaseSpacePoint& c) {
    const double na = a.q * a.q + a.p * a.p;
    const double nb = b.q * b.q + b.p * b.p;
    const double nc = c.q * c.q + c.p * c.p;
    return a.q * b.p - b.q * a.p + b.q * c.p - c.q * b.p + c.q * a.p - a.q * c.p +
           nb * (a.q * c.p - c.q * a.p) + nc * (b.q * a.p - a.q * b.p) + na * (c.q * b.p - b.q * c.p);
}

double mode_x(const PhaseSpacePoint& a, const PhaseSpacePoint& b, const PhaseSpacePoint& c) {
    const double na = a.q * a.q + a.p * a.p;
    const double nb = b.q * b.q + b.p * b.p;
    const double nc = c.q * c.q + c.p * c.p;
    const double bc_dot = b.q * c.q + b.p * c.p;
    const double bc_cross = c.q * b.p - b.q * c.p;
    return (bc_dot * bc_dot + bc_cross * bc_cross + bc_dot) * na + (c.q * a.q + c.p * a.p) * nb +
           (b.q * a.q + b.p * a.p) * nc + (a.q * b.q + b.q * c.q + c.q * a.q) + (a.p * b.p + b.p * c.p + c.p * a.p) +
           1.0;
}

double cross(const PhaseSpacePoint& u, const PhaseSpacePoint& v) {
    return u.q * v.p - v.q * u.p;
}

// Sum of the values in ascending order, so the result depends only on the multiset.
double ordered_sum(std::array<double, 6> v) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

TwoModePoint to_point(const CoherentLabel& l) {
    return {PhaseSpacePoint::from_complex(l.z1), PhaseSpacePoint::from_complex(l.z2)};
}

CoherentLabel to_label(const TwoModePoint& pt) {
    return {to_label(pt[0]), to_label(pt[1])};
}

}  // namespace

Eigen::Matrix2cd StateSpec::label_matrix() const {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (double theta : polarizer_steps) {
        m = polarizer_label_matrix(PolarizerAngle(theta)) * m;
    }
    return m;
}

CoherentLabel StateSpec::vertex() const {
    return apply_label_matrix(label_matrix(), to_label(center));
}

PhaseResult phase_space_trace(const std::array<PairingState, 3>& states, KernelForm kernel_form) {
    std::array<std::array<LinearForm, 2>, 3> labels;
    for (Eigen::Index k = 0; k < 3; ++k) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            labels[k][j] = label_form(states[k].label_matrix, k, j);
        }
    }
    ComplexQuadratic kernel(kPairingVars);
    if (kernel_form == KernelForm::overlap_product) {
        add_overlap_kernel(kernel, labels);
    } else {
        add_printed_kernel(kernel, labels);
    }
    double prefactor = 1.0;
    for (Eigen::Index k = 0; k < 3; ++k) {
        add_envelope(kernel, states[k].p, k);
        prefactor *= kPhaseSpaceMeasure * states[k].p.norm_constant();
    }

    // Sum over term triples of coeff * (-1)^{|orders|} d^{orders}(E K) at the centers.
    complex total = 0.0;
    Eigen::VectorXd x(kPairingVars);
    std::array<int, kPairingVars> orders{};
    for (const auto& t0 : states[0].p.terms()) {
        for (const auto& t1 : states[1].p.terms()) {
            for (const auto& t2 : states[2].p.terms()) {
                const std::array<const DeltaDerivativeTerm*, 3> triple{&t0, &t1, &t2};
                int order_sum = 0;
                complex coeff = 1.0;
                for (Eigen::Index k = 0; k < 3; ++k) {
                    const auto& t = *triple[k];
                    const Eigen::Index base = k * kVarsPerState;
                    x(base) = t.center1.q;
                    x(base + 1) = t.center1.p;
                    x(base + 2) = t.center2.q;
                    x(base + 3) = t.center2.p;
                    for (Eigen::Index v = 0; v < kVarsPerState; ++v) {
                        orders[base + v] = t.orders[v];
                        order_sum += t.orders[v];
                    }
                    coeff *= t.coeff;
                }
                const double sign = (order_sum % 2 == 0) ? 1.0 : -1.0;
                total += coeff * sign * exp_quadratic_partial(kernel, x, orders);
            }
        }
    }
    return PhaseResult::from_invariant(prefactor * total, Method::phase_space_pairing);
}

PhaseResult phase_space_trace(const StateSpec& s1, const StateSpec& s2, const StateSpec& s3) {
    std::array<PairingState, 3> states{
        PairingState{mehta_p_function(s1.occupation, s1.center), s1.label_matrix()},
        PairingState{mehta_p_function(s2.occupation, s2.center), s2.label_matrix()},
        PairingState{mehta_p_function(s3.occupation, s3.center), s3.label_matrix()},
    };
    return phase_space_trace(states);
}

std::optional<TriangleConfig> triangle_from_states(const StateSpec& s1, const StateSpec& s2, const StateSpec& s3) {
    if (!(s1.occupation == s2.occupation) || !(s2.occupation == s3.occupation)) {
        return std::nullopt;
    }
    return TriangleConfig{to_point(s1.vertex()), to_point(s2.vertex()), to_point(s3.vertex()), s1.occupation};
}

double symplectic_sum(const TriangleConfig& t) {
    // Exchanging two vertices negates every cross term. Averaging the ordered
    // sums of the terms and of their negatives makes that sign flip exact.
    std::array<double, 6> terms;
    std::array<double, 6> negated;
    for (std::size_t j = 0; j < 2; ++j) {
        terms[3 * j] = cross(t.vertex_a[j], t.vertex_b[j]);
        terms[3 * j + 1] = cross(t.vertex_b[j], t.vertex_c[j]);
        terms[3 * j + 2] = cross(t.vertex_c[j], t.vertex_a[j]);
    }
    for (std::size_t k = 0; k < 6; ++k) {
        negated[k] = -terms[k];
    }
    return 0.5 * (ordered_sum(terms) - ordered_sum(negated));
}

ClosedFormTerms closed_form_terms(const TriangleConfig& t) {
    ClosedFormTerms out;
    out.symplectic_sum = symplectic_sum(t);
    if (t.occupation.n1 != 0) {
        out.X1 = mode_x(t.vertex_a[0], t.vertex_b[0], t.vertex_c[0]);
        out.Y1 = mode_y(t.vertex_a[0], t.vertex_b[0], t.vertex_c[0]);
    }
    if (t.occupation.n2 != 0) {
        // Mode 2 by substituting the mode-2 coordinates into the same expressions.
        out.X2 = mode_x(t.vertex_a[1], t.vertex_b[1], t.vertex_c[1]);
        out.Y2 = mode_y(t.vertex_a[1], t.vertex_b[1], t.vertex_c[1]);
    }
    return out;
}

PhaseResult geometric_phase(const TriangleConfig& t) {
    const ClosedFormTerms terms = closed_form_terms(t);
    const double phase =
        wrap_phase(terms.symplectic_sum + std::atan2(terms.Y1, terms.X1) + std::atan2(terms.Y2, terms.X2));
    const complex invariant =
        std::polar(1.0, terms.symplectic_sum) * complex(terms.X1, terms.Y1) * complex(terms.X2, terms.Y2);
    return PhaseResult{invariant, phase, Method::printed_closed_form};
}

PhaseResult vertex_model_trace(const TriangleConfig& t, EnvelopeAnchor anchor, KernelForm kernel) {
    std::array<PairingState, 3> states;
    const std::array<const TwoModePoint*, 3> vertices{&t.vertex_a, &t.vertex_b, &t.vertex_c};
    for (std::size_t k = 0; k < 3; ++k) {
        QuasiProbability p = mehta_p_function(t.occupation, *vertices[k]);
        if (anchor == EnvelopeAnchor::origin) {
            p = QuasiProbability(p.terms(), p.envelope(), TwoModePoint{}, p.norm_constant());
        }
        states[k] = PairingState{std::move(p), Eigen::Matrix2cd::Identity()};
    }
    return phase_space_trace(states, kernel);
}

const PhaseResult* ReconciliationReport::find(Method m) const {
    for (const auto& r : results) {
        if (r.method == m) {
            return &r;
        }
    }
    return nullptr;
}

ReconciliationReport method_reconciliation(const std::array<StateSpec, 3>& states,
                                           const ReconciliationOptions& options) {
    if (!(options.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const TruncationDim dim(options.n_max);
    ReconciliationReport report;

    // Fock oracle.
    std::map<double, TruncatedOperator> unitaries;
    auto unitary = [&](double theta) -> const TruncatedOperator& {
        auto it = unitaries.find(theta);
        if (it == unitaries.end()) {
            it = unitaries.emplace(theta, polarizer_unitary(theta, dim)).first;
        }
        return it->second;
    };
    std::vector<DensityOperator> rhos;
    for (const auto& s : states) {
        const FockVector psi = displaced_fock_state(to_label(s.center[0]), s.occupation.n1, to_label(s.center[1]),
                                                    s.occupation.n2, dim);
        DensityOperator rho = DensityOperator::pure(dim, psi);
        for (double theta : s.polarizer_steps) {
            rho = evolve(rho, unitary(theta));
        }
        rhos.push_back(std::move(rho));
    }
    report.results.push_back(triple_product_trace(rhos[0], rhos[1], rhos[2]));

    // Phase-space pairing.
    std::array<PairingState, 3> pairing;
    for (std::size_t k = 0; k < 3; ++k) {
        pairing[k] = PairingState{options.p_override ? *options.p_override
                                                     : mehta_p_function(states[k].occupation, states[k].center),
                                  states[k].label_matrix()};
    }
    report.results.push_back(phase_space_trace(pairing));

    const bool all_vacuum = std::all_of(states.begin(), states.end(),
                                        [](const StateSpec& s) { return s.occupation == Occupation{0, 0}; });
    report.gated = {Method::fock_oracle, Method::phase_space_pairing};

    report.triangle = triangle_from_states(states[0], states[1], states[2]);
    if (report.triangle) {
        report.printed_terms = closed_form_terms(*report.triangle);
        report.results.push_back(geometric_phase(*report.triangle));
        report.vertex_model = vertex_model_trace(*report.triangle, EnvelopeAnchor::vertex, KernelForm::overlap_product);
        report.vertex_model_origin_envelope =
            vertex_model_trace(*report.triangle, EnvelopeAnchor::origin, KernelForm::printed);
        if (all_vacuum) {
            report.gated.push_back(Method::printed_closed_form);
        }
    }
    if (all_vacuum) {
        report.results.push_back(
            bargmann_triple_coherent(states[0].vertex(), states[1].vertex(), states[2].vertex()));
        report.gated.push_back(Method::coherent_closed_form);
    }

    auto is_gated = [&](Method m) { return std::find(report.gated.begin(), report.gated.end(), m) != report.gated.end(); };

    bool any_defined = false;
    bool any_undefined = false;
    for (const auto& r : report.results) {
        if (is_gated(r.method)) {
            (r.defined() ? any_defined : any_undefined) = true;
        }
    }
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        for (std::size_t j = i + 1; j < report.results.size(); ++j) {
            const auto& a = report.results[i];
            const auto& b = report.results[j];
            MethodDelta d{a.method, b.method, std::nullopt, is_gated(a.method) && is_gated(b.method)};
            if (a.defined() && b.defined()) {
                d.phase_delta = phase_distance(*a.phase, *b.phase);
                if (d.gated) {
                    report.abs_delta_max = std::max(report.abs_delta_max, *d.phase_delta);
                }
            }
            report.deltas.push_back(d);
        }
    }
    const complex fock_inv = report.results[0].invariant;
    const complex pair_inv = report.results[1].invariant;
    const double scale = std::max({std::abs(fock_inv), std::abs(pair_inv), kUndefinedPhaseModulus});
    report.invariant_rel_delta = std::abs(fock_inv - pair_inv) / scale;

    if (any_undefined && !any_defined) {
        report.flag = "undefined";
        report.passed = true;
    } else if (any_undefined) {
        report.flag = "fail";
        report.passed = false;
    } else {
        report.passed = report.abs_delta_max <= options.tolerance && report.invariant_rel_delta <= options.tolerance;
        report.flag = report.passed ? "pass" : "fail";
    }
    return report;
}

std::array<StateSpec, 3> polarizer_sequence(Occupation occupation, const TwoModePoint& center, double theta1,
                                            double theta2) {
    return {StateSpec{occupation, center, {}}, StateSpec{occupation, center, {theta1}},
            StateSpec{occupation, center, {theta1, theta2}}};
}

std::array<StateSpec, 3> explicit_triangle(Occupation occupation, const std::array<TwoModePoint, 3>& centers) {
    return {StateSpec{occupation, centers[0], {}}, StateSpec{occupation, centers[1], {}},
            StateSpec{occupation, centers[2], {}}};
}

RandomConfiguration random_configuration(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_int_distribution<int> occ(0, 1);
    RandomConfiguration c;
    c.center[0].q = coord(rng);
    c.center[0].p = coord(rng);
    c.center[1].q = coord(rng);
    c.center[1].p = coord(rng);
    c.theta1 = angle(rng);
    c.theta2 = angle(rng);
    c.occupation.n1 = occ(rng);
    c.occupation.n2 = occ(rng);
    return c;
}

}  // namespace bargmann
