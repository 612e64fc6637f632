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

#include "bargmann/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "bargmann/coherent.hpp"
#include "bargmann/fock.hpp"
#include "bargmann/geomphase.hpp"
#include "bargmann/io.hpp"
#include "bargmann/pfunction.hpp"

namespace bargmann {

namespace {

CheckResult check(std::string name, double max_error, double tolerance) {
    return CheckResult{std::move(name), max_error <= tolerance, max_error, tolerance};
}

double max_abs(const FockMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CoherentLabel random_label(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> r(0.0, radius);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    return {std::polar(r(rng), phi(rng)), std::polar(r(rng), phi(rng))};
}

DensityOperator coherent_projector(const CoherentLabel& z, TruncationDim dim) {
    return DensityOperator::pure(dim, displaced_fock_state(z.z1, 0, z.z2, 0, dim));
}

CheckResult ladder_commutators() {
    const TruncationDim dim(8);
    const FockMatrix a1 = mode_annihilation(Mode::first, dim).matrix();
    const FockMatrix a2 = mode_annihilation(Mode::second, dim).matrix();
    const FockMatrix c11 = a1 * a1.adjoint() - a1.adjoint() * a1;
    const FockMatrix c12 = a1 * a2.adjoint() - a2.adjoint() * a1;
    double err = max_abs(c12);
    for (int n1 = 0; n1 < dim.n_max(); ++n1) {
        for (int n2 = 0; n2 <= dim.n_max(); ++n2) {
            const auto i = dim.index(n1, n2);
            err = std::max(err, std::abs(c11(i, i) - 1.0));
        }
    }
    return check("fock.ladder_commutators", err, 1e-12);
}

CheckResult polarizer_structure(TruncationDim dim) {
    double err = 0.0;
    for (double theta : {0.3, 1.0, 2.5, std::numbers::pi}) {
        const TruncatedOperator u = polarizer_unitary(theta, dim);
        err = std::max(err, u.unitarity_defect());
        for (Eigen::Index r = 0; r < dim.size(); ++r) {
            for (Eigen::Index c = 0; c < dim.size(); ++c) {
                const auto sr = r / dim.per_mode() + r % dim.per_mode();
                const auto sc = c / dim.per_mode() + c % dim.per_mode();
                if (sr != sc) {
                    err = std::max(err, std::abs(u(r, c)));
                }
            }
        }
    }
    return check("fock.polarizer_unitarity_and_blocks", err, 1e-10);
}

CheckResult label_map_consistency(TruncationDim dim) {
    const CoherentLabel z{0.5, complex(0.0, 0.2)};
    double err = 0.0;
    for (double theta : {0.7, 1.9}) {
        const FockVector psi = displaced_fock_state(z.z1, 0, z.z2, 0, dim);
        const FockVector rotated = polarizer_unitary(theta, dim).matrix().adjoint() * psi;
        const CoherentLabel mapped = polarizer_label_map(PolarizerAngle(theta), z);
        const FockVector expected = displaced_fock_state(mapped.z1, 0, mapped.z2, 0, dim);
        err = std::max(err, (rotated - expected).cwiseAbs().maxCoeff());
    }
    return check("fock.label_map_matches_polarizer", err, 1e-8);
}

CheckResult trace_identities(std::mt19937_64& rng) {
    const TruncationDim dim(12);
    double err = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::array<DensityOperator, 3> r{coherent_projector(random_label(rng, 1.0), dim),
                                         DensityOperator::pure(dim, displaced_fock_state(0.2, 1, -0.1, 0, dim)),
                                         coherent_projector(random_label(rng, 1.0), dim)};
        const complex base = triple_product_trace(r[0], r[1], r[2]).invariant;
        err = std::max(err, std::abs(base - triple_product_trace(r[1], r[2], r[0]).invariant));
        err = std::max(err, std::abs(base - triple_product_trace(r[2], r[0], r[1]).invariant));
        err = std::max(err, std::abs(std::conj(base) - triple_product_trace(r[2], r[1], r[0]).invariant));
    }
    return check("fock.trace_cyclicity_and_reversal", err, 1e-12);
}

CheckResult overlap_vs_fock(std::mt19937_64& rng, TruncationDim dim) {
    double err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const CoherentLabel a = random_label(rng, 1.0);
        const CoherentLabel b = random_label(rng, 1.0);
        const complex series = displaced_fock_state(a.z1, 0, a.z2, 0, dim)
                                   .dot(displaced_fock_state(b.z1, 0, b.z2, 0, dim));
        err = std::max(err, std::abs(series - overlap(a, b)));
    }
    return check("coherent.overlap_vs_fock", err, 1e-10);
}

CheckResult label_map_group_law(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    double err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        const CoherentLabel v = random_label(rng, 1.0);
        const CoherentLabel composed = polarizer_label_map(PolarizerAngle(t1), polarizer_label_map(PolarizerAngle(t2), v));
        const CoherentLabel direct = polarizer_label_map(PolarizerAngle(t1 + t2), v);
        err = std::max({err, std::abs(composed.z1 - direct.z1), std::abs(composed.z2 - direct.z2)});
        const double norm_in = std::norm(v.z1) + std::norm(v.z2);
        err = std::max(err, std::abs(std::norm(direct.z1) + std::norm(direct.z2) - norm_in));
    }
    return check("coherent.label_map_group_law", err, 1e-14);
}

CheckResult triangle_area(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const complex a(coord(rng), coord(rng));
        const complex b(coord(rng), coord(rng));
        const complex c(coord(rng), coord(rng));
        const double area = 0.5 * ((b.real() - a.real()) * (c.imag() - a.imag()) -
                                   (c.real() - a.real()) * (b.imag() - a.imag()));
        err = std::max(err, std::abs(coherent_triangle_phase({a, 0.0}, {b, 0.0}, {c, 0.0}) - 2.0 * area));
    }
    return check("coherent.triangle_phase_is_twice_area", err, 1e-12);
}

CheckResult p_trace(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    const SeparableTestFunction one(constant_function(), constant_function());
    double err = 0.0;
    for (int n1 = 0; n1 <= 1; ++n1) {
        for (int n2 = 0; n2 <= 1; ++n2) {
            const TwoModePoint shift{PhaseSpacePoint{coord(rng), coord(rng)}, PhaseSpacePoint{coord(rng), coord(rng)}};
            err = std::max(err, std::abs(pair(mehta_p_function({n1, n2}, shift), one) - 1.0));
        }
    }
    return check("pfunction.trace_normalization", err, 1e-10);
}

CheckResult p_reconstruction(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    const TruncationDim dim(25);
    double err = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const TwoModePoint shift{PhaseSpacePoint{coord(rng), coord(rng)}, PhaseSpacePoint{coord(rng), coord(rng)}};
        const QuasiProbability p = mehta_p_function({1, 1}, shift);
        const FockVector psi = displaced_fock_state(shift[0].to_complex(), 1, shift[1].to_complex(), 1, dim);
        for (int m1 = 0; m1 <= 3; ++m1) {
            for (int m2 = 0; m2 <= 3; ++m2) {
                for (int n1 = 0; n1 <= 3; ++n1) {
                    for (int n2 = 0; n2 <= 3; ++n2) {
                        const complex oracle = psi(dim.index(m1, m2)) * std::conj(psi(dim.index(n1, n2)));
                        err = std::max(err, std::abs(reconstruct_density_element(p, {m1, m2}, {n1, n2}) - oracle));
                    }
                }
            }
        }
    }
    return check("pfunction.reconstruction_vs_fock", err, 1e-8);
}

CheckResult oracle_equivalence(std::mt19937_64& rng, const ValidationOptions& options) {
    double err = 0.0;
    for (int trial = 0; trial < options.random_configurations; ++trial) {
        const RandomConfiguration c = random_configuration(rng);
        ReconciliationOptions ro;
        ro.n_max = options.n_max;
        const auto report =
            method_reconciliation(polarizer_sequence(c.occupation, c.center, c.theta1, c.theta2), ro);
        const auto& fock = *report.find(Method::fock_oracle);
        const auto& pairing = *report.find(Method::phase_space_pairing);
        if (fock.defined() != pairing.defined()) {
            err = std::max(err, 1.0);
        } else if (fock.defined()) {
            err = std::max(err, phase_distance(*fock.phase, *pairing.phase));
        }
    }
    return check("geomphase.pairing_vs_fock_oracle", err, 1e-6);
}

CheckResult printed_reductions(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    double err = std::abs(*geometric_phase(TriangleConfig{}).phase);
    const TwoModePoint same{PhaseSpacePoint{0.3, -0.2}, PhaseSpacePoint{0.1, 0.4}};
    err = std::max(err, std::abs(*geometric_phase(TriangleConfig{same, same, same, {1, 1}}).phase));
    for (int trial = 0; trial < 10; ++trial) {
        auto pt = [&] { return TwoModePoint{PhaseSpacePoint{coord(rng), coord(rng)}, PhaseSpacePoint{coord(rng), coord(rng)}}; };
        const TriangleConfig t{pt(), pt(), pt(), {0, 0}};
        err = std::max(err, phase_distance(*geometric_phase(t).phase, symplectic_sum(t)));
    }
    return check("geomphase.printed_form_reductions", err, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options) {
    const TruncationDim dim(options.n_max);
    std::mt19937_64 rng(options.seed);
    std::vector<CheckResult> out;
    out.push_back(ladder_commutators());
    out.push_back(polarizer_structure(dim));
    out.push_back(label_map_consistency(dim));
    out.push_back(trace_identities(rng));
    out.push_back(overlap_vs_fock(rng, dim));
    out.push_back(label_map_group_law(rng));
    out.push_back(triangle_area(rng));
    out.push_back(p_trace(rng));
    out.push_back(p_reconstruction(rng));
    out.push_back(oracle_equivalence(rng, options));
    out.push_back(printed_reductions(rng));
    return out;
}

nlohmann::json validation_to_json(const ValidationOptions& options, const std::vector<CheckResult>& checks) {
    nlohmann::json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "validate";
    doc["n_max"] = options.n_max;
    doc["seed"] = options.seed;
    nlohmann::json list = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"max_error", c.max_error}, {"tolerance", c.tolerance}});
        all = all && c.passed;
    }
    doc["checks"] = std::move(list);
    doc["passed"] = all;
    return doc;
}

}  // namespace bargmann
