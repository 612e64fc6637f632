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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bargmann/coherent.hpp"
#include "bargmann/fock.hpp"
#include "oracles.hpp"

using namespace bargmann;

namespace {

CoherentLabel random_label(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return {complex(u(rng), u(rng)), complex(u(rng), u(rng))};
}

}  // namespace

TEST(PolarizerAngle, rejects_non_finite) {
    EXPECT_THROW(PolarizerAngle{std::nan("")}, std::invalid_argument);
    EXPECT_THROW(PolarizerAngle{std::numeric_limits<double>::infinity()}, std::invalid_argument);
    EXPECT_EQ(PolarizerAngle(7.5).radians(), 7.5);
}

TEST(Overlap, normalization) {
    EXPECT_EQ(overlap({}, {}), complex(1.0));
    const CoherentLabel a{0.7, complex(0.0, -0.2)};
    const complex s = overlap(a, a);
    EXPECT_NEAR(std::abs(s), 1.0, 1e-15);
    EXPECT_NEAR(std::arg(s), 0.0, 1e-15);
}

TEST(Overlap, unit_displacement_against_series) {
    const complex got = overlap({1.0, 0.0}, {});
    EXPECT_NEAR(got.real(), 0.60653066, 1e-8);
    EXPECT_NEAR(std::abs(got - oracle::coherent_overlap_series(1.0, 0.0, 30)), 0.0, 1e-10);
}

TEST(Overlap, random_pairs_against_series) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 50; ++k) {
        const CoherentLabel a = random_label(rng, 0.7);
        const CoherentLabel b = random_label(rng, 0.7);
        const complex want =
            oracle::coherent_overlap_series(a.z1, b.z1, 30) * oracle::coherent_overlap_series(a.z2, b.z2, 30);
        EXPECT_NEAR(std::abs(overlap(a, b) - want), 0.0, 1e-10);
    }
}

TEST(Overlap, hermitian_bounded_gaussian_modulus) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        const CoherentLabel a = random_label(rng, 1.5);
        const CoherentLabel b = random_label(rng, 1.5);
        const complex ab = overlap(a, b);
        EXPECT_NEAR(std::abs(ab - std::conj(overlap(b, a))), 0.0, 1e-15);
        EXPECT_LT(std::abs(ab), 1.0);
        EXPECT_NEAR(std::norm(ab), std::exp(-std::norm(a.z1 - b.z1) - std::norm(a.z2 - b.z2)), 1e-12);
    }
}

TEST(PolarizerLabelMap, identity_at_zero) {
    const CoherentLabel v{complex(0.3, 0.1), complex(-0.2, 0.5)};
    EXPECT_EQ(polarizer_label_map(PolarizerAngle(0.0), v), v);
}

TEST(PolarizerLabelMap, quarter_turn) {
    const CoherentLabel m = polarizer_label_map(PolarizerAngle(std::numbers::pi / 2), {1.0, 0.0});
    EXPECT_NEAR(std::abs(m.z1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.z2 - complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(PolarizerLabelMap, preserves_norm) {
    const CoherentLabel v{complex(0.3, 0.4), -0.1};
    const CoherentLabel m = polarizer_label_map(PolarizerAngle(1.234), v);
    EXPECT_NEAR(std::norm(m.z1) + std::norm(m.z2), std::norm(v.z1) + std::norm(v.z2), 1e-14);
}

TEST(PolarizerLabelMap, group_law) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ang(-4.0, 4.0);
    for (int k = 0; k < 20; ++k) {
        const double t1 = ang(rng);
        const double t2 = ang(rng);
        const CoherentLabel v = random_label(rng, 1.0);
        const CoherentLabel lhs = polarizer_label_map(PolarizerAngle(t1), polarizer_label_map(PolarizerAngle(t2), v));
        const CoherentLabel rhs = polarizer_label_map(PolarizerAngle(t1 + t2), v);
        EXPECT_NEAR(std::abs(lhs.z1 - rhs.z1), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(lhs.z2 - rhs.z2), 0.0, 1e-14);
    }
}

TEST(PolarizerLabelMap, matrix_form_agrees) {
    const CoherentLabel v{complex(0.3, -0.4), complex(0.2, 0.1)};
    const auto m = polarizer_label_matrix(PolarizerAngle(0.77));
    EXPECT_EQ(apply_label_matrix(m, v), polarizer_label_map(PolarizerAngle(0.77), v));
    EXPECT_LT((m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BargmannTripleCoherent, degenerate_triangle) {
    const CoherentLabel a{complex(0.4, 0.2), 0.3};
    const PhaseResult r = bargmann_triple_coherent(a, a, a);
    EXPECT_NEAR(std::abs(r.invariant - 1.0), 0.0, 1e-15);
    EXPECT_EQ(*r.phase, 0.0);
    EXPECT_EQ(r.method, Method::coherent_closed_form);
}

TEST(BargmannTripleCoherent, unit_triangle) {
    const PhaseResult r = bargmann_triple_coherent({0.0, 0.0}, {1.0, 0.0}, {complex(0.0, 1.0), 0.0});
    EXPECT_EQ(*r.phase, 1.0);
    EXPECT_EQ(2.0 * oracle::shoelace_area(0.0, 1.0, complex(0.0, 1.0)), 1.0);
}

TEST(BargmannTripleCoherent, twice_shoelace_area) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const complex a(u(rng), u(rng));
        const complex b(u(rng), u(rng));
        const complex c(u(rng), u(rng));
        const double area2 = 2.0 * oracle::shoelace_area(a, b, c);
        EXPECT_NEAR(coherent_triangle_phase({a, 0.0}, {b, 0.0}, {c, 0.0}), area2, 1e-12);
        const PhaseResult r = bargmann_triple_coherent({a, 0.0}, {b, 0.0}, {c, 0.0});
        EXPECT_NEAR(phase_distance(*r.phase, area2), 0.0, 1e-12);
        EXPECT_NEAR(phase_distance(*r.phase, std::arg(r.invariant)), 0.0, 1e-12);
    }
}

TEST(BargmannTripleCoherent, agrees_with_projector_trace) {
    TruncationDim dim(kDefaultNMax);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 5; ++k) {
        const CoherentLabel a = random_label(rng, 0.8);
        const CoherentLabel b = random_label(rng, 0.8);
        const CoherentLabel c = random_label(rng, 0.8);
        auto r = [&](const CoherentLabel& l) {
            return DensityOperator::pure(dim, oracle::coherent_vector(l.z1, l.z2, dim.n_max()));
        };
        const PhaseResult fock = triple_product_trace(r(a), r(b), r(c));
        const PhaseResult closed = bargmann_triple_coherent(a, b, c);
        EXPECT_NEAR(phase_distance(*fock.phase, *closed.phase), 0.0, 1e-8);
        EXPECT_NEAR(std::abs(fock.invariant - closed.invariant), 0.0, 1e-10);
    }
}

TEST(FockAmplitude, matches_oracle) {
    for (int n = 0; n < 12; ++n) {
        EXPECT_NEAR(std::abs(fock_amplitude(complex(0.3, -0.9), n) - oracle::coherent_amplitude(complex(0.3, -0.9), n)),
                    0.0, 1e-15);
    }
    EXPECT_EQ(fock_amplitude(0.0, 0), complex(1.0));
    EXPECT_EQ(fock_amplitude(0.0, 3), complex(0.0));
}

TEST(Phase, wrap_and_undefined) {
    EXPECT_EQ(wrap_phase(std::numbers::pi), std::numbers::pi);
    EXPECT_NEAR(wrap_phase(-std::numbers::pi), std::numbers::pi, 1e-15);
    EXPECT_NEAR(wrap_phase(3 * std::numbers::pi / 2), -std::numbers::pi / 2, 1e-15);
    EXPECT_FALSE(principal_arg(complex(1e-13, 0.0)).has_value());
    EXPECT_TRUE(principal_arg(complex(1e-11, 0.0)).has_value());
    EXPECT_NEAR(phase_distance(3.1, -3.1), 2 * std::numbers::pi - 6.2, 1e-15);
}
