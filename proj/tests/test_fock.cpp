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
#include <numbers>
#include <random>

#include "bargmann/coherent.hpp"
#include "bargmann/fock.hpp"
#include "oracles.hpp"

using namespace bargmann;

namespace {

DensityOperator projector(const FockVector& v, TruncationDim dim) { return DensityOperator::pure(dim, v); }

FockVector random_state(std::mt19937_64& rng, TruncationDim dim, int max_occupation) {
    std::normal_distribution<double> g;
    FockVector v = FockVector::Zero(dim.size());
    for (int a = 0; a <= max_occupation; ++a) {
        for (int b = 0; b <= max_occupation; ++b) {
            v(dim.index(a, b)) = complex(g(rng), g(rng));
        }
    }
    return v.normalized();
}

}  // namespace

TEST(TruncationDim, rejects_zero_cutoff) {
    EXPECT_THROW(TruncationDim(0), std::invalid_argument);
    EXPECT_EQ(TruncationDim(3).size(), 16);
    EXPECT_EQ(TruncationDim(3).index(2, 1), 9);
}

TEST(TruncatedOperator, shape_checked) {
    EXPECT_THROW(TruncatedOperator(TruncationDim(2), FockMatrix::Zero(8, 9)), std::invalid_argument);
    EXPECT_THROW(TruncatedOperator(TruncationDim(2), FockMatrix::Zero(8, 8)), std::invalid_argument);
}

TEST(ModeAnnihilation, single_quantum_column) {
    TruncationDim dim(1);
    auto a1 = mode_annihilation(Mode::first, dim).matrix();
    const auto col = dim.index(1, 0);
    for (Eigen::Index r = 0; r < dim.size(); ++r) {
        EXPECT_EQ(a1(r, col), complex(r == dim.index(0, 0) ? 1.0 : 0.0));
    }
}

TEST(ModeAnnihilation, canonical_commutators) {
    TruncationDim dim(6);
    for (Mode m : {Mode::first, Mode::second}) {
        auto a = mode_annihilation(m, dim).matrix();
        FockMatrix c = a * a.adjoint() - a.adjoint() * a;
        for (int n1 = 0; n1 < 6; ++n1) {
            for (int n2 = 0; n2 < 6; ++n2) {
                const auto i = dim.index(n1, n2);
                for (Eigen::Index j = 0; j < dim.size(); ++j) {
                    EXPECT_NEAR(std::abs(c(i, j) - complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12);
                }
            }
        }
    }
    auto a1 = mode_annihilation(Mode::first, dim).matrix();
    auto a2 = mode_annihilation(Mode::second, dim).matrix();
    EXPECT_EQ(oracle::max_abs(a1 * a2.adjoint() - a2.adjoint() * a1), 0.0);
}

TEST(PolarizerGenerator, matches_finite_difference) {
    const Eigen::Matrix2d g = polarizer_generator();
    const Eigen::Matrix2d fd = oracle::transmission_derivative(0.0);
    EXPECT_LT((g - fd).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_EQ(g, g.transpose());
    EXPECT_EQ(g.trace(), 0.0);
    EXPECT_NEAR(fd.trace(), 0.0, 1e-9);
}

TEST(PolarizerGenerator, transmission_is_printed_matrix) {
    for (double t : {0.0, 0.4, 2.2}) {
        EXPECT_LT((polarizer_transmission(t) - oracle::transmission(t)).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(PolarizerUnitary, zero_angle_is_identity) {
    TruncationDim dim(8);
    EXPECT_LT(oracle::max_abs(polarizer_unitary(0.0, dim).matrix() - FockMatrix::Identity(dim.size(), dim.size())),
              1e-15);
}

TEST(PolarizerUnitary, unitary_and_sector_sparse) {
    TruncationDim dim(kDefaultNMax);
    for (double t : {0.3, 1.0, 2.5, std::numbers::pi}) {
        auto u = polarizer_unitary(t, dim);
        EXPECT_LE(u.unitarity_defect(), 1e-10) << t;
        for (int a1 = 0; a1 <= dim.n_max(); ++a1) {
            for (int a2 = 0; a2 <= dim.n_max(); ++a2) {
                for (int b1 = 0; b1 <= dim.n_max(); ++b1) {
                    for (int b2 = 0; b2 <= dim.n_max(); ++b2) {
                        if (a1 + a2 != b1 + b2) {
                            ASSERT_EQ(u(dim.index(a1, a2), dim.index(b1, b2)), complex(0.0));
                        }
                    }
                }
            }
        }
    }
}

TEST(PolarizerUnitary, matches_generator_exponential) {
    // Dense exponential of i t (a1^+ a2 + a2^+ a1) through a Taylor series on a
    // small truncation, which the generator preserves exactly.
    TruncationDim dim(4);
    auto a1 = mode_annihilation(Mode::first, dim).matrix();
    auto a2 = mode_annihilation(Mode::second, dim).matrix();
    FockMatrix k = complex(0.0, 0.8) * (a1.adjoint() * a2 + a2.adjoint() * a1);
    // Truncated ladder products leak out of the top sector; restrict to n1+n2 <= n_max.
    FockMatrix term = FockMatrix::Identity(dim.size(), dim.size());
    FockMatrix sum = term;
    for (int n = 1; n < 60; ++n) {
        term = term * k / double(n);
        sum += term;
    }
    auto u = polarizer_unitary(0.8, dim).matrix();
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
            for (int c = 0; c <= 4; ++c) {
                for (int d = 0; c + d <= 4; ++d) {
                    EXPECT_NEAR(std::abs(u(dim.index(a, b), dim.index(c, d)) - sum(dim.index(a, b), dim.index(c, d))),
                                0.0, 1e-12);
                }
            }
        }
    }
}

TEST(PolarizerUnitary, coherent_state_follows_label_map) {
    TruncationDim dim(kDefaultNMax);
    const double theta = 0.7;
    const complex z1 = 0.5;
    const complex z2(0.0, 0.2);
    auto u = polarizer_unitary(theta, dim).matrix();
    const FockVector psi = oracle::coherent_vector(z1, z2, dim.n_max());

    const CoherentLabel forward = polarizer_label_map(PolarizerAngle(theta), {z1, z2});
    const FockVector expect = oracle::coherent_vector(forward.z1, forward.z2, dim.n_max());
    EXPECT_LT((u.adjoint() * psi - expect).cwiseAbs().maxCoeff(), 1e-8);

    const CoherentLabel backward = polarizer_label_map(PolarizerAngle(-theta), {z1, z2});
    EXPECT_LT((u * psi - oracle::coherent_vector(backward.z1, backward.z2, dim.n_max())).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(DisplacementOperator, zero_is_identity) {
    TruncationDim dim(6);
    EXPECT_LT(oracle::max_abs(displacement_operator(0.0, 0.0, dim).matrix() -
                              FockMatrix::Identity(dim.size(), dim.size())),
              1e-14);
}

TEST(DisplacementOperator, vacuum_column_is_coherent) {
    TruncationDim dim(30);
    const complex z1 = 0.5;
    const complex z2(0.0, 0.3);
    auto d = displacement_operator(z1, z2, dim);
    for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
            const complex want = oracle::coherent_amplitude(z1, a) * oracle::coherent_amplitude(z2, b);
            EXPECT_NEAR(std::abs(d(dim.index(a, b), 0) - want), 0.0, 1e-9);
        }
    }
    EXPECT_LE(d.unitarity_defect(), 1e-10);
}

TEST(DisplacementOperator, guard_warning) {
    std::vector<std::string> seen;
    auto previous = set_warning_handler([&](std::string_view m) { seen.emplace_back(m); });
    displacement_operator(1.4, 0.0, TruncationDim(5));
    set_warning_handler(previous);
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_NE(seen.front().find("guard"), std::string::npos);
}

TEST(DisplacedFockState, basis_vector_at_origin) {
    TruncationDim dim(4);
    FockVector v = displaced_fock_state(0.0, 1, 0.0, 1, dim);
    FockVector e = FockVector::Zero(dim.size());
    e(dim.index(1, 1)) = 1.0;
    EXPECT_LT((v - e).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DisplacedFockState, norm_and_laguerre_elements) {
    TruncationDim dim(kDefaultNMax);
    const complex z1(0.4, 0.1);
    const complex z2 = -0.2;
    FockVector v = displaced_fock_state(z1, 1, z2, 1, dim);
    EXPECT_NEAR(v.norm(), 1.0, 1e-9);
    EXPECT_LT((v - oracle::displaced_fock(z1, 1, z2, 1, dim.n_max())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DisplacedFockState, single_mode_overlap) {
    TruncationDim dim(kDefaultNMax);
    const complex z = 0.3;
    const complex w(0.0, 0.1);
    // Mode 2 stays in vacuum, so the two-mode overlap is the single-mode one.
    const complex got = displaced_fock_state(z, 1, 0.0, 0, dim).dot(displaced_fock_state(w, 1, 0.0, 0, dim));
    EXPECT_NEAR(std::abs(got - oracle::displaced_one_overlap(z, w)), 0.0, 1e-12);
}

TEST(DisplacedFockState, occupation_out_of_range) {
    EXPECT_THROW(displaced_fock_state(0.0, 3, 0.0, 0, TruncationDim(2)), std::out_of_range);
    EXPECT_THROW(displaced_fock_state(0.0, 0, 0.0, -1, TruncationDim(2)), std::out_of_range);
}

TEST(DensityOperator, validates_hermiticity_and_trace) {
    TruncationDim dim(1);
    FockMatrix m = FockMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(0, 1) = 0.1;
    EXPECT_THROW(DensityOperator(TruncatedOperator(dim, m)), std::invalid_argument);
    m(0, 1) = 0.0;
    m(0, 0) = 1.1;
    EXPECT_THROW(DensityOperator(TruncatedOperator(dim, m)), std::invalid_argument);
}

TEST(DensityOperator, pure_states_idempotent) {
    TruncationDim dim(kDefaultNMax);
    auto rho = projector(displaced_fock_state(complex(0.4, -0.3), 1, 0.2, 0, dim), dim);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-8);
    EXPECT_LT(oracle::max_abs(rho.matrix() * rho.matrix() - rho.matrix()), 1e-8);
}

TEST(Evolve, identity_and_invariants) {
    TruncationDim dim(10);
    std::mt19937_64 rng(7);
    auto rho = projector(random_state(rng, dim, 4), dim);
    auto same = evolve(rho, TruncatedOperator::identity(dim));
    EXPECT_LT(oracle::max_abs(same.matrix() - rho.matrix()), 1e-15);

    auto out = evolve(rho, polarizer_unitary(0.9, dim));
    EXPECT_NEAR(std::abs(out.trace() - rho.trace()), 0.0, 1e-12);
    EXPECT_NEAR(out.purity(), rho.purity(), 1e-10);
}

TEST(Evolve, dense_path_for_displacement) {
    TruncationDim dim(kDefaultNMax);
    FockVector vac = FockVector::Zero(dim.size());
    vac(0) = 1.0;
    auto d = displacement_operator(complex(0.3, 0.2), -0.1, dim);
    auto out = evolve(projector(vac, dim), d.adjoint());
    const FockVector coh = oracle::coherent_vector(complex(0.3, 0.2), -0.1, dim.n_max());
    EXPECT_LT(oracle::max_abs(out.matrix() - coh * coh.adjoint()), 1e-12);
}

TEST(Evolve, rejects_non_unitary) {
    TruncationDim dim(2);
    FockVector vac = FockVector::Zero(dim.size());
    vac(0) = 1.0;
    TruncatedOperator twice(dim, 2.0 * FockMatrix::Identity(dim.size(), dim.size()));
    EXPECT_THROW(evolve(projector(vac, dim), twice), std::invalid_argument);
}

TEST(TripleProductTrace, vacuum_projector) {
    TruncationDim dim(3);
    FockVector vac = FockVector::Zero(dim.size());
    vac(0) = 1.0;
    auto r = projector(vac, dim);
    auto res = triple_product_trace(r, r, r);
    EXPECT_NEAR(std::abs(res.invariant - 1.0), 0.0, 1e-15);
    ASSERT_TRUE(res.defined());
    EXPECT_EQ(*res.phase, 0.0);
    EXPECT_EQ(res.method, Method::fock_oracle);
}

TEST(TripleProductTrace, orthogonal_states_undefined) {
    TruncationDim dim(3);
    FockVector a = FockVector::Zero(dim.size());
    FockVector b = FockVector::Zero(dim.size());
    a(dim.index(0, 0)) = 1.0;
    b(dim.index(1, 0)) = 1.0;
    std::mt19937_64 rng(3);
    auto res = triple_product_trace(projector(a, dim), projector(b, dim), projector(random_state(rng, dim, 2), dim));
    EXPECT_EQ(res.invariant, complex(0.0));
    EXPECT_FALSE(res.defined());
}

TEST(TripleProductTrace, coherent_triangle_unit_phase) {
    TruncationDim dim(kDefaultNMax);
    auto r = [&](complex z) { return projector(oracle::coherent_vector(z, 0.0, dim.n_max()), dim); };
    auto res = triple_product_trace(r(0.0), r(1.0), r(complex(0.0, 1.0)));
    ASSERT_TRUE(res.defined());
    const double want = std::imag(std::conj(complex(1.0)) * complex(0.0, 1.0));
    EXPECT_NEAR(*res.phase, want, 1e-6);
}

TEST(TripleProductTrace, cyclic_and_reversal_properties) {
    TruncationDim dim(8);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto r1 = projector(random_state(rng, dim, 3), dim);
        auto r2 = projector(random_state(rng, dim, 3), dim);
        auto r3 = projector(random_state(rng, dim, 3), dim);
        const complex t = triple_product_trace(r1, r2, r3).invariant;
        EXPECT_NEAR(std::abs(t - triple_product_trace(r2, r3, r1).invariant), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(t - triple_product_trace(r3, r1, r2).invariant), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(std::conj(t) - triple_product_trace(r3, r2, r1).invariant), 0.0, 1e-12);
    }
}

TEST(TripleProductTrace, truncation_convergence) {
    const complex a(0.6, -0.3);
    const complex b(-0.2, 0.7);
    const complex c(0.1, 0.1);
    auto at = [&](int n) {
        TruncationDim dim(n);
        auto r = [&](complex z, complex w) { return projector(oracle::coherent_vector(z, w, n), dim); };
        return triple_product_trace(r(a, b), r(b, c), r(c, a)).invariant;
    };
    EXPECT_LE(std::abs(at(20) - at(25)), 1e-8);
}

TEST(TripleProductTrace, matches_pure_state_formula) {
    TruncationDim dim(6);
    std::mt19937_64 rng(5);
    const FockVector a = random_state(rng, dim, 3);
    const FockVector b = random_state(rng, dim, 3);
    const FockVector c = random_state(rng, dim, 3);
    const complex got = triple_product_trace(projector(a, dim), projector(b, dim), projector(c, dim)).invariant;
    EXPECT_NEAR(std::abs(got - oracle::pure_triple(a, b, c)), 0.0, 1e-13);
}

TEST(Warnings, handler_restores) {
    int calls = 0;
    auto previous = set_warning_handler([&](std::string_view) { ++calls; });
    emit_warning("x");
    auto mine = set_warning_handler(previous);
    EXPECT_EQ(calls, 1);
    EXPECT_TRUE(static_cast<bool>(mine));
}
