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

#ifndef BARGMANN_FOCK_HPP
#define BARGMANN_FOCK_HPP

// Truncated two-mode Fock-space numerics.
//
// Basis layout: each mode keeps occupations 0..n_max, and the joint basis
// vector |n1, n2> sits at row/column n1 * (n_max + 1) + n2 (row-major over
// (n1, n2)). Golden files depend on this ordering.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "bargmann/phase.hpp"

namespace bargmann {

using FockMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

/// Default per-mode cutoff. The coherent tail e^{-|z|^2}|z|^{2n}/n! stays below
/// 1e-14 at n = 25 for |z| <= 1.5.
inline constexpr int kDefaultNMax = 25;

/// Tolerances used when validating operators handed to this module.
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kUnitarityTolerance = 1e-10;
/// Norm that may leak out of the truncated space before a state is rejected.
inline constexpr double kTruncationLeakage = 1e-6;

/// Per-mode occupation cutoff; the joint space has dimension (n_max + 1)^2.
class TruncationDim {
 public:
    explicit TruncationDim(int n_max);

    int n_max() const { return n_max_; }
    int per_mode() const { return n_max_ + 1; }
    Eigen::Index size() const { return Eigen::Index(per_mode()) * per_mode(); }
    Eigen::Index index(int n1, int n2) const { return Eigen::Index(n1) * per_mode() + n2; }

    /// Displacements with |z| above this are likely to leak norm out of the truncation.
    double displacement_guard() const { return n_max_ / 10.0; }

    bool operator==(const TruncationDim&) const = default;

 private:
    int n_max_;
};

class TruncatedOperator {
 public:
    TruncatedOperator(TruncationDim dim, FockMatrix entries);

    static TruncatedOperator identity(TruncationDim dim);

    TruncationDim dim() const { return dim_; }
    const FockMatrix& matrix() const { return entries_; }
    complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

    TruncatedOperator adjoint() const;
    TruncatedOperator operator*(const TruncatedOperator& rhs) const;

    /// Element-wise max norm of (this^dagger this - I).
    double unitarity_defect() const;

 private:
    TruncationDim dim_;
    FockMatrix entries_;
};

class DensityOperator {
 public:
    /// Validates hermiticity and trace in [1 - kTruncationLeakage, 1 + 1e-10].
    explicit DensityOperator(TruncatedOperator op);

    /// |psi><psi| for a state vector of norm 1 (up to truncation leakage).
    static DensityOperator pure(TruncationDim dim, const FockVector& psi);

    const TruncatedOperator& op() const { return op_; }
    const FockMatrix& matrix() const { return op_.matrix(); }
    TruncationDim dim() const { return op_.dim(); }

    complex trace() const { return op_.matrix().trace(); }
    /// Tr(rho^2).
    double purity() const;

 private:
    TruncatedOperator op_;
};

enum class Mode { first = 1, second = 2 };

/// Annihilation operator of one mode, identity on the other. The creation
/// operator is its adjoint.
TruncatedOperator mode_annihilation(Mode mode, TruncationDim dim);

/// d T_p / d theta at theta = 0, where T_p is the polarizer transmission matrix.
Eigen::Matrix2d polarizer_generator();

/// ((cos^2, cos sin), (sin cos, sin^2)).
Eigen::Matrix2d polarizer_transmission(double theta);

/// exp{i theta (a1^dagger a2 + a2^dagger a1)}, built block by block over sectors
/// of fixed total occupation, so every element between different sectors is
/// exactly zero.
TruncatedOperator polarizer_unitary(double theta, TruncationDim dim);

/// exp{z1 a1^dagger - z1* a1 + z2 a2^dagger - z2* a2}. Emits a warning through
/// the diagnostic sink when |z1| or |z2| exceeds dim.displacement_guard().
TruncatedOperator displacement_operator(complex z1, complex z2, TruncationDim dim);

/// D(z1, z2)|n1, n2>. Throws std::out_of_range if an occupation exceeds n_max.
FockVector displaced_fock_state(complex z1, int n1, complex z2, int n2, TruncationDim dim);

/// U^dagger rho U. Throws std::invalid_argument when u is not unitary to
/// kUnitarityTolerance or the dimensions differ. Block-diagonal unitaries are
/// applied sector by sector.
DensityOperator evolve(const DensityOperator& rho, const TruncatedOperator& u);

/// Tr(r1 r2 r3), tagged Method::fock_oracle.
PhaseResult triple_product_trace(const DensityOperator& r1, const DensityOperator& r2,
                                 const DensityOperator& r3);

using WarningHandler = std::function<void(std::string_view)>;

/// Replaces the process-wide warning sink (default: stderr). Returns the old one.
WarningHandler set_warning_handler(WarningHandler handler);
void emit_warning(std::string_view message);

}  // namespace bargmann

#endif  // BARGMANN_FOCK_HPP
