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

#include "bargmann/fock.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bargmann {

namespace {

std::mutex& warning_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler& warning_handler() {
    static WarningHandler handler = [](std::string_view msg) { std::cerr << "warning: " << msg << "\n"; };
    return handler;
}

// Joint-basis indices grouped by total occupation n1 + n2, ascending n1 inside a sector.
std::vector<std::vector<Eigen::Index>> occupation_sectors(TruncationDim dim) {
    const int n = dim.n_max();
    std::vector<std::vector<Eigen::Index>> sectors(2 * n + 1);
    for (int total = 0; total <= 2 * n; ++total) {
        for (int n1 = std::max(0, total - n); n1 <= std::min(total, n); ++n1) {
            sectors[total].push_back(dim.index(n1, total - n1));
        }
    }
    return sectors;
}

int sector_of(TruncationDim dim, Eigen::Index idx) {
    return int(idx / dim.per_mode() + idx % dim.per_mode());
}

bool is_sector_block_diagonal(const TruncatedOperator& u) {
    const auto& m = u.matrix();
    const auto dim = u.dim();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const int sc = sector_of(dim, c);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (sector_of(dim, r) != sc && m(r, c) != complex(0.0, 0.0)) {
                return false;
            }
        }
    }
    return true;
}

// exp of an anti-Hermitian single-mode generator z a^dagger - z* a.
Eigen::MatrixXcd single_mode_displacement(complex z, int n_max) {
    const int d = n_max + 1;
    Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        const double s = std::sqrt(double(n));
        generator(n, n - 1) += z * s;             // a^dagger
        generator(n - 1, n) -= std::conj(z) * s;  // a
    }
    const Eigen::MatrixXcd hermitian = complex(0, 1) * generator;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian);
    const Eigen::VectorXcd phases =
        (complex(0, -1) * eig.eigenvalues().cast<complex>()).array().exp().matrix();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(warning_mutex());
    auto old = std::move(warning_handler());
    warning_handler() = std::move(handler);
    return old;
}

void emit_warning(std::string_view message) {
    std::lock_guard lock(warning_mutex());
    if (warning_handler()) {
        warning_handler()(message);
    }
}

TruncationDim::TruncationDim(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
}

TruncatedOperator::TruncatedOperator(TruncationDim dim, FockMatrix entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.rows() != dim_.size() || entries_.cols() != dim_.size()) {
        throw std::invalid_argument("operator shape does not match the truncation dimension");
    }
}

TruncatedOperator TruncatedOperator::identity(TruncationDim dim) {
    return TruncatedOperator(dim, FockMatrix::Identity(dim.size(), dim.size()));
}

TruncatedOperator TruncatedOperator::adjoint() const {
    return TruncatedOperator(dim_, entries_.adjoint());
}

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& rhs) const {
    if (!(dim_ == rhs.dim_)) {
        throw std::invalid_argument("operator dimensions differ");
    }
    return TruncatedOperator(dim_, entries_ * rhs.entries_);
}

double TruncatedOperator::unitarity_defect() const {
    const auto n = entries_.rows();
    return (entries_.adjoint() * entries_ - FockMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(TruncatedOperator op) : op_(std::move(op)) {
    const auto& m = op_.matrix();
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermiticityTolerance) {
        std::ostringstream msg;
        msg << "density operator is not Hermitian (defect " << herm << ")";
        throw std::invalid_argument(msg.str());
    }
    const complex tr = m.trace();
    if (std::abs(tr.imag()) > 1e-10 || tr.real() < 1.0 - kTruncationLeakage || tr.real() > 1.0 + 1e-10) {
        std::ostringstream msg;
        msg << "density operator trace " << tr << " outside [1 - " << kTruncationLeakage << ", 1]";
        throw std::invalid_argument(msg.str());
    }
}

DensityOperator DensityOperator::pure(TruncationDim dim, const FockVector& psi) {
    if (psi.size() != dim.size()) {
        throw std::invalid_argument("state vector size does not match the truncation dimension");
    }
    return DensityOperator(TruncatedOperator(dim, psi * psi.adjoint()));
}

double DensityOperator::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix().squaredNorm();
}

TruncatedOperator mode_annihilation(Mode mode, TruncationDim dim) {
    FockMatrix a = FockMatrix::Zero(dim.size(), dim.size());
    const int n_max = dim.n_max();
    for (int n1 = 0; n1 <= n_max; ++n1) {
        for (int n2 = 0; n2 <= n_max; ++n2) {
            if (mode == Mode::first && n1 > 0) {
                a(dim.index(n1 - 1, n2), dim.index(n1, n2)) = std::sqrt(double(n1));
            } else if (mode == Mode::second && n2 > 0) {
                a(dim.index(n1, n2 - 1), dim.index(n1, n2)) = std::sqrt(double(n2));
            }
        }
    }
    return TruncatedOperator(dim, std::move(a));
}

Eigen::Matrix2d polarizer_transmission(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Eigen::Matrix2d t;
    t << c * c, c * s, s * c, s * s;
    return t;
}

Eigen::Matrix2d polarizer_generator() {
    // d/dtheta of ((cos^2, cos sin), (sin cos, sin^2)) at 0.
    Eigen::Matrix2d g;
    g << 0.0, 1.0, 1.0, 0.0;
    return g;
}

TruncatedOperator polarizer_unitary(double theta, TruncationDim dim) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("polarizer angle must be finite");
    }
    FockMatrix u = FockMatrix::Zero(dim.size(), dim.size());
    const int n_max = dim.n_max();
    for (const auto& sector : occupation_sectors(dim)) {
        const auto m = Eigen::Index(sector.size());
        // Within a sector, a1^dagger a2 + a2^dagger a1 couples n1 to n1 + 1.
        const int total = sector_of(dim, sector.front());
        const int n1_lo = std::max(0, total - n_max);
        Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index k = 0; k + 1 < m; ++k) {
            const int n1 = n1_lo + int(k);
            const double amp = std::sqrt(double(n1 + 1) * double(total - n1));
            gen(k + 1, k) = amp;
            gen(k, k + 1) = amp;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gen);
        Eigen::VectorXcd phases(m);
        for (Eigen::Index k = 0; k < m; ++k) {
            phases(k) = std::polar(1.0, theta * eig.eigenvalues()(k));
        }
        const Eigen::MatrixXcd v = eig.eigenvectors().cast<complex>();
        const Eigen::MatrixXcd block = v * phases.asDiagonal() * v.transpose();
        for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index c = 0; c < m; ++c) {
                u(sector[r], sector[c]) = block(r, c);
            }
        }
    }
    return TruncatedOperator(dim, std::move(u));
}

TruncatedOperator displacement_operator(complex z1, complex z2, TruncationDim dim) {
    const double guard = dim.displacement_guard();
    if (std::abs(z1) > guard || std::abs(z2) > guard) {
        std::ostringstream msg;
        msg << "displacement |z| = " << std::max(std::abs(z1), std::abs(z2)) << " exceeds the truncation guard "
            << guard << " at n_max = " << dim.n_max() << "; Fock results may carry truncation error";
        emit_warning(msg.str());
    }
    // The two generators act on different tensor factors and commute, so the
    // joint exponential is the Kronecker product of the single-mode ones.
    const Eigen::MatrixXcd d1 = single_mode_displacement(z1, dim.n_max());
    const Eigen::MatrixXcd d2 = single_mode_displacement(z2, dim.n_max());
    const int p = dim.per_mode();
    FockMatrix d(dim.size(), dim.size());
    for (int r1 = 0; r1 < p; ++r1) {
        for (int c1 = 0; c1 < p; ++c1) {
            d.block(Eigen::Index(r1) * p, Eigen::Index(c1) * p, p, p) = d1(r1, c1) * d2;
        }
    }
    return TruncatedOperator(dim, std::move(d));
}

FockVector displaced_fock_state(complex z1, int n1, complex z2, int n2, TruncationDim dim) {
    if (n1 < 0 || n2 < 0 || n1 > dim.n_max() || n2 > dim.n_max()) {
        throw std::out_of_range("occupation outside the truncated space");
    }
    return displacement_operator(z1, z2, dim).matrix().col(dim.index(n1, n2));
}

DensityOperator evolve(const DensityOperator& rho, const TruncatedOperator& u) {
    if (!(rho.dim() == u.dim())) {
        throw std::invalid_argument("evolve: dimensions differ");
    }
    const auto dim = u.dim();
    if (!is_sector_block_diagonal(u)) {
        if (u.unitarity_defect() > kUnitarityTolerance) {
            throw std::invalid_argument("evolve: operator is not unitary");
        }
        return DensityOperator(TruncatedOperator(dim, u.matrix().adjoint() * rho.matrix() * u.matrix()));
    }

    const auto sectors = occupation_sectors(dim);
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(sectors.size());
    for (const auto& s : sectors) {
        Eigen::MatrixXcd b = u.matrix()(s, s);
        const auto m = b.rows();
        if ((b.adjoint() * b - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() > kUnitarityTolerance) {
            throw std::invalid_argument("evolve: operator is not unitary");
        }
        blocks.push_back(std::move(b));
    }
    FockMatrix out(dim.size(), dim.size());
    for (std::size_t i = 0; i < sectors.size(); ++i) {
        for (std::size_t j = 0; j < sectors.size(); ++j) {
            out(sectors[i], sectors[j]) = blocks[i].adjoint() * rho.matrix()(sectors[i], sectors[j]) * blocks[j];
        }
    }
    return DensityOperator(TruncatedOperator(dim, std::move(out)));
}

PhaseResult triple_product_trace(const DensityOperator& r1, const DensityOperator& r2, const DensityOperator& r3) {
    if (!(r1.dim() == r2.dim()) || !(r2.dim() == r3.dim())) {
        throw std::invalid_argument("triple_product_trace: dimensions differ");
    }
    const FockMatrix r12 = r1.matrix() * r2.matrix();
    const complex tr = r12.cwiseProduct(r3.matrix().transpose()).sum();
    return PhaseResult::from_invariant(tr, Method::fock_oracle);
}

}  // namespace bargmann
