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

#ifndef BARGMANN_EXP_QUADRATIC_HPP
#define BARGMANN_EXP_QUADRATIC_HPP

// exp(Q(x)) for a complex quadratic Q in real variables, with exact mixed
// partial derivatives. Products of coherent overlaps and Gaussian envelopes are
// all of this form, so every distributional pairing in this library reduces to
// a finite number of such derivatives.

#include <Eigen/Dense>

#include <span>

#include "bargmann/phase.hpp"

namespace bargmann {

/// Coefficients of a complex linear form sum_k c_k x_k over real variables x.
using LinearForm = Eigen::VectorXcd;

/// Q(x) = x^T H x / 2 + g^T x + c with H complex symmetric.
class ComplexQuadratic {
 public:
    explicit ComplexQuadratic(Eigen::Index variables);

    Eigen::Index variables() const { return g_.size(); }

    void add_constant(complex c) { c_ += c; }
    void add_linear(const LinearForm& l, complex scale = 1.0);
    /// Adds scale * l1(x) * l2(x).
    void add_product(const LinearForm& l1, const LinearForm& l2, complex scale = 1.0);

    complex value(const Eigen::VectorXd& x) const;
    Eigen::VectorXcd gradient(const Eigen::VectorXd& x) const;
    const Eigen::MatrixXcd& hessian() const { return h_; }

 private:
    Eigen::MatrixXcd h_;
    Eigen::VectorXcd g_;
    complex c_{};
};

/// Unit linear form selecting variable k.
LinearForm unit_form(Eigen::Index variables, Eigen::Index k);

/// d^{orders} exp(Q) evaluated at x; orders[k] is the derivative order in x_k.
///
/// Uses exp(-Q) d^S exp(Q) = sum over partitions of the multiset S into
/// singletons and pairs of prod grad_i * prod H_ij, evaluated bottom-up over
/// the lattice of partial order vectors.
complex exp_quadratic_partial(const ComplexQuadratic& q, const Eigen::VectorXd& x, std::span<const int> orders);

}  // namespace bargmann

#endif  // BARGMANN_EXP_QUADRATIC_HPP
