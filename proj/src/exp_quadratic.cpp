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

#include "bargmann/exp_quadratic.hpp"

#include <stdexcept>
#include <vector>

namespace bargmann {

ComplexQuadratic::ComplexQuadratic(Eigen::Index variables)
    : h_(Eigen::MatrixXcd::Zero(variables, variables)), g_(Eigen::VectorXcd::Zero(variables)) {}

void ComplexQuadratic::add_linear(const LinearForm& l, complex scale) {
    g_ += scale * l;
}

void ComplexQuadratic::add_product(const LinearForm& l1, const LinearForm& l2, complex scale) {
    // d^2/dx_i dx_j of l1(x) l2(x) = l1_i l2_j + l2_i l1_j.
    h_ += scale * (l1 * l2.transpose() + l2 * l1.transpose());
}

complex ComplexQuadratic::value(const Eigen::VectorXd& x) const {
    const Eigen::VectorXcd xc = x.cast<complex>();
    return 0.5 * xc.dot(h_ * xc) + xc.dot(g_) + c_;  // dot() conjugates its left argument, which is real
}

Eigen::VectorXcd ComplexQuadratic::gradient(const Eigen::VectorXd& x) const {
    return h_ * x.cast<complex>() + g_;
}

LinearForm unit_form(Eigen::Index variables, Eigen::Index k) {
    LinearForm l = LinearForm::Zero(variables);
    l(k) = 1.0;
    return l;
}

complex exp_quadratic_partial(const ComplexQuadratic& q, const Eigen::VectorXd& x, std::span<const int> orders) {
    if (Eigen::Index(orders.size()) != q.variables() || x.size() != q.variables()) {
        throw std::invalid_argument("exp_quadratic_partial: size mismatch");
    }
    // Only variables that are actually differentiated take part in the lattice.
    std::vector<Eigen::Index> active;
    std::vector<int> max_order;
    for (Eigen::Index k = 0; k < q.variables(); ++k) {
        if (orders[k] < 0) {
            throw std::invalid_argument("exp_quadratic_partial: negative derivative order");
        }
        if (orders[k] > 0) {
            active.push_back(k);
            max_order.push_back(orders[k]);
        }
    }
    const complex base = std::exp(q.value(x));
    if (active.empty()) {
        return base;
    }
    const Eigen::VectorXcd grad = q.gradient(x);
    const Eigen::MatrixXcd& hess = q.hessian();

    const std::size_t m = active.size();
    std::vector<std::size_t> stride(m);
    std::size_t states = 1;
    for (std::size_t i = 0; i < m; ++i) {
        stride[i] = states;
        states *= std::size_t(max_order[i] + 1);
    }
    if (states > (std::size_t(1) << 24)) {
        throw std::invalid_argument("exp_quadratic_partial: derivative order too high");
    }

    // w[idx] = exp(-Q) d^{k(idx)} exp(Q); each entry depends only on smaller indices.
    std::vector<complex> w(states);
    std::vector<int> k(m, 0);
    w[0] = 1.0;
    for (std::size_t idx = 1; idx < states; ++idx) {
        // Advance the mixed-radix counter k to represent idx.
        for (std::size_t i = 0; i < m; ++i) {
            if (++k[i] <= max_order[i]) {
                break;
            }
            k[i] = 0;
        }
        std::size_t v = 0;
        while (k[v] == 0) {
            ++v;
        }
        const std::size_t rest = idx - stride[v];  // k - e_v
        complex acc = grad(active[v]) * w[rest];
        for (std::size_t u = 0; u < m; ++u) {
            const int count = k[u] - (u == v ? 1 : 0);
            if (count > 0) {
                acc += double(count) * hess(active[v], active[u]) * w[rest - stride[u]];
            }
        }
        w[idx] = acc;
    }
    return base * w[states - 1];
}

}  // namespace bargmann
