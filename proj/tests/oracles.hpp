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

// Reference computations used only by the tests. Nothing here calls into the
// library, so each helper is an independent check on the code under test.

#ifndef BARGMANN_TESTS_ORACLES_HPP
#define BARGMANN_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// e^{-|z|^2/2} z^n / sqrt(n!), accumulated term by term.
inline cd coherent_amplitude(cd z, int n) {
    cd a = std::exp(-0.5 * std::norm(z));
    for (int k = 1; k <= n; ++k) {
        a *= z / std::sqrt(double(k));
    }
    return a;
}

// <a|b> for single-mode coherent states summed over the Fock basis.
inline cd coherent_overlap_series(cd a, cd b, int n_max) {
    cd s = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        s += std::conj(coherent_amplitude(a, n)) * coherent_amplitude(b, n);
    }
    return s;
}

// <m|D(z)|n> through associated Laguerre polynomials.
inline cd displacement_element(cd z, int m, int n) {
    const double x = std::norm(z);
    const double g = std::exp(-0.5 * x);
    if (m >= n) {
        return std::sqrt(std::tgamma(n + 1.0) / std::tgamma(m + 1.0)) * std::pow(z, m - n) * g *
               std::assoc_laguerre(unsigned(n), unsigned(m - n), x);
    }
    return std::sqrt(std::tgamma(m + 1.0) / std::tgamma(n + 1.0)) * std::pow(-std::conj(z), n - m) * g *
           std::assoc_laguerre(unsigned(m), unsigned(n - m), x);
}

// Two-mode D(z1,z2)|n1,n2> in the row-major (n1,n2) layout.
inline Eigen::VectorXcd displaced_fock(cd z1, int n1, cd z2, int n2, int n_max) {
    const int d = n_max + 1;
    Eigen::VectorXcd v(d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            v(a * d + b) = displacement_element(z1, a, n1) * displacement_element(z2, b, n2);
        }
    }
    return v;
}

inline Eigen::VectorXcd coherent_vector(cd z1, cd z2, int n_max) {
    const int d = n_max + 1;
    Eigen::VectorXcd v(d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            v(a * d + b) = coherent_amplitude(z1, a) * coherent_amplitude(z2, b);
        }
    }
    return v;
}

// <D(z)1|D(w)1> = e^{i Im(conj(z) w)} e^{-|w-z|^2/2} (1 - |w-z|^2).
inline cd displaced_one_overlap(cd z, cd w) {
    const double x = std::norm(w - z);
    return std::exp(cd(0.0, std::imag(std::conj(z) * w))) * std::exp(-0.5 * x) * (1.0 - x);
}

// Signed area of the triangle (a, b, c) in the complex plane.
inline double shoelace_area(cd a, cd b, cd c) {
    return 0.5 * ((b.real() - a.real()) * (c.imag() - a.imag()) - (c.real() - a.real()) * (b.imag() - a.imag()));
}

// Transmission matrix ((cos^2, cos sin), (sin cos, sin^2)).
inline Eigen::Matrix2d transmission(double t) {
    Eigen::Matrix2d m;
    m << std::cos(t) * std::cos(t), std::cos(t) * std::sin(t), std::sin(t) * std::cos(t),
        std::sin(t) * std::sin(t);
    return m;
}

inline Eigen::Matrix2d transmission_derivative(double t, double h = 1e-6) {
    return (transmission(t + h) - transmission(t - h)) / (2.0 * h);
}

// Tr(r1 r2 r3) for pure states: <a|b><b|c><c|a>.
inline cd pure_triple(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, const Eigen::VectorXcd& c) {
    return a.dot(b) * b.dot(c) * c.dot(a);
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle

#endif  // BARGMANN_TESTS_ORACLES_HPP
