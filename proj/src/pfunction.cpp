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

#include "bargmann/pfunction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bargmann {

namespace {

void check_orders(const DerivativeOrders& orders) {
    for (int k : orders) {
        if (k < 0 || k > kMaxDerivativeOrder) {
            throw std::invalid_argument("derivative orders must lie in [0, 2]");
        }
    }
}

// k-th derivative of exp{(x - c)^2} at x, k <= 2.
double envelope_derivative(double x, double c, int k) {
    const double u = x - c;
    const double e = std::exp(u * u);
    switch (k) {
        case 0:
            return e;
        case 1:
            return 2.0 * u * e;
        case 2:
            return (2.0 + 4.0 * u * u) * e;
        default:
            throw std::invalid_argument("envelope derivative order above 2");
    }
}

double binomial(int n, int k) {
    return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
}

std::string orders_string(const DerivativeOrders& k) {
    std::ostringstream s;
    s << "(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ")";
    return s.str();
}

}  // namespace

QuasiProbability::QuasiProbability(std::vector<DeltaDerivativeTerm> terms, bool envelope,
                                   TwoModePoint envelope_center, double norm_constant)
    : terms_(std::move(terms)), envelope_(envelope), envelope_center_(envelope_center), norm_constant_(norm_constant) {
    if (!std::isfinite(norm_constant_)) {
        throw std::invalid_argument("norm constant must be finite");
    }
    for (const auto& t : terms_) {
        check_orders(t.orders);
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
            throw std::invalid_argument("term coefficient must be finite");
        }
    }
}

// --- Bivariate -------------------------------------------------------------

complex& Bivariate::at(std::size_t i, std::size_t j) {
    if (coeffs_.size() <= i) {
        coeffs_.resize(i + 1);
    }
    if (coeffs_[i].size() <= j) {
        coeffs_[i].resize(j + 1);
    }
    return coeffs_[i][j];
}

Bivariate Bivariate::constant(complex c) {
    Bivariate b;
    b.at(0, 0) = c;
    return b;
}

Bivariate Bivariate::q_power(int k) {
    Bivariate b;
    b.at(std::size_t(k), 0) = 1.0;
    return b;
}

Bivariate Bivariate::p_power(int k) {
    Bivariate b;
    b.at(0, std::size_t(k)) = 1.0;
    return b;
}

complex Bivariate::operator()(double q, double p) const {
    complex sum = 0.0;
    double qi = 1.0;
    for (const auto& row : coeffs_) {
        double pj = 1.0;
        for (const auto& c : row) {
            sum += c * qi * pj;
            pj *= p;
        }
        qi *= q;
    }
    return sum;
}

Bivariate Bivariate::dq() const {
    Bivariate out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
            out.at(i - 1, j) += double(i) * coeffs_[i][j];
        }
    }
    return out;
}

Bivariate Bivariate::dp() const {
    Bivariate out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 1; j < coeffs_[i].size(); ++j) {
            out.at(i, j - 1) += double(j) * coeffs_[i][j];
        }
    }
    return out;
}

Bivariate Bivariate::operator+(const Bivariate& o) const {
    Bivariate out = *this;
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_[i].size(); ++j) {
            out.at(i, j) += o.coeffs_[i][j];
        }
    }
    return out;
}

Bivariate Bivariate::operator*(const Bivariate& o) const {
    Bivariate out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
            for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
                for (std::size_t l = 0; l < o.coeffs_[k].size(); ++l) {
                    out.at(i + k, j + l) += coeffs_[i][j] * o.coeffs_[k][l];
                }
            }
        }
    }
    return out;
}

Bivariate Bivariate::operator*(complex s) const {
    Bivariate out = *this;
    for (auto& row : out.coeffs_) {
        for (auto& c : row) {
            c *= s;
        }
    }
    return out;
}

// --- single-mode test functions ---------------------------------------------

GaussianPolynomial::GaussianPolynomial(Bivariate poly, Bivariate exponent)
    : poly_(std::move(poly)), exponent_(std::move(exponent)) {}

complex GaussianPolynomial::partial(double q, double p, int dq, int dp) const {
    // d(P e^S) = (dP + P dS) e^S, applied dq times in q then dp times in p.
    Bivariate poly = poly_;
    const Bivariate s_q = exponent_.dq();
    const Bivariate s_p = exponent_.dp();
    for (int i = 0; i < dq; ++i) {
        poly = poly.dq() + poly * s_q;
    }
    for (int i = 0; i < dp; ++i) {
        poly = poly.dp() + poly * s_p;
    }
    return poly(q, p) * std::exp(exponent_(q, p));
}

GaussianPolynomial fock_element_function(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::out_of_range("negative occupation");
    }
    const complex i(0.0, 1.0);
    const Bivariate z = Bivariate::q_power(1) + Bivariate::p_power(1) * i;
    const Bivariate zbar = Bivariate::q_power(1) + Bivariate::p_power(1) * (-i);
    Bivariate poly = Bivariate::constant(1.0 / std::sqrt(std::tgamma(m + 1.0) * std::tgamma(n + 1.0)));
    for (int k = 0; k < m; ++k) {
        poly = poly * z;
    }
    for (int k = 0; k < n; ++k) {
        poly = poly * zbar;
    }
    const Bivariate exponent = (Bivariate::q_power(2) + Bivariate::p_power(2)) * -1.0;
    return GaussianPolynomial(std::move(poly), exponent);
}

GaussianPolynomial gaussian_bump(PhaseSpacePoint center, double width) {
    if (!(width > 0.0)) {
        throw std::invalid_argument("gaussian width must be positive");
    }
    // -((q - q0)^2 + (p - p0)^2) / (2 w^2)
    const Bivariate dq = Bivariate::q_power(1) + Bivariate::constant(-center.q);
    const Bivariate dp = Bivariate::p_power(1) + Bivariate::constant(-center.p);
    const Bivariate exponent = (dq * dq + dp * dp) * (-0.5 / (width * width));
    return GaussianPolynomial(Bivariate::constant(1.0), exponent);
}

GaussianPolynomial coherent_projector_function(complex w) {
    // e^{-|z - w|^2} is a bump of width 1/sqrt(2).
    return gaussian_bump(PhaseSpacePoint::from_complex(w), std::sqrt(0.5));
}

GaussianPolynomial constant_function(complex c) {
    return GaussianPolynomial(Bivariate::constant(c), Bivariate::constant(0.0));
}

SeparableTestFunction::SeparableTestFunction(GaussianPolynomial mode1, GaussianPolynomial mode2)
    : mode1_(std::move(mode1)), mode2_(std::move(mode2)) {}

std::optional<complex> SeparableTestFunction::partial(const PhaseSpaceCoords& x,
                                                      const DerivativeOrders& orders) const {
    return mode1_.partial(x[0], x[1], orders[0], orders[1]) * mode2_.partial(x[2], x[3], orders[2], orders[3]);
}

void CallbackTestFunction::set(const DerivativeOrders& orders, Callback fn) {
    callbacks_[orders] = std::move(fn);
}

std::optional<complex> CallbackTestFunction::partial(const PhaseSpaceCoords& x,
                                                     const DerivativeOrders& orders) const {
    const auto it = callbacks_.find(orders);
    if (it == callbacks_.end() || !it->second) {
        return std::nullopt;
    }
    return it->second(x);
}

FiniteDifferenceTestFunction::FiniteDifferenceTestFunction(Callback value, double step)
    : value_(std::move(value)), step_(step) {
    if (!(step_ > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
}

complex FiniteDifferenceTestFunction::differentiate(PhaseSpaceCoords x, DerivativeOrders orders) const {
    for (std::size_t v = 0; v < 4; ++v) {
        if (orders[v] == 0) {
            continue;
        }
        DerivativeOrders lower = orders;
        --lower[v];
        PhaseSpaceCoords plus = x;
        PhaseSpaceCoords minus = x;
        if (orders[v] == 2) {
            // Second derivative with one central stencil.
            --lower[v];
            plus[v] += step_;
            minus[v] -= step_;
            return (differentiate(plus, lower) - 2.0 * differentiate(x, lower) + differentiate(minus, lower)) /
                   (step_ * step_);
        }
        plus[v] += step_;
        minus[v] -= step_;
        return (differentiate(plus, lower) - differentiate(minus, lower)) / (2.0 * step_);
    }
    return value_(x);
}

std::optional<complex> FiniteDifferenceTestFunction::partial(const PhaseSpaceCoords& x,
                                                             const DerivativeOrders& orders) const {
    for (int k : orders) {
        if (k < 0 || k > kMaxDerivativeOrder) {
            return std::nullopt;
        }
    }
    return differentiate(x, orders);
}

// --- pairing ----------------------------------------------------------------

complex pair(const QuasiProbability& p, const TestFunction& f) {
    complex total = 0.0;
    const auto& ec = p.envelope_center();
    for (const auto& term : p.terms()) {
        const PhaseSpaceCoords x{term.center1.q, term.center1.p, term.center2.q, term.center2.p};
        const std::array<double, 4> env_center{ec[0].q, ec[0].p, ec[1].q, ec[1].p};
        const auto& k = term.orders;
        const int order_sum = k[0] + k[1] + k[2] + k[3];
        const double sign = (order_sum % 2 == 0) ? 1.0 : -1.0;

        auto require = [&](const DerivativeOrders& orders) {
            const auto value = f.partial(x, orders);
            if (!value) {
                throw std::invalid_argument("test function lacks derivative of order " + orders_string(orders));
            }
            return *value;
        };

        complex derivative = 0.0;
        if (!p.envelope()) {
            derivative = require(k);
        } else {
            // Product rule: d^k(E f) = sum_{b <= k} C(k, b) d^b E d^{k-b} f, E separable.
            for (int b0 = 0; b0 <= k[0]; ++b0) {
                for (int b1 = 0; b1 <= k[1]; ++b1) {
                    for (int b2 = 0; b2 <= k[2]; ++b2) {
                        for (int b3 = 0; b3 <= k[3]; ++b3) {
                            const DerivativeOrders b{b0, b1, b2, b3};
                            double env = 1.0;
                            for (std::size_t v = 0; v < 4; ++v) {
                                env *= binomial(k[v], b[v]) * envelope_derivative(x[v], env_center[v], b[v]);
                            }
                            const DerivativeOrders rest{k[0] - b0, k[1] - b1, k[2] - b2, k[3] - b3};
                            derivative += env * require(rest);
                        }
                    }
                }
            }
        }
        total += term.coeff * sign * derivative;
    }
    return kPhaseSpaceMeasure * p.norm_constant() * total;
}

// --- constructions -----------------------------------------------------------

ModePFunction single_mode_p_function(int n) {
    constexpr double pi = std::numbers::pi;
    switch (n) {
        case 0:
            return ModePFunction{{ModeTerm{1.0, 0, 0}}, pi, false};
        case 1:
            // e^{|z|^2} d_z d_zbar delta^2(z) with d_z d_zbar = (d_q^2 + d_p^2) / 4.
            return ModePFunction{{ModeTerm{1.0, 0, 2}, ModeTerm{1.0, 2, 0}}, pi / 4.0, true};
        default:
            throw std::invalid_argument("only occupations 0 and 1 have a P-function here");
    }
}

QuasiProbability tensor_product(const ModePFunction& mode1, PhaseSpacePoint center1, const ModePFunction& mode2,
                                PhaseSpacePoint center2) {
    std::vector<DeltaDerivativeTerm> terms;
    terms.reserve(mode1.terms.size() * mode2.terms.size());
    for (const auto& a : mode1.terms) {
        for (const auto& b : mode2.terms) {
            terms.push_back(DeltaDerivativeTerm{a.coeff * b.coeff, center1, center2, {a.dq, a.dp, b.dq, b.dp}});
        }
    }
    return QuasiProbability(std::move(terms), mode1.envelope || mode2.envelope, {center1, center2},
                            mode1.norm_constant * mode2.norm_constant);
}

QuasiProbability mehta_p_function(Occupation state, const TwoModePoint& shift) {
    if (state.n1 < 0 || state.n1 > 1 || state.n2 < 0 || state.n2 > 1) {
        throw std::invalid_argument("mehta_p_function supports occupations in {0, 1} per mode");
    }
    return tensor_product(single_mode_p_function(state.n1), shift[0], single_mode_p_function(state.n2), shift[1]);
}

QuasiProbability shift_centers(const QuasiProbability& p, PhaseSpacePoint offset1, PhaseSpacePoint offset2) {
    std::vector<DeltaDerivativeTerm> terms = p.terms();
    for (auto& t : terms) {
        t.center1 = t.center1 + offset1;
        t.center2 = t.center2 + offset2;
    }
    const TwoModePoint env{p.envelope_center()[0] + offset1, p.envelope_center()[1] + offset2};
    return QuasiProbability(std::move(terms), p.envelope(), env, p.norm_constant());
}

QuasiProbability combine(const QuasiProbability& a, const QuasiProbability& b) {
    if (a.envelope() != b.envelope() || (a.envelope() && a.envelope_center() != b.envelope_center())) {
        throw std::invalid_argument("combine: P-functions carry different envelopes");
    }
    std::vector<DeltaDerivativeTerm> terms;
    for (const auto* src : {&a, &b}) {
        for (auto t : src->terms()) {
            t.coeff *= src->norm_constant();
            terms.push_back(t);
        }
    }
    return QuasiProbability(std::move(terms), a.envelope(), a.envelope_center(), 1.0);
}

complex reconstruct_density_element(const QuasiProbability& p, Occupation bra, Occupation ket) {
    for (int n : {bra.n1, bra.n2, ket.n1, ket.n2}) {
        if (n < 0 || n > kMaxReconstructOccupation) {
            throw std::out_of_range("reconstruction occupation outside [0, 5]");
        }
    }
    const SeparableTestFunction f(fock_element_function(bra.n1, ket.n1), fock_element_function(bra.n2, ket.n2));
    return pair(p, f);
}

}  // namespace bargmann
