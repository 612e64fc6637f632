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

#ifndef BARGMANN_PFUNCTION_HPP
#define BARGMANN_PFUNCTION_HPP

// Glauber-Sudarshan P-functions of small Fock states as finite sums of shifted
// delta-function derivatives, and their pairing with smooth test functions.
//
// Measure convention: rho = (1/pi^2) Int d^2z1 d^2z2 P(z1, z2) |z1, z2><z1, z2|
// with z = q + i p and d^2z = dq dp. pair() includes the 1/pi^2, so pairing
// any P with the constant 1 returns Tr(rho).

#include <array>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "bargmann/phase.hpp"

namespace bargmann {

inline constexpr double kPhaseSpaceMeasure = 1.0 / (std::numbers::pi * std::numbers::pi);
inline constexpr int kMaxDerivativeOrder = 2;

struct PhaseSpacePoint {
    double q = 0.0;
    double p = 0.0;

    complex to_complex() const { return {q, p}; }
    static PhaseSpacePoint from_complex(complex z) { return {z.real(), z.imag()}; }

    PhaseSpacePoint operator+(const PhaseSpacePoint& o) const { return {q + o.q, p + o.p}; }
    bool operator==(const PhaseSpacePoint&) const = default;
};

/// Per-mode points (mode 1, mode 2).
using TwoModePoint = std::array<PhaseSpacePoint, 2>;

/// Coordinates (q1, p1, q2, p2).
using PhaseSpaceCoords = std::array<double, 4>;

/// Derivative orders along (q1, p1, q2, p2).
using DerivativeOrders = std::array<int, 4>;

struct Occupation {
    int n1 = 0;
    int n2 = 0;
    bool operator==(const Occupation&) const = default;
};

/// coeff * d^{orders} delta^4(x - centers); pairing with f gives
/// coeff * (-1)^{|orders|} d^{orders} f(centers).
struct DeltaDerivativeTerm {
    complex coeff{1.0};
    PhaseSpacePoint center1;
    PhaseSpacePoint center2;
    DerivativeOrders orders{};

    bool operator==(const DeltaDerivativeTerm&) const = default;
};

class QuasiProbability {
 public:
    /// The zero distribution.
    QuasiProbability() = default;

    /// P = norm_constant * E(x) * sum_terms, where E = exp{sum_j (q_j - c_j)^2 + (p_j - d_j)^2}
    /// around envelope_center when `envelope` is set and E = 1 otherwise.
    QuasiProbability(std::vector<DeltaDerivativeTerm> terms, bool envelope, TwoModePoint envelope_center,
                     double norm_constant);

    const std::vector<DeltaDerivativeTerm>& terms() const { return terms_; }
    bool envelope() const { return envelope_; }
    const TwoModePoint& envelope_center() const { return envelope_center_; }
    double norm_constant() const { return norm_constant_; }

    bool operator==(const QuasiProbability&) const = default;

 private:
    std::vector<DeltaDerivativeTerm> terms_;
    bool envelope_ = false;
    TwoModePoint envelope_center_{};
    double norm_constant_ = 1.0;
};

/// Smooth test function on two-mode phase space.
class TestFunction {
 public:
    virtual ~TestFunction() = default;
    /// d^{orders} f at x, or nullopt when that derivative is not provided.
    virtual std::optional<complex> partial(const PhaseSpaceCoords& x, const DerivativeOrders& orders) const = 0;
};

/// Polynomial in (q, p) with complex coefficients; coeffs[i][j] multiplies q^i p^j.
class Bivariate {
 public:
    Bivariate() = default;
    static Bivariate constant(complex c);
    static Bivariate q_power(int k);
    static Bivariate p_power(int k);

    complex operator()(double q, double p) const;
    Bivariate dq() const;
    Bivariate dp() const;

    Bivariate operator+(const Bivariate& o) const;
    Bivariate operator*(const Bivariate& o) const;
    Bivariate operator*(complex s) const;

 private:
    complex& at(std::size_t i, std::size_t j);
    std::vector<std::vector<complex>> coeffs_;
};

/// Single-mode function poly(q, p) * exp(exponent(q, p)), differentiated symbolically.
class GaussianPolynomial {
 public:
    GaussianPolynomial(Bivariate poly, Bivariate exponent);

    complex partial(double q, double p, int dq, int dp) const;

 private:
    Bivariate poly_;
    Bivariate exponent_;
};

/// <m|z><z|n> = e^{-|z|^2} z^m conj(z)^n / sqrt(m! n!).
GaussianPolynomial fock_element_function(int m, int n);
/// |<w|z>|^2 = e^{-|z - w|^2}.
GaussianPolynomial coherent_projector_function(complex w);
/// exp{-|z - center|^2 / (2 width^2)}.
GaussianPolynomial gaussian_bump(PhaseSpacePoint center, double width);
GaussianPolynomial constant_function(complex c = 1.0);

/// f(q1, p1, q2, p2) = g1(q1, p1) * g2(q2, p2). Provides every derivative order.
class SeparableTestFunction final : public TestFunction {
 public:
    SeparableTestFunction(GaussianPolynomial mode1, GaussianPolynomial mode2);
    std::optional<complex> partial(const PhaseSpaceCoords& x, const DerivativeOrders& orders) const override;

 private:
    GaussianPolynomial mode1_;
    GaussianPolynomial mode2_;
};

/// Test function given as one callback per supported derivative order.
class CallbackTestFunction final : public TestFunction {
 public:
    using Callback = std::function<complex(const PhaseSpaceCoords&)>;
    void set(const DerivativeOrders& orders, Callback fn);
    std::optional<complex> partial(const PhaseSpaceCoords& x, const DerivativeOrders& orders) const override;

 private:
    std::map<DerivativeOrders, Callback> callbacks_;
};

/// Central-difference derivatives of a value callback. Validation only: with
/// the default step the error grows like eps / step^order.
class FiniteDifferenceTestFunction final : public TestFunction {
 public:
    using Callback = std::function<complex(const PhaseSpaceCoords&)>;
    explicit FiniteDifferenceTestFunction(Callback value, double step = 1e-5);
    std::optional<complex> partial(const PhaseSpaceCoords& x, const DerivativeOrders& orders) const override;

 private:
    complex differentiate(PhaseSpaceCoords x, DerivativeOrders orders) const;
    Callback value_;
    double step_;
};

/// (1/pi^2) Int P f. Throws std::invalid_argument if f lacks a derivative the
/// terms (and the envelope product rule) require.
complex pair(const QuasiProbability& p, const TestFunction& f);

/// One mode's delta-derivative structure before tensoring.
struct ModeTerm {
    complex coeff{1.0};
    int dq = 0;
    int dp = 0;
};

struct ModePFunction {
    std::vector<ModeTerm> terms;
    double norm_constant = 1.0;
    bool envelope = false;
};

/// n = 0: pi * delta^2(z). n = 1: (pi/4) e^{q^2+p^2} {delta(q) delta''(p) + delta''(q) delta(p)}.
/// Throws std::invalid_argument for other occupations.
ModePFunction single_mode_p_function(int n);

/// Tensor product of two single-mode structures placed at the given centers.
QuasiProbability tensor_product(const ModePFunction& mode1, PhaseSpacePoint center1, const ModePFunction& mode2,
                                PhaseSpacePoint center2);

/// P-function of D(z01, z02)|n1, n2><n1, n2|D^dagger with z0j = shift[j], for
/// n1, n2 in {0, 1}.
QuasiProbability mehta_p_function(Occupation state, const TwoModePoint& shift = {});

/// Translates every delta center and the envelope center.
QuasiProbability shift_centers(const QuasiProbability& p, PhaseSpacePoint offset1, PhaseSpacePoint offset2);

/// Sum of two P-functions sharing the same envelope; norm constants are folded
/// into the term coefficients.
QuasiProbability combine(const QuasiProbability& a, const QuasiProbability& b);

inline constexpr int kMaxReconstructOccupation = 5;

/// <m1, m2|rho|n1, n2> from the P-function, by pairing against
/// <m1, m2|z><z|n1, n2>. Occupations must lie in [0, kMaxReconstructOccupation].
complex reconstruct_density_element(const QuasiProbability& p, Occupation bra, Occupation ket);

}  // namespace bargmann

#endif  // BARGMANN_PFUNCTION_HPP
