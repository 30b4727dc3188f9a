/*
   Copyright 2026 The msolab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace msolab {

using Scalar = std::complex<double>;

/**
 * A function on the unit circle given by finitely many Fourier coefficients.
 *
 * Coefficients are held for the contiguous degree band [lo, hi]; the band may
 * be asymmetric and is trimmed so that both end coefficients are nonzero.
 * The zero function has an empty band (lo = 0, hi = -1).
 *
 * tail_bound is bookkeeping only: an upper bound on the L2 mass dropped by
 * whatever truncation produced the value. Arithmetic propagates it but never
 * uses it to alter coefficients.
 */
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int lo, std::vector<Scalar> coeffs, double tail_bound = 0.0);

    static LaurentPolynomial monomial(int degree, Scalar c = 1.0);
    static LaurentPolynomial constant(Scalar c) { return monomial(0, c); }
    static LaurentPolynomial from_terms(std::span<const std::pair<int, Scalar>> terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
    double tail_bound() const noexcept { return tail_; }

    Scalar coeff(int k) const noexcept;
    Scalar operator[](int k) const noexcept { return coeff(k); }

    /// max |k| over the band; 0 for the zero function.
    int degree() const noexcept;
    double norm() const noexcept;
    double norm_squared() const noexcept;
    double max_abs_coeff() const noexcept;

    /// Pointwise value at a point of the circle (or anywhere in C \ {0}).
    Scalar operator()(Scalar zeta) const noexcept;

    /// z^k * f.
    LaurentPolynomial shifted(int k) const;
    LaurentPolynomial with_tail_bound(double tail) const;
    /// Drops coefficients with modulus <= threshold.
    LaurentPolynomial chopped(double threshold) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(Scalar s);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, Scalar s) { return a *= s; }
    friend LaurentPolynomial operator*(Scalar s, LaurentPolynomial a) { return a *= s; }
    LaurentPolynomial operator-() const { return *this * Scalar(-1.0); }

    /// Exact coefficient equality (band and values); tail metadata ignored.
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

private:
    void trim();

    int lo_ = 0;
    std::vector<Scalar> coeffs_;
    double tail_ = 0.0;
};

/// Convolution of coefficient sequences (pointwise product on the circle).
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// <f, g> = sum_k c_k(f) conj(c_k(g)).
Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Keeps degrees in [lo, hi]; an absent bound means unbounded on that side.
LaurentPolynomial project_band(const LaurentPolynomial& f, std::optional<int> lo, std::optional<int> hi);

/// Projection onto H^2 (degrees >= 0).
inline LaurentPolynomial positive_part(const LaurentPolynomial& f) { return project_band(f, 0, std::nullopt); }
/// Projection onto the conjugate-analytic part (degrees <= -1).
inline LaurentPolynomial negative_part(const LaurentPolynomial& f) { return project_band(f, std::nullopt, -1); }

/// (Jf)(z) = conj(z) * conj(f(z)); coefficient rule (Jf)_j = conj(c_{-j-1}).
LaurentPolynomial involution_J(const LaurentPolynomial& f);

/// Pointwise complex conjugate on the circle: (conj f)_k = conj(c_{-k}).
LaurentPolynomial conj_function(const LaurentPolynomial& f);

/// Largest |f(zeta)| over `samples` uniform points of the circle.
double sampled_sup_norm(const LaurentPolynomial& f, int samples);

}  // namespace msolab
