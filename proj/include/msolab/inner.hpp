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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "msolab/laurent.hpp"

namespace msolab {

struct OrthonormalBasis;

/// Default cap on the coefficient mass a series truncation may discard.
inline constexpr double kDefaultTailCap = 1e-13;
/// Zeros beyond this modulus need BlaschkeOptions::allow_high_modulus.
inline constexpr double kDefaultModulusCap = 0.95;

struct BlaschkeOptions {
    bool allow_high_modulus = false;
    double tail_cap = kDefaultTailCap;
};

/**
 * Finite Blaschke product c * prod_i (z - a_i) / (1 - conj(a_i) z).
 *
 * Zeros are kept in input order (the Takenaka-Malmquist basis follows it).
 * Construction rejects constant products, zeros outside the open disk and
 * non-unimodular constants. The power series truncated at the cap is computed
 * once on construction and shared between copies.
 */
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<Scalar> zeros, Scalar constant = 1.0, BlaschkeOptions options = {});

    /// z^m.
    static BlaschkeProduct monomial(int m);

    std::span<const Scalar> zeros() const noexcept { return zeros_; }
    Scalar constant() const noexcept { return constant_; }
    int degree() const noexcept { return static_cast<int>(zeros_.size()); }
    double max_modulus() const noexcept;
    /// True when every zero is exactly 0, i.e. the product is c z^d.
    bool is_monomial() const noexcept;
    const BlaschkeOptions& options() const noexcept { return options_; }

    /// Rational evaluation (exact up to rounding).
    Scalar evaluate(Scalar z) const noexcept;

    /// Power series truncated at the smallest degree whose discarded mass is
    /// below the tail cap; exact for monomials.
    const LaurentPolynomial& series() const noexcept { return *series_; }

    /// Polynomial degree of series(): d for c z^d, otherwise the truncation
    /// length. All guard bands are sized with this number.
    int effective_degree() const noexcept { return series_->hi(); }

    friend bool operator==(const BlaschkeProduct& a, const BlaschkeProduct& b) {
        return a.zeros_ == b.zeros_ && a.constant_ == b.constant_;
    }

private:
    std::vector<Scalar> zeros_;
    Scalar constant_;
    BlaschkeOptions options_;
    std::shared_ptr<const LaurentPolynomial> series_;
};

/// Geometric tail estimate d * rho^(N-d+1) / (1 - rho) for a truncation at N.
double expansion_tail_bound(const BlaschkeProduct& b, int n);

/// Power-series coefficients c_0..c_N. Throws TruncationError (carrying the
/// smallest admissible N) when the tail estimate exceeds `cap`.
LaurentPolynomial expand(const BlaschkeProduct& b, int n, double cap = kDefaultTailCap);

/// Takenaka-Malmquist orthonormal basis of the model space, expanded to
/// degree N (defaults to b.effective_degree()).
OrthonormalBasis tm_basis(const BlaschkeProduct& b, std::optional<int> n = std::nullopt);

struct InnerCheck {
    bool pass = false;
    double max_deviation = 0.0;
    /// Set when the checked object is a truncation whose tail exceeds tol.
    bool tail_warning = false;
};

/// max | |B(zeta)| - 1 | over `samples` uniform circle points, rational form.
InnerCheck verify_inner(const BlaschkeProduct& b, int samples, double tol);

/// Same check on a truncated expansion; flags tail_warning when the
/// expansion's tail bound alone exceeds tol.
InnerCheck verify_unimodular(const LaurentPolynomial& expansion, int samples, double tol);

}  // namespace msolab
