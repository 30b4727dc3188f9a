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

#include <doctest.h>

#include <cmath>

#include "msolab/basis.hpp"
#include "msolab/error.hpp"
#include "msolab/random.hpp"
#include "msolab/spaces.hpp"
#include "oracle.hpp"

using msolab::BlaschkeProduct;
using msolab::LaurentPolynomial;
using msolab::Scalar;
using msolab::Subspace;

namespace {

LaurentPolynomial lp(std::initializer_list<std::pair<int, Scalar>> terms) {
    return oracle::to_library(oracle::from_terms(terms));
}

}  // namespace

TEST_CASE("project: Fourier split for z^2") {
    const BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
    const LaurentPolynomial f = lp({{0, 1}, {1, 1}, {2, 1}});
    CHECK(msolab::project(z2, Subspace::Model, f) == lp({{0, 1}, {1, 1}}));
    CHECK(msolab::project(z2, Subspace::ThetaH2, f) == lp({{2, 1}}));
    CHECK(msolab::project(z2, Subspace::HMinus, lp({{-2, 3}, {1, 1}})) == lp({{-2, 3}}));
    CHECK(msolab::project(z2, Subspace::ModelPerp, lp({{-1, 1}, {0, 1}, {3, 1}})) == lp({{-1, 1}, {3, 1}}));
}

TEST_CASE("project: constant onto K for a single zero 1/2") {
    const BlaschkeProduct b({0.5});
    const LaurentPolynomial p = msolab::project(b, Subspace::Model, LaurentPolynomial::constant(1.0));
    // <1, e1> e1 with e1 = sqrt(3)/2 sum (1/2)^k z^k
    for (int k = 0; k < 30; ++k) CHECK(std::abs(p.coeff(k) - 0.75 * std::pow(0.5, k)) < 1e-13);
    const LaurentPolynomial pp = msolab::project(b, Subspace::Model, p);
    CHECK((pp - p).max_abs_coeff() < 1e-13);
}

TEST_CASE("project: the four pieces sum to the identity") {
    msolab::Rng rng(3);
    for (int k = 0; k < 10; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 5);
        const LaurentPolynomial sum = msolab::project(b, Subspace::Model, f) +
                                      msolab::project(b, Subspace::ThetaH2, f) +
                                      msolab::project(b, Subspace::HMinus, f);
        CHECK((sum - f).max_abs_coeff() < 1e-13);
        const LaurentPolynomial perp = msolab::project(b, Subspace::ModelPerp, f);
        CHECK((perp + msolab::project(b, Subspace::Model, f) - f).max_abs_coeff() < 1e-13);
    }
}

TEST_CASE("conjugation: explicit values for z^2") {
    const BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
    CHECK(msolab::conjugation_C(z2, LaurentPolynomial::constant(1.0)) == lp({{1, 1}}));
    CHECK(msolab::conjugation_C(z2, lp({{1, 1}})) == LaurentPolynomial::constant(1.0));
    CHECK(msolab::conjugation_C(z2, lp({{3, 1}})) == lp({{-2, 1}}));
    // antilinear
    CHECK(msolab::conjugation_C(z2, lp({{0, Scalar(0, 1)}})) == lp({{1, Scalar(0, -1)}}));
}

TEST_CASE("conjugation: involution against the oracle formula") {
    msolab::Rng rng(9);
    for (int k = 0; k < 10; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 4);
        const LaurentPolynomial cf = msolab::conjugation_C(b, f);
        const auto theta = oracle::blaschke_coefficients(b, b.effective_degree());
        const auto expect = oracle::mul(oracle::shift(theta, -1), oracle::conj(oracle::from_library(f)));
        CHECK(oracle::max_gap(expect, cf) < 1e-13);
        CHECK((msolab::conjugation_C(b, cf) - f).max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("basis_Kperp: ordering and Gram") {
    const auto v = msolab::basis_Kperp(BlaschkeProduct::monomial(2), 1);
    REQUIRE(v.size() == 4);
    CHECK(v.vectors[0] == lp({{2, 1}}));
    CHECK(v.vectors[1] == lp({{3, 1}}));
    CHECK(v.vectors[2] == lp({{-1, 1}}));
    CHECK(v.vectors[3] == lp({{-2, 1}}));
    CHECK(v.label() == "Kperp(theta)@1");

    const auto w = msolab::basis_Kperp(BlaschkeProduct({0.5, 0.0}), 8);
    CHECK(w.size() == 18);
    CHECK((w.gram() - Eigen::MatrixXcd::Identity(18, 18)).norm() < 1e-11);
}

TEST_CASE("admissible_for_shift: examples") {
    const auto a = msolab::admissible_for_shift(msolab::basis_Kperp(BlaschkeProduct::monomial(2), 1));
    REQUIRE(a.size() == 2);
    CHECK(a.span_defect(lp({{2, 1}})) < 1e-12);
    CHECK(a.span_defect(lp({{-2, 1}})) < 1e-12);
    CHECK(a.span_defect(lp({{-1, 1}})) > 0.5);

    const auto b = msolab::admissible_for_shift(msolab::tm_basis(BlaschkeProduct::monomial(3)));
    REQUIRE(b.size() == 2);
    CHECK(b.span_defect(lp({{0, 1}})) < 1e-12);
    CHECK(b.span_defect(lp({{1, 1}})) < 1e-12);

    const BlaschkeProduct t({0.5, 0.0});
    const auto c = msolab::admissible_for_shift(msolab::tm_basis(t));
    REQUIRE(c.size() == 1);
    // S* theta = (theta - theta(0)) / z
    const LaurentPolynomial backward = msolab::positive_part(t.series().shifted(-1));
    CHECK(std::abs(msolab::inner_product(c.vectors[0], backward)) < 1e-12);
    const LaurentPolynomial zf = c.vectors[0].shifted(1);
    CHECK((msolab::project(t, Subspace::Model, zf) - zf).max_abs_coeff() < 1e-12);
}
