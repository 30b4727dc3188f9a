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
#include "msolab/inner.hpp"
#include "msolab/random.hpp"
#include "oracle.hpp"

using msolab::BlaschkeProduct;
using msolab::Scalar;

TEST_CASE("expand: monomial product") {
    const BlaschkeProduct b({0.0, 0.0});
    for (int n : {2, 5, 40}) {
        const auto s = msolab::expand(b, n);
        CHECK(s == msolab::LaurentPolynomial::monomial(2));
    }
    CHECK(b.is_monomial());
    CHECK(b.effective_degree() == 2);
}

TEST_CASE("expand: single zero 1/2 matches the closed form and the DFT oracle") {
    const BlaschkeProduct b({0.5});
    const auto s = msolab::expand(b, 3, 1.0);
    // -a + (1 - a^2) sum_{k>=1} a^(k-1) z^k
    CHECK(std::abs(s.coeff(0) - Scalar(-0.5)) < 1e-15);
    CHECK(std::abs(s.coeff(1) - Scalar(0.75)) < 1e-15);
    CHECK(std::abs(s.coeff(2) - Scalar(0.375)) < 1e-15);
    CHECK(std::abs(s.coeff(3) - Scalar(0.1875)) < 1e-15);
    CHECK(s.hi() == 3);
    CHECK(oracle::max_gap(oracle::blaschke_coefficients(b, b.effective_degree()), b.series()) < 1e-14);
}

TEST_CASE("expand: random products match the DFT oracle") {
    msolab::Rng rng(11);
    for (int k = 0; k < 10; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        CHECK(oracle::max_gap(oracle::blaschke_coefficients(b, b.effective_degree()), b.series()) < 1e-13);
        CHECK(b.series().tail_bound() <= msolab::kDefaultTailCap);
    }
}

TEST_CASE("expand: truncation below the tail cap throws with the required degree") {
    const BlaschkeProduct b({0.9});
    try {
        (void)msolab::expand(b, 10);
        FAIL("expected TruncationError");
    } catch (const msolab::TruncationError& e) {
        CHECK(e.required_degree() > 10);
        CHECK_NOTHROW((void)msolab::expand(b, e.required_degree()));
    }
}

TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_WITH_AS(BlaschkeProduct({}), doctest::Contains("constant inner function"), msolab::InputError);
    CHECK_THROWS_WITH_AS(BlaschkeProduct({1.0}), "zero outside open disk", msolab::InputError);
    CHECK_THROWS_WITH_AS(BlaschkeProduct({Scalar(0.0, 1.5)}), "zero outside open disk", msolab::InputError);
    CHECK_THROWS_AS(BlaschkeProduct({0.5}, 2.0), msolab::InputError);
    CHECK_THROWS_AS(BlaschkeProduct({0.97}), msolab::InputError);
    msolab::BlaschkeOptions opt;
    opt.allow_high_modulus = true;
    CHECK_NOTHROW(BlaschkeProduct({0.97}, 1.0, opt));
}

TEST_CASE("evaluation matches the product formula") {
    const std::vector<Scalar> zeros{0.5, Scalar(0.3, 0.4)};
    const Scalar c = std::polar(1.0, 0.3);
    const BlaschkeProduct b(zeros, c);
    for (double t : {0.1, 1.0, 2.5}) {
        const Scalar z = std::polar(0.7, t);
        CHECK(std::abs(b.evaluate(z) - oracle::blaschke_value(zeros, c, z)) < 1e-15);
    }
}

TEST_CASE("tm_basis: monomial and single-zero examples") {
    const auto k2 = msolab::tm_basis(BlaschkeProduct({0.0, 0.0}));
    REQUIRE(k2.size() == 2);
    CHECK(k2.vectors[0] == msolab::LaurentPolynomial::constant(1.0));
    CHECK(k2.vectors[1] == msolab::LaurentPolynomial::monomial(1));

    const auto k = msolab::tm_basis(BlaschkeProduct({0.5}));
    REQUIRE(k.size() == 1);
    const double s = std::sqrt(3.0) / 2.0;
    for (int j = 0; j < 20; ++j) CHECK(std::abs(k.vectors[0].coeff(j) - s * std::pow(0.5, j)) < 1e-14);

    const auto k0 = msolab::tm_basis(BlaschkeProduct({0.0, 0.5}));
    REQUIRE(k0.size() == 2);
    CHECK(std::abs(k0.vectors[0].coeff(0) - 1.0) < 1e-15);
    for (int j = 1; j < 20; ++j) CHECK(std::abs(k0.vectors[1].coeff(j) - s * std::pow(0.5, j - 1)) < 1e-14);
    CHECK((k0.gram() - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-11);
}

TEST_CASE("tm_basis: Gram identity and orthogonality to theta H2 for random products") {
    msolab::Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        const auto basis = msolab::tm_basis(b);
        CHECK(static_cast<int>(basis.size()) == b.degree());
        CHECK((basis.gram() - Eigen::MatrixXcd::Identity(b.degree(), b.degree())).norm() < 1e-11);
        for (const auto& v : basis.vectors)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(msolab::inner_product(v, b.series().shifted(j))) < 1e-12);
    }
}

TEST_CASE("verify_inner and verify_unimodular") {
    const auto a = msolab::verify_inner(BlaschkeProduct({0.0, 0.0}), 256, 1e-14);
    CHECK(a.pass);
    CHECK(a.max_deviation == doctest::Approx(0.0).epsilon(1e-15));
    const auto b = msolab::verify_inner(BlaschkeProduct({0.5, Scalar(0.3, 0.4)}), 512, 1e-14);
    CHECK(b.pass);
    CHECK(b.max_deviation <= 1e-14);

    msolab::BlaschkeOptions opt;
    opt.allow_high_modulus = true;
    const BlaschkeProduct high({0.99}, 1.0, opt);
    const auto trunc = msolab::expand(high, 16, INFINITY);
    const auto u = msolab::verify_unimodular(trunc, 512, 1e-10);
    CHECK_FALSE(u.pass);
    CHECK(u.tail_warning);
}
