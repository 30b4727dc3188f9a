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

// Randomized properties over seeded families.

#include <doctest.h>

#include "msolab/annihilate.hpp"
#include "msolab/characterize.hpp"
#include "msolab/identities.hpp"
#include "msolab/random.hpp"
#include "msolab/spaces.hpp"
#include "oracle.hpp"

using msolab::BlaschkeProduct;
using msolab::BlockOperator;
using msolab::LaurentPolynomial;
using msolab::Scalar;
using msolab::SymbolFunction;

namespace {

struct Sample {
    BlaschkeProduct theta;
    BlaschkeProduct alpha;
    LaurentPolynomial phi;
    BlockOperator d;
};

Sample sample(msolab::Rng& rng, int guard = 6) {
    BlaschkeProduct t = msolab::random_blaschke(rng, 3, 0.8);
    BlaschkeProduct a = msolab::random_blaschke(rng, 3, 0.8);
    LaurentPolynomial phi = msolab::random_trig_polynomial(rng, 4);
    BlockOperator d = msolab::build_dtto(t, a, SymbolFunction(phi), msolab::minimum_depth(t, a, phi.degree()) + guard);
    return {std::move(t), std::move(a), std::move(phi), std::move(d)};
}

}  // namespace

TEST_CASE("property: multiplication is commutative, associative and matches the oracle") {
    msolab::Rng rng(101);
    for (int k = 0; k < 30; ++k) {
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 5);
        const LaurentPolynomial g = msolab::random_trig_polynomial(rng, 5);
        const LaurentPolynomial h = msolab::random_analytic_polynomial(rng, 3);
        CHECK(((f * g) - (g * f)).max_abs_coeff() < 1e-15);
        CHECK((((f * g) * h) - (f * (g * h))).max_abs_coeff() < 1e-13);
        CHECK(oracle::max_gap(oracle::mul(oracle::from_library(f), oracle::from_library(g)), f * g) < 1e-14);
    }
}

TEST_CASE("property: J and pointwise conjugation are involutions; J is an isometry") {
    msolab::Rng rng(102);
    for (int k = 0; k < 30; ++k) {
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 6);
        CHECK(msolab::involution_J(msolab::involution_J(f)) == f);
        CHECK(msolab::conj_function(msolab::conj_function(f)) == f);
        CHECK(msolab::involution_J(f).norm() == doctest::Approx(f.norm()));
        CHECK(msolab::positive_part(f) + msolab::negative_part(f) == f);
    }
}

TEST_CASE("property: projections are idempotent and mutually orthogonal") {
    msolab::Rng rng(103);
    using msolab::Subspace;
    for (int k = 0; k < 15; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 4);
        const LaurentPolynomial g = msolab::random_trig_polynomial(rng, 4);
        for (Subspace s : {Subspace::Model, Subspace::ThetaH2, Subspace::HMinus, Subspace::ModelPerp}) {
            const LaurentPolynomial p = msolab::project(b, s, f);
            CHECK((msolab::project(b, s, p) - p).max_abs_coeff() < 1e-12);
            // self-adjoint
            CHECK(std::abs(msolab::inner_product(p, g) - msolab::inner_product(f, msolab::project(b, s, g))) < 1e-12);
        }
        const LaurentPolynomial m = msolab::project(b, Subspace::Model, f);
        CHECK(std::abs(msolab::inner_product(m, msolab::project(b, Subspace::ThetaH2, g))) < 1e-12);
    }
}

TEST_CASE("property: conjugation identities") {
    msolab::Rng rng(104);
    for (int k = 0; k < 20; ++k) {
        const BlaschkeProduct b = msolab::random_blaschke(rng, 3, 0.8);
        const auto v = msolab::conjugation_identities(b, msolab::random_trig_polynomial(rng, 4),
                                                      msolab::random_trig_polynomial(rng, 4),
                                                      msolab::random_trig_polynomial(rng, 4));
        for (const auto& d : v) CHECK_MESSAGE(d.defect < 1e-11, d.name);
    }
}

TEST_CASE("property: built DTTOs satisfy every membership test and round-trip their symbol") {
    msolab::Rng rng(105);
    for (int k = 0; k < 15; ++k) {
        const Sample s = sample(rng);
        CHECK(msolab::check_adtto(s.d).pass);
        for (const auto& r : msolab::check_block_conditions(s.d)) CHECK(r.pass);
        if (k < 3)  // cubic in M
            CHECK(msolab::shift_invariance_defect(s.d.assemble(), s.d.domain_basis(), s.d.codomain_basis()).defect <
                  1e-10);
        for (auto m : {msolab::RecoveryMethod::Boundary, msolab::RecoveryMethod::Zbar}) {
            const auto r = msolab::recover_symbol(s.d, m);
            CHECK((r.symbol.value - s.phi).max_abs_coeff() < 1e-11);
            CHECK(r.residual < 1e-10);
        }
        const bool analytic = msolab::negative_part(s.phi).max_abs_coeff() == 0.0;
        CHECK(msolab::is_analytic_adtto(s.d).analytic == analytic);
    }
}

TEST_CASE("property: the DTTO map is linear in the symbol") {
    msolab::Rng rng(106);
    const BlaschkeProduct t = msolab::random_blaschke(rng, 3, 0.8);
    const BlaschkeProduct a = msolab::random_blaschke(rng, 3, 0.8);
    const int depth = msolab::minimum_depth(t, a, 4) + 2;
    const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 4);
    const LaurentPolynomial g = msolab::random_trig_polynomial(rng, 4);
    const Scalar c(0.3, -1.2);
    const Eigen::MatrixXcd lhs = msolab::build_dtto(t, a, SymbolFunction(f + c * g), depth).assemble();
    const Eigen::MatrixXcd rhs = msolab::build_dtto(t, a, SymbolFunction(f), depth).assemble() +
                                 c * msolab::build_dtto(t, a, SymbolFunction(g), depth).assemble();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("property: block compression identities") {
    msolab::Rng rng(107);
    for (int k = 0; k < 10; ++k) {
        const Sample s = sample(rng);
        for (const auto& d : msolab::compression_identities(s.d, s.phi)) CHECK_MESSAGE(d.defect < 1e-11, d.name);
        for (const auto& d : msolab::conjugation_block_identities(s.d, s.phi)) CHECK_MESSAGE(d.defect < 1e-11, d.name);
        const int n = s.d.interior_limit() + 1;
        const LaurentPolynomial p = msolab::random_analytic_polynomial(rng, 3);
        const LaurentPolynomial q = msolab::random_trig_polynomial(rng, 3);
        for (const auto& d : msolab::semicommutation_identities(s.theta, p, q, n)) CHECK_MESSAGE(d.defect < 1e-11, d.name);
        for (const auto& d : msolab::semicommutation_identities(s.theta, q, p, n)) CHECK_MESSAGE(d.defect < 1e-11, d.name);
        for (const auto& d : msolab::hankel_kill_identities(s.theta, s.alpha, k % 3, n))
            CHECK_MESSAGE(d.defect < 1e-11, d.name);
    }
}

TEST_CASE("property: semicommutation fails when neither symbol is analytic") {
    const BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
    const LaurentPolynomial zb = LaurentPolynomial::monomial(-1);
    const auto v = msolab::semicommutation_identities(z2, zb, zb, 4);
    // T(z) T(zb) differs from T(1) on theta H2 at the first entry.
    CHECK(msolab::max_defect(v) > 0.5);
}

TEST_CASE("property: annihilators vanish and perturbations are detected") {
    msolab::Rng rng(108);
    for (int k = 0; k < 5; ++k) {
        const Sample s = sample(rng);
        for (int l = 1; l <= 6; ++l)
            for (int p = 0; p <= 2; ++p) {
                const auto t = msolab::gen_M(l, s.theta, s.alpha, LaurentPolynomial::monomial(p),
                                             LaurentPolynomial::monomial(2 - p));
                CHECK(std::abs(msolab::pair(s.d, t)) < 1e-10);
            }
        BlockOperator bad = s.d;
        bad.TCheck(1, 2) += 1e-3;  // <D zb^3, zb^2>
        CHECK_FALSE(msolab::check_adtto(bad).pass);
        const auto m2 = msolab::gen_M(2, s.theta, s.alpha, LaurentPolynomial::monomial(1), LaurentPolynomial::monomial(2));
        CHECK(std::abs(msolab::pair(bad, m2)) > 1e-4);
    }
}

TEST_CASE("property: the transitivity probe never vanishes on model vectors") {
    msolab::Rng rng(109);
    for (int k = 0; k < 20; ++k) {
        const BlaschkeProduct t = msolab::random_blaschke(rng, 3, 0.8);
        const BlaschkeProduct a = msolab::random_blaschke(rng, 3, 0.8);
        CHECK(msolab::transitivity_probe(msolab::random_model_vector(rng, t), msolab::random_model_vector(rng, a)).nonzero);
    }
}

TEST_CASE("property: functional representation reproduces Fourier coefficients") {
    msolab::Rng rng(110);
    const BlaschkeProduct t = msolab::random_blaschke(rng, 2, 0.6);
    const BlaschkeProduct a = msolab::random_blaschke(rng, 2, 0.6);
    const int depth = msolab::minimum_depth(t, a, 3) + 6;
    for (int k = 0; k < 5; ++k) {
        const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 3);
        const LaurentPolynomial psi = msolab::random_trig_polynomial(rng, 3);
        const auto tt = msolab::represent_functional(f, t, a);
        const Scalar expect = oracle::inner(oracle::mul(oracle::from_library(psi), oracle::from_library(f)),
                                            oracle::from_terms({{0, 1.0}}));
        CHECK(std::abs(msolab::pair(msolab::build_dtto(t, a, SymbolFunction(psi), depth), tt) - expect) < 1e-10);
        CHECK(tt.rank_bound() == 1);
    }
}
