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

#include "msolab/annihilate.hpp"
#include "msolab/error.hpp"
#include "msolab/random.hpp"
#include "msolab/spaces.hpp"
#include "oracle.hpp"

using msolab::BlaschkeProduct;
using msolab::BlockOperator;
using msolab::FiniteRankOperator;
using msolab::LaurentPolynomial;
using msolab::Scalar;
using msolab::SpaceRef;
using msolab::Subspace;
using msolab::SymbolFunction;

namespace {

LaurentPolynomial lp(std::initializer_list<std::pair<int, Scalar>> terms) {
    return oracle::to_library(oracle::from_terms(terms));
}

LaurentPolynomial mono(int k) { return LaurentPolynomial::monomial(k); }

BlockOperator dtto_z2(const LaurentPolynomial& phi, int depth = 12) {
    const BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
    return msolab::build_dtto(z2, z2, SymbolFunction(phi), depth);
}

const BlaschkeProduct z2 = BlaschkeProduct::monomial(2);

}  // namespace

TEST_CASE("pair: identity gives <f, g>") {
    msolab::Rng rng(6);
    const BlockOperator id = dtto_z2(LaurentPolynomial::constant(1.0), 8);
    for (int k = 0; k < 5; ++k) {
        // components inside Kperp(z^2)@8
        const LaurentPolynomial f = lp({{2, rng.complex_unit_square()}, {5, rng.complex_unit_square()},
                                        {-3, rng.complex_unit_square()}});
        const LaurentPolynomial g = lp({{2, rng.complex_unit_square()}, {-1, rng.complex_unit_square()},
                                        {-3, rng.complex_unit_square()}});
        const FiniteRankOperator t{{{f, g}}};
        CHECK(std::abs(msolab::pair(id, t) - msolab::inner_product(f, g)) < 1e-14);
    }
}

TEST_CASE("pair: D_z against z^2 (x) z^3") {
    CHECK(msolab::pair(dtto_z2(mono(1)), FiniteRankOperator{{{mono(2), mono(3)}}}) == Scalar(1.0));
}

TEST_CASE("pair: component outside the span is rejected") {
    CHECK_THROWS_AS(msolab::pair(dtto_z2(mono(1)), FiniteRankOperator{{{mono(1), mono(3)}}}), msolab::InputError);
}

TEST_CASE("gen_shift_pair: annihilates DTTOs") {
    const SpaceRef k{z2, Subspace::ModelPerp};
    const LaurentPolynomial phi = lp({{-2, 1}, {0, 3}, {1, Scalar(0, 2)}});
    const BlockOperator d = dtto_z2(phi);
    const auto t = msolab::gen_shift_pair(mono(2), mono(2), k, k);
    REQUIRE(t.rank_bound() == 2);
    CHECK(std::abs(msolab::pair(d, t)) < 1e-14);
    CHECK(std::abs(msolab::pair(d, msolab::gen_shift_pair(mono(-2), mono(-2), k, k))) < 1e-14);
    CHECK(std::abs(msolab::pair(d, msolab::gen_shift_pair(mono(3), mono(-3), k, k))) < 1e-14);
}

TEST_CASE("gen_shift_pair: zb is not admissible") {
    const SpaceRef k{z2, Subspace::ModelPerp};
    CHECK_THROWS_AS(msolab::gen_shift_pair(mono(-1), mono(2), k, k), msolab::InputError);
}

TEST_CASE("gen_shift_pair: model spaces") {
    const SpaceRef k{BlaschkeProduct::monomial(3), Subspace::Model};
    const auto t = msolab::gen_shift_pair(mono(0), mono(1), k, k);
    const auto a = msolab::build_tto(BlaschkeProduct::monomial(3), BlaschkeProduct::monomial(3),
                                     SymbolFunction(lp({{-1, 2}, {1, 5}})));
    CHECK(std::abs(msolab::pair(a, t)) < 1e-14);
}

TEST_CASE("gen_M: hand computations") {
    const LaurentPolynomial phi = lp({{-3, 1}, {-1, 2}, {0, 7}, {2, 1}});
    const BlockOperator d = dtto_z2(phi);
    const auto m1 = msolab::gen_M(1, z2, z2, mono(0), mono(0));
    REQUIRE(m1.dyads.size() == 2);
    CHECK(m1.dyads[0].f == mono(2));
    CHECK(m1.dyads[1].f == -mono(3));
    CHECK(std::abs(msolab::pair(d, m1)) < 1e-14);

    const auto m2 = msolab::gen_M(2, z2, z2, mono(0), mono(0));
    CHECK(m2.dyads[0].f == mono(4));
    CHECK(m2.dyads[0].g == mono(4));
    CHECK(std::abs(msolab::pair(d, m2)) < 1e-14);

    // <D z^2, zb> - <D z^5, z^2> = 1 - 1 for phi = zb^3
    const BlockOperator d3 = dtto_z2(mono(-3));
    const auto m5 = msolab::gen_M(5, z2, z2, mono(0), mono(0));
    CHECK(msolab::pair(d3, FiniteRankOperator{{m5.dyads[0]}}) == Scalar(1.0));
    CHECK(std::abs(msolab::pair(d3, m5)) < 1e-14);
}

TEST_CASE("gen_M: each family annihilates DTTOs for random inner functions") {
    msolab::Rng rng(14);
    for (int c = 0; c < 3; ++c) {
        const BlaschkeProduct t = msolab::random_blaschke(rng, 3, 0.7);
        const BlaschkeProduct a = msolab::random_blaschke(rng, 3, 0.7);
        const LaurentPolynomial phi = msolab::random_trig_polynomial(rng, 4);
        const BlockOperator d = msolab::build_dtto(t, a, SymbolFunction(phi), msolab::minimum_depth(t, a, 4) + 4);
        for (int l = 1; l <= 6; ++l) {
            const auto m = msolab::gen_M(l, t, a, lp({{0, 1}, {1, 0.5}}), lp({{0, 2}, {2, Scalar(0, 1)}}));
            CHECK(std::abs(msolab::pair(d, m)) < 1e-11);
        }
    }
}

TEST_CASE("gen_M: input validation") {
    CHECK_THROWS_AS(msolab::gen_M(7, z2, z2, mono(0), mono(0)), msolab::InputError);
    CHECK_THROWS_AS(msolab::gen_M(1, z2, z2, mono(-1), mono(0)), msolab::InputError);
}

TEST_CASE("transitivity probe") {
    const auto p = msolab::transitivity_probe(lp({{0, 1}, {1, 1}}), lp({{0, 1}, {1, -1}}));
    CHECK(p.nonzero);
    CHECK(p.product == lp({{1, 1}, {-1, -1}}));
    const auto q = msolab::transitivity_probe(mono(0), mono(1));
    CHECK(q.nonzero);
    CHECK(q.product == mono(-1));
    CHECK_THROWS_AS(msolab::transitivity_probe(LaurentPolynomial(), mono(1)), msolab::InputError);
}

TEST_CASE("dual transitivity probe finds a nonzero product") {
    const auto p = msolab::dual_transitivity_probe(z2, z2, lp({{2, 1}, {-1, 1}}), lp({{3, 1}}));
    CHECK(p.nonzero);
}

TEST_CASE("represent_functional") {
    const auto t = msolab::represent_functional(mono(-1), z2, z2);
    REQUIRE(t.dyads.size() == 1);
    CHECK(t.dyads[0].f == mono(4));
    CHECK(t.dyads[0].g == mono(5));
    for (int k = -3; k <= 3; ++k) {
        const Scalar expect = k == 1 ? 1.0 : 0.0;
        CHECK(std::abs(msolab::pair(dtto_z2(mono(k)), t) - expect) < 1e-14);
    }
    const auto one = msolab::represent_functional(mono(0), z2, z2);
    CHECK(one.dyads[0].f == mono(4));
    CHECK(one.dyads[0].g == mono(4));
    CHECK(msolab::represent_functional(LaurentPolynomial(), z2, z2).dyads.empty());
}

TEST_CASE("trace norm") {
    msolab::Rng rng(31);
    const LaurentPolynomial f = msolab::random_trig_polynomial(rng, 4);
    const LaurentPolynomial g = msolab::random_trig_polynomial(rng, 4);
    CHECK(msolab::trace_norm(FiniteRankOperator{{{f, g}}}) == doctest::Approx(f.norm() * g.norm()));
    CHECK(msolab::trace_norm(FiniteRankOperator{{{f, g}, {f, g}}}) == doctest::Approx(2 * f.norm() * g.norm()));
    CHECK(msolab::trace_norm(FiniteRankOperator{{{mono(2), mono(2)}, {-mono(3), mono(3)}}}) == doctest::Approx(2.0));
}
