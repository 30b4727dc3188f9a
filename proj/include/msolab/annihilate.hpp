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

#include <vector>

#include <Eigen/Dense>

#include "msolab/basis.hpp"
#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"
#include "msolab/operators.hpp"
#include "msolab/spaces.hpp"

namespace msolab {

/// f (x) g acting as x -> <x, g> f; pairs with T as <T f, g>.
struct Dyad {
    LaurentPolynomial f;
    LaurentPolynomial g;
};

/// t = sum_i f_i (x) g_i.
struct FiniteRankOperator {
    std::vector<Dyad> dyads;

    std::size_t rank_bound() const noexcept { return dyads.size(); }
};

/// Largest span defect tolerated for dyad components before pairing.
inline constexpr double kSpanTolerance = 1e-11;

/// <T, t> = sum_i <T f_i, g_i> for T given by a matrix between two bases.
/// Throws InputError when a component is not in the corresponding span.
Scalar pair(const Eigen::MatrixXcd& op, const OrthonormalBasis& domain, const OrthonormalBasis& codomain,
            const FiniteRankOperator& t);
Scalar pair(const DenseComplexMatrix& op, const FiniteRankOperator& t);
Scalar pair(const BlockOperator& op, const FiniteRankOperator& t);

/// Names one of the spaces K_theta or K_theta^perp.
struct SpaceRef {
    BlaschkeProduct inner;
    Subspace subspace = Subspace::ModelPerp;
};

/// zf (x) zg - f (x) g. Requires f, zf in the domain space and g, zg in the
/// codomain space.
FiniteRankOperator gen_shift_pair(const LaurentPolynomial& f, const LaurentPolynomial& g, const SpaceRef& domain,
                                  const SpaceRef& codomain);

/// The two-dyad generators of the annihilator families, index 1..6:
///   1: theta h (x) alpha g - z theta h (x) z alpha g
///   2: alpha theta h (x) alpha theta g - zb gb (x) zb hb
///   3: z theta h (x) zb gb - theta h (x) zb^2 gb
///   4: zb hb (x) z alpha g - zb^2 hb (x) alpha g
///   5: theta (x) zb gb - theta alpha z g (x) alpha
///   6: theta (x) alpha theta z g - zb gb (x) alpha
/// where zb = conj(z), hb = conj(h), gb = conj(g). h and g must be analytic.
FiniteRankOperator gen_M(int index, const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                         const LaurentPolynomial& h, const LaurentPolynomial& g);

/// Coefficients at or below this modulus count as zero in the probes.
inline constexpr double kProbeThreshold = 1e-12;

struct TransitivityProbe {
    LaurentPolynomial product;
    /// True when f conj(g) has a coefficient above kProbeThreshold.
    bool nonzero = false;
};

/// f conj(g); throws InputError on a zero argument.
TransitivityProbe transitivity_probe(const LaurentPolynomial& f, const LaurentPolynomial& g);

struct DualTransitivityProbe {
    LaurentPolynomial plus;   // f+ conj(g+)
    LaurentPolynomial minus;  // f- conj(g-)
    LaurentPolynomial cross;  // theta f+ z g-
    bool nonzero = false;
};

/// Splits f = zb conj(f-) + theta f+ in K_theta^perp and g = zb conj(g-) + alpha g+
/// in K_alpha^perp and forms the three products of the rank-one argument.
DualTransitivityProbe dual_transitivity_probe(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                              const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Rank-one t with <D_psi, t> = integral of psi * density for DTTOs
/// K_theta^perp -> K_alpha^perp: with n = max(0, -lo(density)),
/// t = theta alpha density z^n (x) alpha theta z^n.
FiniteRankOperator represent_functional(const LaurentPolynomial& density, const BlaschkeProduct& theta,
                                        const BlaschkeProduct& alpha);

/// Sum of singular values of sum_i f_i (x) g_i.
double trace_norm(const FiniteRankOperator& t);

}  // namespace msolab
