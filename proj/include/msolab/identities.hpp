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

#include <string>
#include <vector>

#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"
#include "msolab/operators.hpp"

namespace msolab {

/// A named identity and its largest absolute deviation.
struct IdentityDefect {
    std::string name;
    double defect = 0.0;
};

/**
 * Function-level evaluations of the block-compression identities, compared
 * entrywise with the blocks of `d` on its interior window. `phi` must be the
 * symbol d was built from.
 *
 *   "toeplitz-factor":  That = M_alpha T(conj(alpha) phi theta) M_conj(theta)
 *   "hankel-factor":    GammaHat = H(phi theta) M_conj(theta)
 *   "J-conjugate":      TCheck = J T(conj(phi)) J
 *   "hankel-adjoint":   GammaCheck = M_alpha H*(alpha conj(phi))
 */
std::vector<IdentityDefect> compression_identities(const BlockOperator& d, const LaurentPolynomial& phi);

/**
 *   "C-hat-from-check": That = C_alpha TCheck(alpha conj(phi) conj(theta)) C_theta
 *   "check-from-hat":   TCheck = (P- C_alpha M_conj(theta)) T^(alpha,theta)(conj(phi)) (M_theta C_alpha)
 *   "C-gamma":          GammaHat(theta) = C_theta GammaCheck(theta, conj(phi)) C_theta
 */
std::vector<IdentityDefect> conjugation_block_identities(const BlockOperator& d, const LaurentPolynomial& phi);

/// Products of theta H2 (resp. H2_-) compressions on an n x n window:
/// T(conj(p1)) T(p2) = T(conj(p1) p2) and Tcheck(p1) Tcheck(conj(p2)) = Tcheck(p1 conj(p2)).
/// One of p1, p2 is expected to be analytic.
std::vector<IdentityDefect> semicommutation_identities(const BlaschkeProduct& theta, const LaurentPolynomial& p1,
                                                       const LaurentPolynomial& p2, int n);

/// GammaHat(theta, conj(theta) z^k) and GammaCheck(alpha, alpha conj(z)^k) on an n x n window.
std::vector<IdentityDefect> hankel_kill_identities(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, int k,
                                                   int n);

/// C_theta properties for functions f, g and symbol phi:
/// "involution", "antiunitary", "intertwining" (C M_phi C = M_conj(phi)),
/// "swap-thetaH2" (C P_thetaH2 = P- C), "swap-Hminus" (C P- = P_thetaH2 C),
/// "model-invariant" (C P_theta = P_theta C).
std::vector<IdentityDefect> conjugation_identities(const BlaschkeProduct& theta, const LaurentPolynomial& f,
                                                   const LaurentPolynomial& g, const LaurentPolynomial& phi);

double max_defect(const std::vector<IdentityDefect>& v);

}  // namespace msolab
