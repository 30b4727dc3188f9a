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

#include <optional>

#include "msolab/basis.hpp"
#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"

namespace msolab {

/// The pieces of L2 = K_theta (+) theta H2 (+) H2_-.
enum class Subspace { Model, ThetaH2, ModelPerp, HMinus };

/**
 * Orthogonal projection of f onto a subspace determined by theta:
 *   P_{theta H2} f = theta P+(conj(theta) f),  P_theta = P+ - P_{theta H2},
 *   P_theta^perp = I - P_theta,                 P- = projection onto H2_-.
 *
 * With `ambient_degree` set, theta is expanded to exactly that degree and a
 * TruncationError is thrown when the expansion tail exceeds theta's cap.
 * Otherwise theta's cached series is used.
 */
LaurentPolynomial project(const BlaschkeProduct& theta, Subspace subspace, const LaurentPolynomial& f,
                          std::optional<int> ambient_degree = std::nullopt);

/// C_theta f = theta * conj(z) * conj(f); antilinear isometric involution.
LaurentPolynomial conjugation_C(const BlaschkeProduct& theta, const LaurentPolynomial& f,
                                std::optional<int> ambient_degree = std::nullopt);

/// {theta z^k : 0 <= k <= M}.
OrthonormalBasis basis_thetaH2(const BlaschkeProduct& theta, int depth);
/// {conj(z)^k : 1 <= k <= M + 1}.
OrthonormalBasis basis_Hminus(int depth);
/// basis_thetaH2 followed by basis_Hminus; this order fixes every block matrix.
OrthonormalBasis basis_Kperp(const BlaschkeProduct& theta, int depth);

/// Singular values below this are treated as zero in kernel computations.
inline constexpr double kKernelThreshold = 1e-10;

/**
 * Orthonormal basis of {f in span V : z f in span V}, computed as the kernel
 * of (I - P_V) M_z restricted to span V. For truncated bases this also drops
 * the top Fourier layer, so z f never leaves the truncation.
 *
 * The returned vectors are canonical: the kernel projector is applied to the
 * parent vectors in order and the nonzero images are Gram-Schmidt'ed.
 */
OrthonormalBasis admissible_for_shift(const OrthonormalBasis& v);

}  // namespace msolab
