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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"

namespace msolab {

enum class BasisKind {
    Model,      // K(theta)
    ThetaH2,    // theta z^k, 0 <= k <= M
    HMinus,     // conj(z)^k, 1 <= k <= M + 1
    ModelPerp,  // ThetaH2 followed by HMinus
    Admissible  // shift-admissible subspace of one of the above
};

/// Ordered orthonormal family of functions with a label describing the space.
struct OrthonormalBasis {
    BasisKind kind = BasisKind::Model;
    int depth = -1;
    std::optional<BlaschkeProduct> inner;
    std::vector<LaurentPolynomial> vectors;
    /// Label of the ambient basis for Admissible subspaces.
    std::string parent_label;

    /// "K(theta)", "thetaH2@M", "Hminus@M", "Kperp(theta)@M".
    std::string label() const;
    std::size_t size() const noexcept { return vectors.size(); }

    /// [<f, v_k>]_k.
    Eigen::VectorXcd coordinates(const LaurentPolynomial& f) const;
    /// sum_k c_k v_k.
    LaurentPolynomial synthesize(const Eigen::VectorXcd& c) const;
    Eigen::MatrixXcd gram() const;
    /// ||f - synthesize(coordinates(f))||.
    double span_defect(const LaurentPolynomial& f) const;
};

/// Modified Gram-Schmidt over the vectors, in order.
void reorthonormalize(std::vector<LaurentPolynomial>& vectors);

}  // namespace msolab
