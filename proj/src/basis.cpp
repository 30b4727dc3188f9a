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

#include "msolab/basis.hpp"

#include <cmath>

namespace msolab {

std::string OrthonormalBasis::label() const {
    const std::string m = std::to_string(depth);
    switch (kind) {
        case BasisKind::Model: return "K(theta)";
        case BasisKind::ThetaH2: return "thetaH2@" + m;
        case BasisKind::HMinus: return "Hminus@" + m;
        case BasisKind::ModelPerp: return "Kperp(theta)@" + m;
        case BasisKind::Admissible: return "admissible(" + parent_label + ")";
    }
    return {};
}

Eigen::VectorXcd OrthonormalBasis::coordinates(const LaurentPolynomial& f) const {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) c(static_cast<Eigen::Index>(k)) = inner_product(f, vectors[k]);
    return c;
}

LaurentPolynomial OrthonormalBasis::synthesize(const Eigen::VectorXcd& c) const {
    // Accumulate on one dense band instead of repeated polynomial additions.
    int lo = 0;
    int hi = -1;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (c(static_cast<Eigen::Index>(k)) == Scalar(0.0) || vectors[k].is_zero()) continue;
        if (hi < lo) {
            lo = vectors[k].lo();
            hi = vectors[k].hi();
        } else {
            lo = std::min(lo, vectors[k].lo());
            hi = std::max(hi, vectors[k].hi());
        }
    }
    if (hi < lo) return {};
    std::vector<Scalar> acc(static_cast<std::size_t>(hi - lo + 1));
    double tail = 0.0;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const Scalar ck = c(static_cast<Eigen::Index>(k));
        if (ck == Scalar(0.0) || vectors[k].is_zero()) continue;
        const auto v = vectors[k].coeffs();
        Scalar* out = acc.data() + (vectors[k].lo() - lo);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] += ck * v[i];
        tail += std::abs(ck) * vectors[k].tail_bound();
    }
    return LaurentPolynomial(lo, std::move(acc), tail);
}

Eigen::MatrixXcd OrthonormalBasis::gram() const {
    const auto n = static_cast<Eigen::Index>(vectors.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = inner_product(vectors[static_cast<std::size_t>(j)], vectors[static_cast<std::size_t>(i)]);
    return g;
}

double OrthonormalBasis::span_defect(const LaurentPolynomial& f) const {
    return (f - synthesize(coordinates(f))).norm();
}

void reorthonormalize(std::vector<LaurentPolynomial>& vectors) {
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) vectors[k] -= inner_product(vectors[k], vectors[j]) * vectors[j];
        const double n = vectors[k].norm();
        if (n > 0.0) vectors[k] *= Scalar(1.0 / n);
    }
}

}  // namespace msolab
