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

#include "msolab/spaces.hpp"

#include <Eigen/SVD>

#include "msolab/error.hpp"

namespace msolab {
namespace {

LaurentPolynomial theta_series(const BlaschkeProduct& theta, std::optional<int> ambient_degree) {
    if (!ambient_degree) return theta.series();
    return expand(theta, *ambient_degree, theta.options().tail_cap);
}

LaurentPolynomial project_thetaH2(const LaurentPolynomial& th, const LaurentPolynomial& f) {
    return multiply(th, positive_part(multiply(conj_function(th), f)));
}

}  // namespace

LaurentPolynomial project(const BlaschkeProduct& theta, Subspace subspace, const LaurentPolynomial& f,
                          std::optional<int> ambient_degree) {
    const LaurentPolynomial th = theta_series(theta, ambient_degree);
    switch (subspace) {
        case Subspace::ThetaH2: return project_thetaH2(th, f);
        case Subspace::Model: return positive_part(f) - project_thetaH2(th, f);
        case Subspace::ModelPerp: return negative_part(f) + project_thetaH2(th, f);
        case Subspace::HMinus: return negative_part(f);
    }
    return {};
}

LaurentPolynomial conjugation_C(const BlaschkeProduct& theta, const LaurentPolynomial& f,
                                std::optional<int> ambient_degree) {
    return multiply(theta_series(theta, ambient_degree), conj_function(f).shifted(-1));
}

OrthonormalBasis basis_thetaH2(const BlaschkeProduct& theta, int depth) {
    if (depth < 0) throw InputError("truncation depth must be nonnegative");
    OrthonormalBasis b;
    b.kind = BasisKind::ThetaH2;
    b.depth = depth;
    b.inner = theta;
    b.vectors.reserve(static_cast<std::size_t>(depth + 1));
    for (int k = 0; k <= depth; ++k) b.vectors.push_back(theta.series().shifted(k));
    return b;
}

OrthonormalBasis basis_Hminus(int depth) {
    if (depth < 0) throw InputError("truncation depth must be nonnegative");
    OrthonormalBasis b;
    b.kind = BasisKind::HMinus;
    b.depth = depth;
    b.vectors.reserve(static_cast<std::size_t>(depth + 1));
    for (int k = 1; k <= depth + 1; ++k) b.vectors.push_back(LaurentPolynomial::monomial(-k));
    return b;
}

OrthonormalBasis basis_Kperp(const BlaschkeProduct& theta, int depth) {
    OrthonormalBasis b = basis_thetaH2(theta, depth);
    const OrthonormalBasis minus = basis_Hminus(depth);
    b.kind = BasisKind::ModelPerp;
    b.vectors.insert(b.vectors.end(), minus.vectors.begin(), minus.vectors.end());
    return b;
}

OrthonormalBasis admissible_for_shift(const OrthonormalBasis& v) {
    const auto n = static_cast<Eigen::Index>(v.size());
    OrthonormalBasis out;
    out.kind = BasisKind::Admissible;
    out.depth = v.depth;
    out.inner = v.inner;
    out.parent_label = v.label();
    if (n == 0) return out;

    // Residuals (I - P_V)(z v_i) as coefficient columns over a common band.
    std::vector<LaurentPolynomial> residual;
    residual.reserve(v.size());
    int lo = 0;
    int hi = -1;
    for (const auto& vi : v.vectors) {
        const LaurentPolynomial zv = vi.shifted(1);
        residual.push_back(zv - v.synthesize(v.coordinates(zv)));
        const auto& r = residual.back();
        if (r.is_zero()) continue;
        if (hi < lo) {
            lo = r.lo();
            hi = r.hi();
        } else {
            lo = std::min(lo, r.lo());
            hi = std::max(hi, r.hi());
        }
    }

    Eigen::MatrixXcd kernel;
    if (hi < lo) {
        kernel = Eigen::MatrixXcd::Identity(n, n);
    } else {
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(hi - lo + 1, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& r = residual[static_cast<std::size_t>(j)];
            for (int k = r.lo(); k <= r.hi() && !r.is_zero(); ++k) w(k - lo, j) = r.coeff(k);
        }
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(w, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        Eigen::Index rank = 0;
        while (rank < sv.size() && sv(rank) >= kKernelThreshold) ++rank;
        kernel = svd.matrixV().rightCols(n - rank);
    }

    // Canonical basis: project the parent coordinate axes, keep independent images.
    const Eigen::MatrixXcd projector = kernel * kernel.adjoint();
    std::vector<Eigen::VectorXcd> chosen;
    for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(chosen.size()) < kernel.cols(); ++i) {
        Eigen::VectorXcd w = projector.col(i);
        for (const auto& c : chosen) w -= c.dot(w) * c;
        const double norm = w.norm();
        if (norm > 1e-6) chosen.push_back(w / norm);
    }
    for (const auto& c : chosen) out.vectors.push_back(v.synthesize(c));
    return out;
}

}  // namespace msolab
