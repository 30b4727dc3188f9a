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

#include "msolab/characterize.hpp"

#include <algorithm>
#include <string>

#include <Eigen/SVD>

#include "msolab/error.hpp"

namespace msolab {
namespace {

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

std::string at(const std::string& name, Eigen::Index i, Eigen::Index j) {
    return name + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::vector<Witness> largest_entries(const Eigen::MatrixXcd& r, const std::string& name) {
    std::vector<std::pair<double, std::pair<Eigen::Index, Eigen::Index>>> all;
    all.reserve(static_cast<std::size_t>(r.size()));
    for (Eigen::Index j = 0; j < r.cols(); ++j)
        for (Eigen::Index i = 0; i < r.rows(); ++i) all.push_back({std::abs(r(i, j)), {i, j}});
    const std::size_t keep = std::min<std::size_t>(3, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Witness> out;
    for (std::size_t k = 0; k < keep; ++k)
        out.push_back({at(name, all[k].second.first, all[k].second.second), all[k].first});
    return out;
}

DefectReport finish(std::string id, double defect, double tol, std::vector<Witness> candidates) {
    DefectReport rep;
    rep.condition = std::move(id);
    rep.defect = defect;
    rep.tolerance = tol;
    rep.pass = defect <= tol;
    if (!rep.pass) {
        std::erase_if(candidates, [](const Witness& w) { return !(w.deviation > 0.0); });
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Witness& a, const Witness& b) { return a.deviation > b.deviation; });
        if (candidates.size() > 3) candidates.resize(3);
        rep.witnesses = std::move(candidates);
    }
    return rep;
}

DefectReport matrix_report(std::string id, const Eigen::MatrixXcd& residual, double tol, const std::string& name) {
    return finish(std::move(id), spectral_norm(residual), tol, largest_entries(residual, name));
}

Eigen::Index interior_size(const BlockOperator& d) {
    const int lim = d.interior_limit();
    if (lim < 0)
        throw InputError("interior window is empty: M=" + std::to_string(d.depth()) + " leaves no room for the guard band");
    return std::min<Eigen::Index>(lim + 1, d.depth());
}

// X(i,j) - X(i+1,j+1) on the leading n x n window.
Eigen::MatrixXcd toeplitz_residual(const Eigen::MatrixXcd& x, Eigen::Index n) {
    return x.topLeftCorner(n, n) - x.block(1, 1, n, n);
}

// X(i,j+1) - X(i+1,j) on the leading n x n window.
Eigen::MatrixXcd hankel_residual(const Eigen::MatrixXcd& x, Eigen::Index n) {
    return x.block(0, 1, n, n) - x.block(1, 0, n, n);
}

// (rows x cols) matrix with entry series[i - j + offset].
Eigen::MatrixXcd coefficient_band(const LaurentPolynomial& s, Eigen::Index rows, Eigen::Index cols, int offset) {
    Eigen::MatrixXcd out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = s.coeff(static_cast<int>(i - j) + offset);
    return out;
}

// Right-hand side of the corner identity on the window:
// R(l,k) = coefficient of conj(z)^(l+1) in P-(C_alpha(conj(theta) W_k)),
// W_k = That^* (theta alpha z^k) expressed in theta H2 coordinates.
Eigen::MatrixXcd corner_rhs(const BlockOperator& d, Eigen::Index n) {
    const Eigen::Index full = d.block_size();
    const Eigen::MatrixXcd c = coefficient_band(d.theta().series(), full, n, 0);
    const Eigen::MatrixXcd w = d.That.adjoint() * c;
    const Eigen::MatrixXcd a = coefficient_band(d.alpha().series(), full, n, 0);
    return a.transpose() * w.conjugate();
}

// P-(D theta) - P-(theta alpha conj(D* alpha)) on conj(z)^(l+1), l < n.
Eigen::VectorXcd boundary_residual(const BlockOperator& d, Eigen::Index n) {
    const Eigen::Index full = d.block_size();
    Eigen::VectorXcd r(n);
    const LaurentPolynomial& al = d.alpha().series();
    for (Eigen::Index l = 0; l < n; ++l) {
        Scalar s = 0.0;
        for (Eigen::Index j = 0; j < full; ++j) s += d.That(0, j) * al.coeff(static_cast<int>(j - l - 1));
        r(l) = d.GammaHat(l, 0) - s;
    }
    return r;
}

// P-(D* alpha) - P-(theta alpha conj(D theta)) on conj(z)^(k+1), k < n.
Eigen::VectorXcd boundary_residual_adjoint(const BlockOperator& d, Eigen::Index n) {
    const Eigen::Index full = d.block_size();
    Eigen::VectorXcd r(n);
    const LaurentPolynomial& th = d.theta().series();
    for (Eigen::Index k = 0; k < n; ++k) {
        Scalar s = 0.0;
        for (Eigen::Index i = 0; i < full; ++i) s += std::conj(d.That(i, 0)) * th.coeff(static_cast<int>(i - k - 1));
        r(k) = std::conj(d.GammaCheck(0, k)) - s;
    }
    return r;
}

std::vector<Witness> vector_witnesses(const Eigen::VectorXcd& r, const std::string& name) {
    std::vector<Witness> out;
    for (Eigen::Index i = 0; i < r.size(); ++i) out.push_back({name + "[" + std::to_string(i) + "]", std::abs(r(i))});
    return out;
}

struct AdmissibleCoords {
    Eigen::MatrixXcd f;   // coordinates of the admissible vectors
    Eigen::MatrixXcd zf;  // coordinates of z times them
};

AdmissibleCoords admissible_coords(const OrthonormalBasis& b) {
    const OrthonormalBasis adm = admissible_for_shift(b);
    const auto n = static_cast<Eigen::Index>(b.size());
    const auto k = static_cast<Eigen::Index>(adm.size());
    AdmissibleCoords out{Eigen::MatrixXcd(n, k), Eigen::MatrixXcd(n, k)};
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto& v = adm.vectors[static_cast<std::size_t>(i)];
        out.f.col(i) = b.coordinates(v);
        out.zf.col(i) = b.coordinates(v.shifted(1));
    }
    return out;
}

}  // namespace

double default_tolerance(const BlaschkeProduct& theta, const BlaschkeProduct& alpha) {
    return std::max(theta.max_modulus(), alpha.max_modulus()) > 0.5 ? 1e-8 : 1e-10;
}

double toeplitz_deviation(const Eigen::MatrixXcd& x, Eigen::Index n) {
    n = std::min({n, x.rows() - 1, x.cols() - 1});
    return n <= 0 ? 0.0 : toeplitz_residual(x, n).cwiseAbs().maxCoeff();
}

double hankel_deviation(const Eigen::MatrixXcd& x, Eigen::Index n) {
    n = std::min({n, x.rows() - 1, x.cols() - 1});
    return n <= 0 ? 0.0 : hankel_residual(x, n).cwiseAbs().maxCoeff();
}

DefectReport shift_invariance_defect(const Eigen::MatrixXcd& a, const OrthonormalBasis& domain,
                                     const OrthonormalBasis& codomain, double tolerance) {
    if (a.rows() != static_cast<Eigen::Index>(codomain.size()) || a.cols() != static_cast<Eigen::Index>(domain.size()))
        throw InputError("operator matrix does not match the domain/codomain bases");
    const AdmissibleCoords x = admissible_coords(domain);
    const AdmissibleCoords y = admissible_coords(codomain);
    const Eigen::MatrixXcd g = y.zf.adjoint() * a * x.zf - y.f.adjoint() * a * x.f;
    const double defect = g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
    std::vector<Witness> w;
    for (const auto& e : largest_entries(g.transpose(), "pair(f,g)")) w.push_back(e);
    return finish(condition_id::kShift, defect, tolerance, std::move(w));
}

ShiftInvariantSpace solve_shift_invariant_space(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                                Subspace space, int depth) {
    ShiftInvariantSpace out;
    if (space == Subspace::Model) {
        out.domain = tm_basis(theta);
        out.codomain = tm_basis(alpha);
    } else if (space == Subspace::ModelPerp) {
        if (!theta.is_monomial() || !alpha.is_monomial())
            throw InputError("the K-perp shift-invariance solve supports monomial inner functions only");
        out.domain = basis_Kperp(theta, depth);
        out.codomain = basis_Kperp(alpha, depth);
    } else {
        throw InputError("shift-invariance solve needs the model or model_perp space");
    }

    const AdmissibleCoords x = admissible_coords(out.domain);
    const AdmissibleCoords y = admissible_coords(out.codomain);
    const auto nd = static_cast<Eigen::Index>(out.domain.size());
    const auto nc = static_cast<Eigen::Index>(out.codomain.size());
    const Eigen::Index unknowns = nd * nc;

    // Row (i, j): coefficients of vec(A) (column-major) in
    // <A z f_i, z g_j> - <A f_i, g_j>.
    Eigen::MatrixXcd system(x.f.cols() * y.f.cols(), unknowns);
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < x.f.cols(); ++i) {
        for (Eigen::Index j = 0; j < y.f.cols(); ++j, ++row) {
            for (Eigen::Index b = 0; b < nd; ++b)
                for (Eigen::Index a = 0; a < nc; ++a)
                    system(row, b * nc + a) =
                        std::conj(y.zf(a, j)) * x.zf(b, i) - std::conj(y.f(a, j)) * x.f(b, i);
        }
    }

    Eigen::MatrixXcd kernel;
    if (system.rows() == 0) {
        kernel = Eigen::MatrixXcd::Identity(unknowns, unknowns);
    } else {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        Eigen::Index rank = 0;
        while (rank < sv.size() && sv(rank) >= kKernelThreshold) ++rank;
        kernel = svd.matrixV().rightCols(unknowns - rank);
    }
    out.dimension = static_cast<int>(kernel.cols());
    for (Eigen::Index k = 0; k < kernel.cols(); ++k)
        out.basis.push_back(Eigen::Map<const Eigen::MatrixXcd>(kernel.col(k).data(), nc, nd));
    return out;
}

std::vector<DefectReport> check_block_conditions(const BlockOperator& d, double tolerance) {
    const Eigen::Index n = interior_size(d);
    return {
        matrix_report(condition_id::kBlockToeplitzHat, toeplitz_residual(d.That, n), tolerance, "That"),
        matrix_report(condition_id::kBlockToeplitzCheck, toeplitz_residual(d.TCheck, n), tolerance, "TCheck"),
        matrix_report(condition_id::kBlockHankelHat, hankel_residual(d.GammaHat, n), tolerance, "GammaHat"),
        matrix_report(condition_id::kBlockHankelCheck, hankel_residual(d.GammaCheck, n), tolerance, "GammaCheck"),
    };
}

AdttoVerdict check_adtto(const BlockOperator& d, double tolerance) {
    const Eigen::Index n = interior_size(d);
    AdttoVerdict v;
    v.reports.push_back(
        matrix_report(condition_id::kAdttoShift, toeplitz_residual(d.That, n), tolerance, "That"));

    const Eigen::MatrixXcd corner = d.TCheck.topLeftCorner(n, n) - corner_rhs(d, n);
    v.reports.push_back(matrix_report(condition_id::kAdttoCorner, corner, tolerance, "TCheck"));

    const Eigen::MatrixXcd hat = hankel_residual(d.GammaHat, n);
    const Eigen::MatrixXcd check = hankel_residual(d.GammaCheck, n);
    std::vector<Witness> w3 = largest_entries(hat, "GammaHat");
    for (auto& e : largest_entries(check, "GammaCheck")) w3.push_back(std::move(e));
    v.reports.push_back(
        finish(condition_id::kAdttoIntertwine, std::max(spectral_norm(hat), spectral_norm(check)), tolerance, w3));

    const Eigen::VectorXcd r = boundary_residual(d, n);
    const Eigen::VectorXcd s = boundary_residual_adjoint(d, n);
    std::vector<Witness> w4 = vector_witnesses(r, "P-(D theta)");
    for (auto& e : vector_witnesses(s, "P-(D* alpha)")) w4.push_back(std::move(e));
    v.reports.push_back(finish(condition_id::kAdttoBoundary, std::max(r.norm(), s.norm()), tolerance, w4));

    v.pass = std::all_of(v.reports.begin(), v.reports.end(), [](const DefectReport& x) { return x.pass; });
    return v;
}

Eigen::MatrixXcd corner_condition_rhs(const BlockOperator& d) { return corner_rhs(d, interior_size(d)); }

Recovery recover_symbol(const BlockOperator& d, RecoveryMethod method) {
    const Eigen::Index nb = d.block_size();
    LaurentPolynomial phi;
    if (method == RecoveryMethod::Zbar) {
        // P-(z D(conj z)) from the first TCheck column, J P-(D* conj z) from its first row.
        std::vector<Scalar> c(static_cast<std::size_t>(2 * nb - 1));
        for (Eigen::Index l = 1; l < nb; ++l) c[static_cast<std::size_t>(nb - 1 - l)] = d.TCheck(l, 0);
        for (Eigen::Index k = 0; k < nb; ++k) c[static_cast<std::size_t>(nb - 1 + k)] = d.TCheck(0, k);
        phi = LaurentPolynomial(-static_cast<int>(nb - 1), std::move(c));
    } else {
        const LaurentPolynomial& th = d.theta().series();
        const LaurentPolynomial& al = d.alpha().series();
        const LaurentPolynomial th_bar = conj_function(th);
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(2 * nb);
        x.head(nb) = d.That.col(0);
        const LaurentPolynomial d_theta_plus = d.codomain_basis().synthesize(x);
        x.head(nb) = d.That.row(0).adjoint();
        const LaurentPolynomial d_star_alpha_plus = d.domain_basis().synthesize(x);
        phi = multiply(th_bar, d_theta_plus) + multiply(al, conj_function(d_star_alpha_plus)) -
              d.That(0, 0) * multiply(al, th_bar);
    }
    Recovery rec;
    rec.symbol = SymbolFunction(phi.chopped(kRecoveryChop).with_tail_bound(0.0));

    const Eigen::Index n = interior_size(d);
    const BlockOperator model = compress_dtto(d.theta(), d.alpha(), rec.symbol.value, d.depth(), Window{n, n});
    rec.residual = std::max({spectral_norm((d.That - model.That).topLeftCorner(n, n)),
                             spectral_norm((d.GammaCheck - model.GammaCheck).topLeftCorner(n, n)),
                             spectral_norm((d.GammaHat - model.GammaHat).topLeftCorner(n, n)),
                             spectral_norm((d.TCheck - model.TCheck).topLeftCorner(n, n))});
    return rec;
}

AnalyticVerdict is_analytic_adtto(const BlockOperator& d, double tolerance) {
    const Eigen::Index nb = d.block_size();
    std::vector<Witness> w;
    double defect = 0.0;
    for (Eigen::Index k = 1; k < nb; ++k) {
        const double dev = std::abs(d.TCheck(k, 0));
        defect = std::max(defect, dev);
        w.push_back({"<D conj(z), conj(z)^" + std::to_string(k + 1) + ">", dev});
    }
    AnalyticVerdict v;
    v.report = finish(condition_id::kAnalytic, defect, tolerance, std::move(w));
    v.analytic = v.report.pass;
    return v;
}

}  // namespace msolab
