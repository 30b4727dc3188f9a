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

#include "msolab/annihilate.hpp"

#include <algorithm>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "msolab/error.hpp"

namespace msolab {
namespace {

Eigen::VectorXcd checked_coordinates(const OrthonormalBasis& b, const LaurentPolynomial& v, const char* role) {
    Eigen::VectorXcd c = b.coordinates(v);
    const double defect = (v - b.synthesize(c)).norm();
    if (defect > kSpanTolerance * std::max(1.0, v.norm()))
        throw InputError(std::string("dyad component ") + role + " is not in the span of " + b.label() +
                         " (defect " + std::to_string(defect) + ")");
    return c;
}

// y^* A x touching only the columns where x is nonzero.
template <class ColumnFn>
Scalar sparse_form(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y, ColumnFn column) {
    Scalar s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j)
        if (x(j) != Scalar(0.0)) s += x(j) * y.dot(column(j));
    return s;
}

LaurentPolynomial zbar_conj(const LaurentPolynomial& f, int power = 1) {
    return conj_function(f).shifted(-power);
}

void require_analytic(const LaurentPolynomial& f, const char* name) {
    if (!f.is_zero() && f.lo() < 0) throw InputError(std::string(name) + " must be analytic (no negative degrees)");
}

bool in_space(const SpaceRef& s, const LaurentPolynomial& f) {
    return (project(s.inner, s.subspace, f) - f).norm() <= kSpanTolerance * std::max(1.0, f.norm());
}

bool has_large_coeff(const LaurentPolynomial& p) { return p.max_abs_coeff() > kProbeThreshold; }

// Coefficient columns of the given functions over their common band.
Eigen::MatrixXcd coefficient_matrix(const std::vector<const LaurentPolynomial*>& fs) {
    int lo = 0;
    int hi = -1;
    for (const auto* f : fs) {
        if (f->is_zero()) continue;
        if (hi < lo) {
            lo = f->lo();
            hi = f->hi();
        } else {
            lo = std::min(lo, f->lo());
            hi = std::max(hi, f->hi());
        }
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::max(hi - lo + 1, 0), static_cast<Eigen::Index>(fs.size()));
    for (std::size_t j = 0; j < fs.size(); ++j)
        for (int k = fs[j]->lo(); k <= fs[j]->hi(); ++k) m(k - lo, static_cast<Eigen::Index>(j)) = fs[j]->coeff(k);
    return m;
}

Eigen::MatrixXcd triangular_factor(const Eigen::MatrixXcd& a) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    const Eigen::Index k = std::min(a.rows(), a.cols());
    return qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
}

}  // namespace

Scalar pair(const Eigen::MatrixXcd& op, const OrthonormalBasis& domain, const OrthonormalBasis& codomain,
            const FiniteRankOperator& t) {
    if (op.rows() != static_cast<Eigen::Index>(codomain.size()) || op.cols() != static_cast<Eigen::Index>(domain.size()))
        throw InputError("operator matrix does not match the domain/codomain bases");
    Scalar s = 0.0;
    for (const auto& d : t.dyads) {
        const Eigen::VectorXcd x = checked_coordinates(domain, d.f, "f");
        const Eigen::VectorXcd y = checked_coordinates(codomain, d.g, "g");
        s += sparse_form(x, y, [&](Eigen::Index j) { return op.col(j); });
    }
    return s;
}

Scalar pair(const DenseComplexMatrix& op, const FiniteRankOperator& t) {
    return pair(op.entries, *op.domain, *op.codomain, t);
}

Scalar pair(const BlockOperator& op, const FiniteRankOperator& t) {
    const Eigen::Index n = op.block_size();
    Scalar s = 0.0;
    Eigen::VectorXcd col(2 * n);
    for (const auto& d : t.dyads) {
        const Eigen::VectorXcd x = checked_coordinates(op.domain_basis(), d.f, "f");
        const Eigen::VectorXcd y = checked_coordinates(op.codomain_basis(), d.g, "g");
        s += sparse_form(x, y, [&](Eigen::Index j) -> const Eigen::VectorXcd& {
            if (j < n) {
                col.head(n) = op.That.col(j);
                col.tail(n) = op.GammaHat.col(j);
            } else {
                col.head(n) = op.GammaCheck.col(j - n);
                col.tail(n) = op.TCheck.col(j - n);
            }
            return col;
        });
    }
    return s;
}

FiniteRankOperator gen_shift_pair(const LaurentPolynomial& f, const LaurentPolynomial& g, const SpaceRef& domain,
                                  const SpaceRef& codomain) {
    const LaurentPolynomial zf = f.shifted(1);
    const LaurentPolynomial zg = g.shifted(1);
    if (!in_space(domain, f) || !in_space(domain, zf))
        throw InputError("f is not shift-admissible: f and z f must both lie in the domain space");
    if (!in_space(codomain, g) || !in_space(codomain, zg))
        throw InputError("g is not shift-admissible: g and z g must both lie in the codomain space");
    return {{{zf, zg}, {-f, g}}};
}

FiniteRankOperator gen_M(int index, const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                         const LaurentPolynomial& h, const LaurentPolynomial& g) {
    require_analytic(h, "h");
    require_analytic(g, "g");
    const LaurentPolynomial& th = theta.series();
    const LaurentPolynomial& al = alpha.series();
    switch (index) {
        case 1: {
            const LaurentPolynomial thh = th * h;
            const LaurentPolynomial alg = al * g;
            return {{{thh, alg}, {-thh.shifted(1), alg.shifted(1)}}};
        }
        case 2: {
            const LaurentPolynomial tha = th * al;
            return {{{tha * h, tha * g}, {-zbar_conj(g), zbar_conj(h)}}};
        }
        case 3: {
            const LaurentPolynomial thh = th * h;
            return {{{thh.shifted(1), zbar_conj(g)}, {-thh, zbar_conj(g, 2)}}};
        }
        case 4: {
            const LaurentPolynomial alg = al * g;
            return {{{zbar_conj(h), alg.shifted(1)}, {-zbar_conj(h, 2), alg}}};
        }
        case 5: return {{{th, zbar_conj(g)}, {-(th * al * g).shifted(1), al}}};
        case 6: return {{{th, (al * th * g).shifted(1)}, {-zbar_conj(g), al}}};
        default: break;
    }
    throw InputError("annihilator family index must be in 1..6, got " + std::to_string(index));
}

TransitivityProbe transitivity_probe(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw InputError("transitivity probe needs nonzero f and g");
    TransitivityProbe p;
    p.product = multiply(f, conj_function(g));
    p.nonzero = has_large_coeff(p.product);
    return p;
}

DualTransitivityProbe dual_transitivity_probe(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                              const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw InputError("transitivity probe needs nonzero f and g");
    const LaurentPolynomial f_plus = positive_part(multiply(conj_function(theta.series()), f));
    const LaurentPolynomial g_plus = positive_part(multiply(conj_function(alpha.series()), g));
    const LaurentPolynomial f_minus = conj_function(negative_part(f).shifted(1));
    const LaurentPolynomial g_minus = conj_function(negative_part(g).shifted(1));
    DualTransitivityProbe p;
    p.plus = multiply(f_plus, conj_function(g_plus));
    p.minus = multiply(f_minus, conj_function(g_minus));
    p.cross = multiply(multiply(theta.series(), f_plus), g_minus).shifted(1);
    p.nonzero = has_large_coeff(p.plus) || has_large_coeff(p.minus) || has_large_coeff(p.cross);
    return p;
}

FiniteRankOperator represent_functional(const LaurentPolynomial& density, const BlaschkeProduct& theta,
                                        const BlaschkeProduct& alpha) {
    if (density.is_zero()) return {};
    const int n = std::max(0, -density.lo());
    const LaurentPolynomial tha = multiply(theta.series(), alpha.series());
    return {{{multiply(tha, density.shifted(n)), tha.shifted(n)}}};
}

double trace_norm(const FiniteRankOperator& t) {
    if (t.dyads.empty()) return 0.0;
    std::vector<const LaurentPolynomial*> fs;
    std::vector<const LaurentPolynomial*> gs;
    for (const auto& d : t.dyads) {
        fs.push_back(&d.f);
        gs.push_back(&d.g);
    }
    const Eigen::MatrixXcd f = coefficient_matrix(fs);
    const Eigen::MatrixXcd g = coefficient_matrix(gs);
    if (f.rows() == 0 || g.rows() == 0) return 0.0;
    const Eigen::MatrixXcd core = triangular_factor(f) * triangular_factor(g).adjoint();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(core);
    return svd.singularValues().sum();
}

}  // namespace msolab
