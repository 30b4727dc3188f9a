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

#include "msolab/identities.hpp"

#include <algorithm>

#include "msolab/error.hpp"
#include "msolab/kernels.hpp"
#include "msolab/spaces.hpp"

namespace msolab {
namespace {

int window(const BlockOperator& d) {
    const int lim = d.interior_limit();
    if (lim < 0) throw InputError("interior window is empty");
    return lim + 1;
}

std::vector<LaurentPolynomial> theta_h2(const BlaschkeProduct& theta, int count) {
    std::vector<LaurentPolynomial> v;
    for (int k = 0; k < count; ++k) v.push_back(theta.series().shifted(k));
    return v;
}

std::vector<LaurentPolynomial> h_minus(int count) {
    std::vector<LaurentPolynomial> v;
    for (int k = 1; k <= count; ++k) v.push_back(LaurentPolynomial::monomial(-k));
    return v;
}

double matrix_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

double max_defect(const std::vector<IdentityDefect>& v) {
    double m = 0.0;
    for (const auto& d : v) m = std::max(m, d.defect);
    return m;
}

std::vector<IdentityDefect> compression_identities(const BlockOperator& d, const LaurentPolynomial& phi) {
    const int n = window(d);
    const LaurentPolynomial& th = d.theta().series();
    const LaurentPolynomial& al = d.alpha().series();
    const LaurentPolynomial al_bar_phi = conj_function(al) * phi;
    const LaurentPolynomial toeplitz_symbol = al_bar_phi * th;
    const LaurentPolynomial phi_theta = phi * th;
    const LaurentPolynomial phi_bar = conj_function(phi);

    double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
    for (int j = 0; j < n; ++j) {
        const LaurentPolynomial tz = positive_part(toeplitz_symbol.shifted(j));
        const LaurentPolynomial hz = negative_part(phi_theta.shifted(j));
        const LaurentPolynomial jt = involution_J(positive_part(phi_bar.shifted(j)));
        const LaurentPolynomial ha = positive_part(al_bar_phi.shifted(-j - 1));
        for (int i = 0; i < n; ++i) {
            t1 = std::max(t1, std::abs(d.That(i, j) - tz.coeff(i)));
            t2 = std::max(t2, std::abs(d.GammaHat(i, j) - hz.coeff(-i - 1)));
            t3 = std::max(t3, std::abs(d.TCheck(i, j) - jt.coeff(-i - 1)));
            t4 = std::max(t4, std::abs(d.GammaCheck(i, j) - ha.coeff(i)));
        }
    }
    return {{"toeplitz-factor", t1}, {"hankel-factor", t2}, {"J-conjugate", t3}, {"hankel-adjoint", t4}};
}

std::vector<IdentityDefect> conjugation_block_identities(const BlockOperator& d, const LaurentPolynomial& phi) {
    const int n = window(d);
    const BlaschkeProduct& theta = d.theta();
    const BlaschkeProduct& alpha = d.alpha();
    const LaurentPolynomial& th = theta.series();
    const LaurentPolynomial& al = alpha.series();
    const LaurentPolynomial phi_bar = conj_function(phi);
    const LaurentPolynomial psi = al * phi_bar * conj_function(th);

    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    for (int j = 0; j < n; ++j) {
        const LaurentPolynomial cj = conjugation_C(theta, th.shifted(j));

        const LaurentPolynomial hat = conjugation_C(alpha, negative_part(psi * cj));
        for (int i = 0; i < n; ++i) c1 = std::max(c1, std::abs(d.That(i, j) - inner_product(hat, al.shifted(i))));

        const LaurentPolynomial y = th * conjugation_C(alpha, LaurentPolynomial::monomial(-j - 1));
        const LaurentPolynomial t = project(theta, Subspace::ThetaH2, phi_bar * y);
        const LaurentPolynomial check = negative_part(conjugation_C(alpha, conj_function(th) * t));
        for (int l = 0; l < n; ++l) c2 = std::max(c2, std::abs(d.TCheck(l, j) - check.coeff(-l - 1)));

        const LaurentPolynomial gamma = conjugation_C(theta, project(theta, Subspace::ThetaH2, phi_bar * cj));
        for (int l = 0; l < n; ++l) c3 = std::max(c3, std::abs(d.GammaHat(l, j) - gamma.coeff(-l - 1)));
    }
    return {{"C-hat-from-check", c1}, {"check-from-hat", c2}, {"C-gamma", c3}};
}

std::vector<IdentityDefect> semicommutation_identities(const BlaschkeProduct& theta, const LaurentPolynomial& p1,
                                                       const LaurentPolynomial& p2, int n) {
    const int k = n + p1.degree() + p2.degree() + 1;
    const LaurentPolynomial p1_bar = conj_function(p1);
    const LaurentPolynomial p2_bar = conj_function(p2);
    const auto wide_t = theta_h2(theta, k);
    const auto wide_m = h_minus(k);
    const std::span<const LaurentPolynomial> nt(wide_t.data(), static_cast<std::size_t>(n));
    const std::span<const LaurentPolynomial> nm(wide_m.data(), static_cast<std::size_t>(n));

    const Eigen::MatrixXcd hat = compress(p1_bar, wide_t, nt) * compress(p2, nt, wide_t);
    const Eigen::MatrixXcd check = compress(p1, wide_m, nm) * compress(p2_bar, nm, wide_m);
    return {{"hat-product", matrix_gap(hat, compress(p1_bar * p2, nt, nt))},
            {"check-product", matrix_gap(check, compress(p1 * p2_bar, nm, nm))}};
}

std::vector<IdentityDefect> hankel_kill_identities(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, int k,
                                                   int n) {
    const auto t = theta_h2(theta, n);
    const auto a = theta_h2(alpha, n);
    const auto m = h_minus(n);
    const LaurentPolynomial hat_symbol = conj_function(theta.series()).shifted(k);
    const LaurentPolynomial check_symbol = alpha.series().shifted(-k);
    return {{"gamma-hat-kill", compress(hat_symbol, t, m).cwiseAbs().maxCoeff()},
            {"gamma-check-kill", compress(check_symbol, m, a).cwiseAbs().maxCoeff()}};
}

std::vector<IdentityDefect> conjugation_identities(const BlaschkeProduct& theta, const LaurentPolynomial& f,
                                                   const LaurentPolynomial& g, const LaurentPolynomial& phi) {
    const auto c = [&](const LaurentPolynomial& x) { return conjugation_C(theta, x); };
    const auto p = [&](Subspace s, const LaurentPolynomial& x) { return project(theta, s, x); };
    const LaurentPolynomial cf = c(f);
    return {
        {"involution", (c(cf) - f).max_abs_coeff()},
        {"antiunitary", std::abs(inner_product(cf, c(g)) - inner_product(g, f))},
        {"intertwining", (c(phi * cf) - conj_function(phi) * f).max_abs_coeff()},
        {"swap-thetaH2", (c(p(Subspace::ThetaH2, f)) - p(Subspace::HMinus, cf)).max_abs_coeff()},
        {"swap-Hminus", (c(p(Subspace::HMinus, f)) - p(Subspace::ThetaH2, cf)).max_abs_coeff()},
        {"model-invariant", (c(p(Subspace::Model, f)) - p(Subspace::Model, cf)).max_abs_coeff()},
    };
}

}  // namespace msolab
