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

#include "msolab/inner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "msolab/basis.hpp"
#include "msolab/error.hpp"

namespace msolab {
namespace {

// Series of (z - a) / (1 - conj(a) z) up to degree n:
// -a + (1 - |a|^2) sum_{k>=1} conj(a)^(k-1) z^k.
LaurentPolynomial factor_series(Scalar a, int n) {
    if (a == Scalar(0.0)) return LaurentPolynomial::monomial(1);
    std::vector<Scalar> c(static_cast<std::size_t>(n + 1));
    c[0] = -a;
    const Scalar ab = std::conj(a);
    Scalar p = 1.0 - std::norm(a);
    for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = p;
        p *= ab;
    }
    return LaurentPolynomial(0, std::move(c));
}

// Series of sqrt(1 - |a|^2) / (1 - conj(a) z) up to degree n.
LaurentPolynomial kernel_series(Scalar a, int n) {
    const double s = std::sqrt(1.0 - std::norm(a));
    if (a == Scalar(0.0)) return LaurentPolynomial::constant(s);
    std::vector<Scalar> c(static_cast<std::size_t>(n + 1));
    const Scalar ab = std::conj(a);
    Scalar p = s;
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = p;
        p *= ab;
    }
    return LaurentPolynomial(0, std::move(c));
}

LaurentPolynomial truncated_product(const LaurentPolynomial& f, const LaurentPolynomial& g, int n) {
    return project_band(multiply(f, g), std::nullopt, n).with_tail_bound(0.0);
}

LaurentPolynomial product_series(std::span<const Scalar> zeros, Scalar constant, int n) {
    LaurentPolynomial acc = LaurentPolynomial::constant(constant);
    for (const Scalar a : zeros) acc = truncated_product(acc, factor_series(a, n), n);
    return acc;
}

double geometric_tail(int factors, double rho, int n) {
    if (rho == 0.0) return 0.0;
    return factors * std::pow(rho, n - factors + 1) / (1.0 - rho);
}

int smallest_degree_for(int factors, double rho, double cap) {
    int n = factors;
    while (geometric_tail(factors, rho, n) > cap) ++n;
    return n;
}

// Truncation degree for the cached series: both the geometric estimate and the
// mass actually observed past the cut (on an extended expansion) stay below cap.
LaurentPolynomial auto_series(std::span<const Scalar> zeros, Scalar constant, double rho, double cap) {
    const int d = static_cast<int>(zeros.size());
    if (rho == 0.0) return LaurentPolynomial::monomial(d, constant);
    const int by_estimate = smallest_degree_for(d, rho, cap);
    const int n_big = smallest_degree_for(d, rho, cap * 1e-3) + 16;
    const LaurentPolynomial big = product_series(zeros, constant, n_big);
    const double beyond = geometric_tail(d, rho, n_big);

    std::vector<double> tail_after(static_cast<std::size_t>(n_big + 2), 0.0);
    tail_after[static_cast<std::size_t>(n_big + 1)] = beyond;
    for (int k = n_big; k >= 0; --k)
        tail_after[static_cast<std::size_t>(k)] = tail_after[static_cast<std::size_t>(k + 1)] + std::abs(big.coeff(k));

    int n = d;
    while (n < n_big && tail_after[static_cast<std::size_t>(n + 1)] > cap) ++n;
    n = std::max(n, by_estimate);
    const double measured = tail_after[static_cast<std::size_t>(n + 1)];
    return project_band(big, std::nullopt, n).with_tail_bound(std::max(measured, geometric_tail(d, rho, n)));
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Scalar> zeros, Scalar constant, BlaschkeOptions options)
    : zeros_(std::move(zeros)), constant_(constant), options_(options) {
    if (zeros_.empty()) throw InputError("constant inner function: a Blaschke product needs at least one zero");
    for (const Scalar a : zeros_) {
        if (!(std::abs(a) < 1.0)) throw InputError("zero outside open disk");
        if (std::abs(a) > kDefaultModulusCap && !options_.allow_high_modulus)
            throw InputError("zero modulus above 0.95 requires allow_high_modulus");
    }
    if (std::abs(std::abs(constant_) - 1.0) > 1e-14) throw InputError("unimodular constant required (|c| = 1)");
    if (!(options_.tail_cap > 0.0)) throw InputError("tail cap must be positive");
    series_ = std::make_shared<const LaurentPolynomial>(auto_series(zeros_, constant_, max_modulus(), options_.tail_cap));
}

BlaschkeProduct BlaschkeProduct::monomial(int m) {
    return BlaschkeProduct(std::vector<Scalar>(static_cast<std::size_t>(std::max(m, 0)), Scalar(0.0)));
}

double BlaschkeProduct::max_modulus() const noexcept {
    double r = 0.0;
    for (const Scalar a : zeros_) r = std::max(r, std::abs(a));
    return r;
}

bool BlaschkeProduct::is_monomial() const noexcept {
    return std::all_of(zeros_.begin(), zeros_.end(), [](Scalar a) { return a == Scalar(0.0); });
}

Scalar BlaschkeProduct::evaluate(Scalar z) const noexcept {
    Scalar v = constant_;
    for (const Scalar a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
    return v;
}

double expansion_tail_bound(const BlaschkeProduct& b, int n) {
    return geometric_tail(b.degree(), b.max_modulus(), n);
}

LaurentPolynomial expand(const BlaschkeProduct& b, int n, double cap) {
    if (n < b.degree())
        throw InputError("expansion degree " + std::to_string(n) + " below the number of zeros " +
                         std::to_string(b.degree()));
    const double tail = expansion_tail_bound(b, n);
    if (tail > cap) {
        const int need = smallest_degree_for(b.degree(), b.max_modulus(), cap);
        throw TruncationError("expansion to degree " + std::to_string(n) + " discards more than the tail cap; need N >= " +
                                  std::to_string(need),
                              need);
    }
    return product_series(b.zeros(), b.constant(), n).with_tail_bound(tail);
}

OrthonormalBasis tm_basis(const BlaschkeProduct& b, std::optional<int> n_opt) {
    const int n = n_opt.value_or(b.effective_degree());
    const double rho = b.max_modulus();
    const double cap = b.options().tail_cap;
    OrthonormalBasis basis;
    basis.kind = BasisKind::Model;
    basis.inner = b;
    const auto zeros = b.zeros();
    LaurentPolynomial prefix = LaurentPolynomial::constant(1.0);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        const int factors = static_cast<int>(k) + 1;
        const double tail = rho == 0.0 ? 0.0 : factors * std::pow(rho, n - factors + 1) / (1.0 - rho);
        if (tail > cap) {
            const int need = smallest_degree_for(b.degree(), rho, cap);
            throw TruncationError("model-space basis needs expansion degree N >= " + std::to_string(need), need);
        }
        basis.vectors.push_back(truncated_product(kernel_series(zeros[k], n), prefix, n).with_tail_bound(tail));
        prefix = truncated_product(prefix, factor_series(zeros[k], n), n);
    }
    reorthonormalize(basis.vectors);
    return basis;
}

InnerCheck verify_inner(const BlaschkeProduct& b, int samples, double tol) {
    if (samples < 8) throw InputError("verify_inner needs at least 8 samples");
    InnerCheck out;
    for (int s = 0; s < samples; ++s) {
        const Scalar zeta = std::polar(1.0, 2.0 * std::numbers::pi * s / samples);
        out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(b.evaluate(zeta)) - 1.0));
    }
    out.pass = out.max_deviation <= tol;
    return out;
}

InnerCheck verify_unimodular(const LaurentPolynomial& expansion, int samples, double tol) {
    if (samples < 8) throw InputError("verify_unimodular needs at least 8 samples");
    InnerCheck out;
    for (int s = 0; s < samples; ++s) {
        const Scalar zeta = std::polar(1.0, 2.0 * std::numbers::pi * s / samples);
        out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(expansion(zeta)) - 1.0));
    }
    out.tail_warning = expansion.tail_bound() > tol;
    out.pass = out.max_deviation <= tol && !out.tail_warning;
    return out;
}

}  // namespace msolab
