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

#include "msolab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace msolab {

LaurentPolynomial::LaurentPolynomial(int lo, std::vector<Scalar> coeffs, double tail_bound)
    : lo_(lo), coeffs_(std::move(coeffs)), tail_(tail_bound) {
    trim();
}

LaurentPolynomial LaurentPolynomial::monomial(int degree, Scalar c) {
    return LaurentPolynomial(degree, std::vector<Scalar>{c});
}

LaurentPolynomial LaurentPolynomial::from_terms(std::span<const std::pair<int, Scalar>> terms) {
    if (terms.empty()) return {};
    std::map<int, Scalar> acc;
    for (const auto& [k, c] : terms) acc[k] += c;
    const int lo = acc.begin()->first;
    const int hi = acc.rbegin()->first;
    std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [k, v] : acc) c[static_cast<std::size_t>(k - lo)] = v;
    return LaurentPolynomial(lo, std::move(c));
}

void LaurentPolynomial::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == Scalar(0.0)) ++first;
    std::size_t last = coeffs_.size();
    while (last > first && coeffs_[last - 1] == Scalar(0.0)) --last;
    if (first == last) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<Scalar>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                      coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        lo_ += static_cast<int>(first);
    }
}

Scalar LaurentPolynomial::coeff(int k) const noexcept {
    if (coeffs_.empty() || k < lo_ || k > hi()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

int LaurentPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return 0;
    return std::max(std::abs(lo_), std::abs(hi()));
}

double LaurentPolynomial::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return s;
}

double LaurentPolynomial::norm() const noexcept { return std::sqrt(norm_squared()); }

double LaurentPolynomial::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Scalar LaurentPolynomial::operator()(Scalar zeta) const noexcept {
    if (coeffs_.empty()) return 0.0;
    Scalar acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * zeta + *it;
    return acc * std::pow(zeta, lo_);
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial out = *this;
    if (!out.coeffs_.empty()) out.lo_ += k;
    return out;
}

LaurentPolynomial LaurentPolynomial::with_tail_bound(double tail) const {
    LaurentPolynomial out = *this;
    out.tail_ = tail;
    return out;
}

LaurentPolynomial LaurentPolynomial::chopped(double threshold) const {
    std::vector<Scalar> c = coeffs_;
    for (auto& v : c)
        if (std::abs(v) <= threshold) v = 0.0;
    return LaurentPolynomial(lo_, std::move(c), tail_);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    tail_ += other.tail_;
    if (other.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        lo_ = other.lo_;
        coeffs_ = other.coeffs_;
        return *this;
    }
    const int lo = std::min(lo_, other.lo_);
    const int hi = std::max(this->hi(), other.hi());
    if (lo != lo_ || hi != this->hi()) {
        std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1));
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + (lo_ - lo));
        coeffs_ = std::move(c);
        lo_ = lo;
    }
    const auto offset = static_cast<std::size_t>(other.lo_ - lo_);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[offset + i] += other.coeffs_[i];
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial& LaurentPolynomial::operator*=(Scalar s) {
    tail_ *= std::abs(s);
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    const double tail = f.tail_bound() * g.norm() + g.tail_bound() * f.norm() + f.tail_bound() * g.tail_bound();
    if (f.is_zero() || g.is_zero()) return LaurentPolynomial(0, {}, tail);
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Scalar> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Scalar ai = a[i];
        if (ai == Scalar(0.0)) continue;
        Scalar* out = c.data() + i;
        for (std::size_t j = 0; j < b.size(); ++j) out[j] += ai * b[j];
    }
    return LaurentPolynomial(f.lo() + g.lo(), std::move(c), tail);
}

LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) { return multiply(f, g); }

Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0.0;
    const int lo = std::max(f.lo(), g.lo());
    const int hi = std::min(f.hi(), g.hi());
    if (lo > hi) return 0.0;
    const Scalar* a = f.coeffs().data() + (lo - f.lo());
    const Scalar* b = g.coeffs().data() + (lo - g.lo());
    Scalar acc = 0.0;
    for (int k = 0; k <= hi - lo; ++k) acc += a[k] * std::conj(b[k]);
    return acc;
}

LaurentPolynomial project_band(const LaurentPolynomial& f, std::optional<int> lo, std::optional<int> hi) {
    if (f.is_zero()) return f;
    const int a = std::max(f.lo(), lo.value_or(f.lo()));
    const int b = std::min(f.hi(), hi.value_or(f.hi()));
    if (a > b) return LaurentPolynomial(0, {}, f.tail_bound());
    std::vector<Scalar> c(f.coeffs().begin() + (a - f.lo()), f.coeffs().begin() + (b - f.lo() + 1));
    return LaurentPolynomial(a, std::move(c), f.tail_bound());
}

LaurentPolynomial involution_J(const LaurentPolynomial& f) {
    if (f.is_zero()) return f;
    // (Jf)_j = conj(c_{-j-1}): reverse, conjugate, land on [-hi-1, -lo-1].
    std::vector<Scalar> c(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& v : c) v = std::conj(v);
    return LaurentPolynomial(-f.hi() - 1, std::move(c), f.tail_bound());
}

LaurentPolynomial conj_function(const LaurentPolynomial& f) {
    if (f.is_zero()) return f;
    std::vector<Scalar> c(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& v : c) v = std::conj(v);
    return LaurentPolynomial(-f.hi(), std::move(c), f.tail_bound());
}

double sampled_sup_norm(const LaurentPolynomial& f, int samples) {
    double m = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double t = 2.0 * std::numbers::pi * s / samples;
        m = std::max(m, std::abs(f(std::polar(1.0, t))));
    }
    return m;
}

}  // namespace msolab
