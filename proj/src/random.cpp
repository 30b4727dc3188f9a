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

#include "msolab/random.hpp"

#include <cmath>
#include <numbers>

#include "msolab/basis.hpp"

namespace msolab {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(engine_() % span);
}

Scalar Rng::complex_unit_square() {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
}

Scalar Rng::unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

BlaschkeProduct random_blaschke(Rng& rng, int max_degree, double rho_max) {
    const int d = rng.uniform_int(1, max_degree);
    std::vector<Scalar> zeros;
    for (int k = 0; k < d; ++k) {
        const double r = rho_max * std::sqrt(rng.uniform());
        zeros.push_back(std::polar(r, 2.0 * std::numbers::pi * rng.uniform()));
    }
    const Scalar c = rng.unimodular();
    return BlaschkeProduct(std::move(zeros), c / std::abs(c));
}

LaurentPolynomial random_trig_polynomial(Rng& rng, int max_degree) {
    const int d = rng.uniform_int(0, max_degree);
    std::vector<Scalar> c;
    for (int k = -d; k <= d; ++k) c.push_back(rng.complex_unit_square());
    return LaurentPolynomial(-d, std::move(c));
}

LaurentPolynomial random_analytic_polynomial(Rng& rng, int max_degree) {
    const int d = rng.uniform_int(0, max_degree);
    std::vector<Scalar> c;
    for (int k = 0; k <= d; ++k) c.push_back(rng.complex_unit_square());
    return LaurentPolynomial(0, std::move(c));
}

LaurentPolynomial random_model_vector(Rng& rng, const BlaschkeProduct& theta) {
    const OrthonormalBasis b = tm_basis(theta);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(b.size()));
    do {
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = rng.complex_unit_square();
    } while (c.norm() < 1e-3);
    return b.synthesize(c);
}

}  // namespace msolab
