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

#include <cstdint>
#include <random>

#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"

namespace msolab {

/**
 * Deterministic random source for suites and tests.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Derived values avoid the library distributions (their algorithms
 * are implementation-defined):
 *   uniform()         = (x >> 11) * 2^-53            in [0, 1)
 *   uniform_int(a, b) = a + x mod (b - a + 1)
 * with x the next 64-bit engine output.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi);
    /// Uniform in the square [-1,1] x [-1,1].
    Scalar complex_unit_square();
    /// exp(2 pi i u).
    Scalar unimodular();

private:
    std::mt19937_64 engine_;
};

/// Degree uniform in [1, max_degree]; zeros r e^{i t} with r = rho_max sqrt(u),
/// t uniform; unimodular constant.
BlaschkeProduct random_blaschke(Rng& rng, int max_degree, double rho_max);

/// Degree d uniform in [0, max_degree]; coefficients on [-d, d] drawn from the unit square.
LaurentPolynomial random_trig_polynomial(Rng& rng, int max_degree);

/// Degree d uniform in [0, max_degree]; coefficients on [0, d].
LaurentPolynomial random_analytic_polynomial(Rng& rng, int max_degree);

/// Nonzero random combination of the model-space basis vectors.
LaurentPolynomial random_model_vector(Rng& rng, const BlaschkeProduct& theta);

}  // namespace msolab
