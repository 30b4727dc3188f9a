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

// Serial versus OpenMP compression kernel timings.
//
// usage: bench_compress [depth ...]   (default depths 64 128 256 512)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "msolab/kernels.hpp"
#include "msolab/random.hpp"
#include "msolab/spaces.hpp"

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> depths;
    for (int i = 1; i < argc; ++i) depths.push_back(std::atoi(argv[i]));
    if (depths.empty()) depths = {64, 128, 256, 512};

    msolab::Rng rng(20260101);
    const msolab::BlaschkeProduct theta = msolab::random_blaschke(rng, 3, 0.8);
    const msolab::BlaschkeProduct alpha = msolab::random_blaschke(rng, 3, 0.8);
    const msolab::LaurentPolynomial phi = msolab::random_trig_polynomial(rng, 4);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%6s %10s %12s %12s %8s %10s\n", "M", "entries", "serial [s]", "openmp [s]", "speedup", "max diff");
    for (int m : depths) {
        const auto dom = msolab::basis_Kperp(theta, m);
        const auto cod = msolab::basis_Kperp(alpha, m);
        Eigen::MatrixXcd a;
        Eigen::MatrixXcd b;
        const double ts = best_of(3, [&] { a = msolab::compress_serial(phi, dom.vectors, cod.vectors); });
        const double tp = best_of(3, [&] { b = msolab::compress(phi, dom.vectors, cod.vectors); });
        std::printf("%6d %10ld %12.4f %12.4f %8.2f %10.1e\n", m, static_cast<long>(a.size()), ts, tp, ts / tp,
                    (a - b).cwiseAbs().maxCoeff());
    }
    return 0;
}
