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

#include "msolab/kernels.hpp"

#include <algorithm>

namespace msolab {
namespace {

struct Extent {
    Eigen::Index rows;
    Eigen::Index cols;
};

Extent extent(std::span<const LaurentPolynomial> domain, std::span<const LaurentPolynomial> codomain, Window w) {
    const auto r = static_cast<Eigen::Index>(codomain.size());
    const auto c = static_cast<Eigen::Index>(domain.size());
    return {std::clamp<Eigen::Index>(w.rows.value_or(r), 0, r), std::clamp<Eigen::Index>(w.cols.value_or(c), 0, c)};
}

void fill_column(Eigen::MatrixXcd& out, Eigen::Index j, const LaurentPolynomial& image,
                 std::span<const LaurentPolynomial> codomain) {
    for (Eigen::Index i = 0; i < out.rows(); ++i) out(i, j) = inner_product(image, codomain[static_cast<std::size_t>(i)]);
}

}  // namespace

Eigen::MatrixXcd compress(const LaurentPolynomial& symbol, std::span<const LaurentPolynomial> domain,
                          std::span<const LaurentPolynomial> codomain, Window window) {
    const Extent e = extent(domain, codomain, window);
    Eigen::MatrixXcd out(e.rows, e.cols);
#pragma omp parallel for schedule(dynamic, 4)
    for (Eigen::Index j = 0; j < e.cols; ++j)
        fill_column(out, j, multiply(symbol, domain[static_cast<std::size_t>(j)]), codomain);
    return out;
}

Eigen::MatrixXcd compress_serial(const LaurentPolynomial& symbol, std::span<const LaurentPolynomial> domain,
                                 std::span<const LaurentPolynomial> codomain, Window window) {
    const Extent e = extent(domain, codomain, window);
    Eigen::MatrixXcd out(e.rows, e.cols);
    for (Eigen::Index j = 0; j < e.cols; ++j)
        fill_column(out, j, multiply(symbol, domain[static_cast<std::size_t>(j)]), codomain);
    return out;
}

Eigen::MatrixXcd gram_matrix(std::span<const LaurentPolynomial> columns, std::span<const LaurentPolynomial> rows) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(columns.size()));
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < out.cols(); ++j) fill_column(out, j, columns[static_cast<std::size_t>(j)], rows);
    return out;
}

}  // namespace msolab
