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

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "msolab/laurent.hpp"

namespace msolab {

/// Leading rows/columns to compute; unset means all.
struct Window {
    std::optional<Eigen::Index> rows;
    std::optional<Eigen::Index> cols;
};

/**
 * Compression of M_symbol between two orthonormal families:
 *   out(i, j) = <symbol * domain[j], codomain[i]>.
 *
 * Columns are independent and are distributed over OpenMP threads.
 */
Eigen::MatrixXcd compress(const LaurentPolynomial& symbol, std::span<const LaurentPolynomial> domain,
                          std::span<const LaurentPolynomial> codomain, Window window = {});

/// Single-threaded reference for compress(); kept for tests and benchmarks.
Eigen::MatrixXcd compress_serial(const LaurentPolynomial& symbol, std::span<const LaurentPolynomial> domain,
                                 std::span<const LaurentPolynomial> codomain, Window window = {});

/// out(i, j) = <columns[j], rows[i]>.
Eigen::MatrixXcd gram_matrix(std::span<const LaurentPolynomial> columns, std::span<const LaurentPolynomial> rows);

}  // namespace msolab
