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

#include <string>

#include <json.hpp>

#include "msolab/annihilate.hpp"
#include "msolab/characterize.hpp"
#include "msolab/inner.hpp"
#include "msolab/laurent.hpp"
#include "msolab/operators.hpp"

namespace msolab::json_io {

using Json = nlohmann::json;

/// {"coeffs": [[k, re, im], ...]}, ascending k, zero coefficients omitted.
Json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"zeros": [[re, im], ...], "constant": [re, im]}.
Json to_json(const BlaschkeProduct& b);
/// Accepts the object form or the string shorthand "z" / "z^m".
BlaschkeProduct blaschke_from_json(const Json& j, BlaschkeOptions options = {});

/// {"kind": "dtto", "theta", "alpha", "M", "symbol_degree", "blocks": {...}}.
Json to_json(const BlockOperator& d);
BlockOperator block_operator_from_json(const Json& j);

/// {"kind": "tto", "theta", "alpha", "domain", "codomain", "matrix"}.
Json tto_to_json(const DenseComplexMatrix& a, const BlaschkeProduct& theta, const BlaschkeProduct& alpha);

Json to_json(const DefectReport& r);
Json to_json(const FiniteRankOperator& t);
FiniteRankOperator finite_rank_from_json(const Json& j);

/// Complex matrices as row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

/// Parses inline JSON text, or reads it from a file when `text` is "@path".
/// Malformed input raises InputError.
Json parse_argument(const std::string& text);

/// Inline/@file JSON or the "z^m" shorthand.
BlaschkeProduct parse_blaschke(const std::string& text, BlaschkeOptions options = {});
LaurentPolynomial parse_laurent(const std::string& text);

}  // namespace msolab::json_io
