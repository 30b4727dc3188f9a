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

#include "msolab/json_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "msolab/error.hpp"

namespace msolab::json_io {
namespace {

Json complex_to_json(Scalar c) { return Json::array({c.real(), c.imag()}); }

Scalar complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("complex numbers are encoded as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Json to_json(const LaurentPolynomial& f) {
    Json coeffs = Json::array();
    for (int k = f.lo(); k <= f.hi(); ++k) {
        const Scalar c = f.coeff(k);
        if (c != Scalar(0.0)) coeffs.push_back(Json::array({k, c.real(), c.imag()}));
    }
    return Json{{"coeffs", coeffs}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array of [k, re, im]");
    std::vector<std::pair<int, Scalar>> terms;
    for (const auto& t : coeffs) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() || !t[2].is_number())
            throw InputError("each coefficient must be [k, re, im] with integer k");
        terms.emplace_back(t[0].get<int>(), Scalar(t[1].get<double>(), t[2].get<double>()));
    }
    return LaurentPolynomial::from_terms(terms);
}

Json to_json(const BlaschkeProduct& b) {
    Json zeros = Json::array();
    for (const Scalar a : b.zeros()) zeros.push_back(complex_to_json(a));
    return Json{{"zeros", zeros}, {"constant", complex_to_json(b.constant())}};
}

BlaschkeProduct blaschke_from_json(const Json& j, BlaschkeOptions options) {
    if (j.is_string()) {
        static const std::regex shorthand(R"(\s*z(\^(\d+))?\s*)");
        std::smatch m;
        const std::string s = j.get<std::string>();
        if (!std::regex_match(s, m, shorthand)) throw InputError("inner function shorthand must be \"z\" or \"z^m\"");
        const int deg = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (deg == 0) throw InputError("constant inner function: z^0 has no zeros");
        return BlaschkeProduct::monomial(deg);
    }
    const Json& zeros = field(j, "zeros");
    if (!zeros.is_array()) throw InputError("\"zeros\" must be an array of [re, im]");
    std::vector<Scalar> z;
    for (const auto& a : zeros) z.push_back(complex_from_json(a));
    const Scalar c = j.contains("constant") ? complex_from_json(j.at("constant")) : Scalar(1.0);
    if (j.contains("allow_high_modulus")) options.allow_high_modulus = j.at("allow_high_modulus").get<bool>();
    return BlaschkeProduct(std::move(z), c, options);
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrices are arrays of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw InputError("matrix rows must all have the same length");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json to_json(const BlockOperator& d) {
    return Json{{"kind", "dtto"},
                {"theta", to_json(d.theta())},
                {"alpha", to_json(d.alpha())},
                {"M", d.depth()},
                {"symbol_degree", d.symbol_degree()},
                {"domain", d.domain_basis().label()},
                {"codomain", d.codomain_basis().label()},
                {"blocks",
                 {{"That", matrix_to_json(d.That)},
                  {"GammaCheck", matrix_to_json(d.GammaCheck)},
                  {"GammaHat", matrix_to_json(d.GammaHat)},
                  {"TCheck", matrix_to_json(d.TCheck)}}}};
}

BlockOperator block_operator_from_json(const Json& j) {
    const Json& m = field(j, "M");
    if (!m.is_number_integer()) throw InputError("\"M\" must be an integer");
    const int sd = j.contains("symbol_degree") ? j.at("symbol_degree").get<int>() : 0;
    BlockOperator d(blaschke_from_json(field(j, "theta")), blaschke_from_json(field(j, "alpha")), m.get<int>(), sd);
    const Json& blocks = field(j, "blocks");
    d.That = matrix_from_json(field(blocks, "That"));
    d.GammaCheck = matrix_from_json(field(blocks, "GammaCheck"));
    d.GammaHat = matrix_from_json(field(blocks, "GammaHat"));
    d.TCheck = matrix_from_json(field(blocks, "TCheck"));
    const Eigen::Index n = d.block_size();
    for (const auto* b : {&d.That, &d.GammaCheck, &d.GammaHat, &d.TCheck})
        if (b->rows() != n || b->cols() != n)
            throw InputError("every block must be (M+1) x (M+1) = " + std::to_string(n) + "x" + std::to_string(n));
    return d;
}

Json tto_to_json(const DenseComplexMatrix& a, const BlaschkeProduct& theta, const BlaschkeProduct& alpha) {
    return Json{{"kind", "tto"},
                {"theta", to_json(theta)},
                {"alpha", to_json(alpha)},
                {"domain", a.domain->label()},
                {"codomain", a.codomain->label()},
                {"matrix", matrix_to_json(a.entries)}};
}

Json to_json(const DefectReport& r) {
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(Json{{"where", x.where}, {"deviation", x.deviation}});
    return Json{{"condition", r.condition},
                {"defect", r.defect},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"witnesses", w}};
}

Json to_json(const FiniteRankOperator& t) {
    Json dyads = Json::array();
    for (const auto& d : t.dyads) dyads.push_back(Json{{"f", to_json(d.f)}, {"g", to_json(d.g)}});
    return Json{{"dyads", dyads}};
}

FiniteRankOperator finite_rank_from_json(const Json& j) {
    const Json& dyads = field(j, "dyads");
    if (!dyads.is_array()) throw InputError("\"dyads\" must be an array");
    FiniteRankOperator t;
    for (const auto& d : dyads) t.dyads.push_back({laurent_from_json(field(d, "f")), laurent_from_json(field(d, "g"))});
    return t;
}

Json parse_argument(const std::string& text) {
    const std::string body = (!text.empty() && text[0] == '@') ? read_file(text.substr(1)) : text;
    try {
        return Json::parse(body);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

BlaschkeProduct parse_blaschke(const std::string& text, BlaschkeOptions options) {
    if (!text.empty() && text[0] != '{' && text[0] != '@' && text[0] != '"')
        return blaschke_from_json(Json(text), options);
    return blaschke_from_json(parse_argument(text), options);
}

LaurentPolynomial parse_laurent(const std::string& text) {
    try {
        return laurent_from_json(parse_argument(text));
    } catch (const Json::exception& e) {
        throw InputError(std::string("invalid symbol: ") + e.what());
    }
}

}  // namespace msolab::json_io
