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

// msolab command-line interface.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "msolab/characterize.hpp"
#include "msolab/error.hpp"
#include "msolab/json_io.hpp"
#include "msolab/operators.hpp"
#include "msolab/suites.hpp"

namespace {

using msolab::InputError;
using msolab::json_io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string theta;
    std::string alpha;
    std::string symbol;
    std::optional<int> depth;
    std::optional<double> tol;
    std::uint64_t seed = msolab::kDefaultSeed;
    std::string out;
    std::string method = "boundary";
    std::string kind;
    std::string input;
    std::vector<std::string> checks;
    std::string suite;
    int cases = 50;
    bool allow_high_modulus = false;
};

void emit(const Json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << text;
}

// Operator JSON: inline text, @file, "-" for stdin, or a plain file path.
Json read_input(const std::string& input) {
    if (input.empty()) throw InputError("an operator JSON input is required");
    if (input == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return msolab::json_io::parse_argument(text);
    }
    const char first = input.front();
    if (first == '{' || first == '@') return msolab::json_io::parse_argument(input);
    return msolab::json_io::parse_argument("@" + input);
}

msolab::BlaschkeProduct require_blaschke(const std::string& text, const char* flag, const Options& o) {
    if (text.empty()) throw InputError(std::string("missing ") + flag);
    msolab::BlaschkeOptions opt;
    opt.allow_high_modulus = o.allow_high_modulus;
    return msolab::json_io::parse_blaschke(text, opt);
}

void validate_tolerance(const Options& o) {
    if (o.tol && !(*o.tol > 0.0)) throw InputError("--tol must be positive");
}

int cmd_build(const Options& o) {
    validate_tolerance(o);
    const auto theta = require_blaschke(o.theta, "--theta", o);
    const auto alpha = require_blaschke(o.alpha, "--alpha", o);
    if (o.symbol.empty()) throw InputError("missing --symbol");
    const msolab::SymbolFunction phi(msolab::json_io::parse_laurent(o.symbol));
    if (o.kind == "tto") {
        emit(msolab::json_io::tto_to_json(msolab::build_tto(theta, alpha, phi), theta, alpha), o.out);
        return kExitPass;
    }
    const int depth = o.depth.value_or(msolab::minimum_depth(theta, alpha, phi.degree()));
    emit(msolab::json_io::to_json(msolab::build_dtto(theta, alpha, phi, depth)), o.out);
    return kExitPass;
}

// TTO payloads carry theta, alpha and the matrix in Takenaka-Malmquist bases.
int check_tto(const Json& j, const Options& o) {
    for (const auto& c : o.checks)
        if (c != "shift") throw InputError("check \"" + c + "\" needs a dtto operator");
    const auto theta = msolab::json_io::blaschke_from_json(j.at("theta"));
    const auto alpha = msolab::json_io::blaschke_from_json(j.at("alpha"));
    const Eigen::MatrixXcd m = msolab::json_io::matrix_from_json(j.at("matrix"));
    const auto dom = msolab::tm_basis(theta);
    const auto cod = msolab::tm_basis(alpha);
    if (m.rows() != static_cast<Eigen::Index>(cod.vectors.size()) ||
        m.cols() != static_cast<Eigen::Index>(dom.vectors.size()))
        throw InputError("tto matrix must be deg(alpha) x deg(theta)");
    const double tol = o.tol.value_or(msolab::default_tolerance(theta, alpha));
    const auto rep = msolab::shift_invariance_defect(m, dom, cod, tol);
    emit(Json{{"pass", rep.pass}, {"reports", Json::array({msolab::json_io::to_json(rep)})}}, o.out);
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_check(const Options& o) {
    validate_tolerance(o);
    const Json j = read_input(o.input);
    if (j.is_object() && j.value("kind", "") == "tto") return check_tto(j, o);
    const msolab::BlockOperator d = msolab::json_io::block_operator_from_json(j);
    const double tol = o.tol.value_or(msolab::default_tolerance(d.theta(), d.alpha()));
    const std::vector<std::string> checks = o.checks.empty() ? std::vector<std::string>{"adtto"} : o.checks;

    std::vector<msolab::DefectReport> reports;
    for (const auto& c : checks) {
        if (c == "shift") {
            reports.push_back(msolab::shift_invariance_defect(d.assemble(), d.domain_basis(), d.codomain_basis(), tol));
        } else if (c == "blocks") {
            for (auto& r : msolab::check_block_conditions(d, tol)) reports.push_back(std::move(r));
        } else if (c == "adtto") {
            for (auto& r : msolab::check_adtto(d, tol).reports) reports.push_back(std::move(r));
        } else if (c == "analytic") {
            reports.push_back(msolab::is_analytic_adtto(d, o.tol.value_or(1e-11)).report);
        } else {
            throw InputError("unknown check \"" + c + "\" (expected shift, blocks, adtto or analytic)");
        }
    }
    bool pass = true;
    Json out = Json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        out.push_back(msolab::json_io::to_json(r));
    }
    emit(Json{{"pass", pass}, {"reports", out}}, o.out);
    return pass ? kExitPass : kExitFail;
}

int cmd_recover(const Options& o) {
    validate_tolerance(o);
    const msolab::BlockOperator d = msolab::json_io::block_operator_from_json(read_input(o.input));
    const auto method = o.method == "zbar" ? msolab::RecoveryMethod::Zbar : msolab::RecoveryMethod::Boundary;
    const msolab::Recovery r = msolab::recover_symbol(d, method);
    const double tol = o.tol.value_or(msolab::default_tolerance(d.theta(), d.alpha()));
    Json out = msolab::json_io::to_json(r.symbol.value);
    out["method"] = o.method;
    out["residual"] = r.residual;
    out["tolerance"] = tol;
    emit(out, o.out);
    return r.residual <= tol ? kExitPass : kExitFail;
}

int cmd_suite(const Options& o) {
    validate_tolerance(o);
    msolab::SuiteConfig cfg;
    msolab::BlaschkeOptions opt;
    opt.allow_high_modulus = o.allow_high_modulus;
    if (!o.theta.empty()) cfg.theta = msolab::json_io::parse_blaschke(o.theta, opt);
    if (!o.alpha.empty()) cfg.alpha = msolab::json_io::parse_blaschke(o.alpha, opt);
    if (!o.symbol.empty()) cfg.symbol = msolab::json_io::parse_laurent(o.symbol);
    cfg.depth = o.depth;
    cfg.tolerance = o.tol;
    cfg.seed = o.seed;
    cfg.cases = o.cases;

    msolab::SuiteReport rep;
    if (o.suite == "acceptance") rep = msolab::run_acceptance(cfg);
    else if (o.suite == "fuzz") rep = msolab::run_fuzz(cfg);
    else if (o.suite == "convergence") rep = msolab::run_convergence(cfg);
    else throw InputError("unknown suite \"" + o.suite + "\" (expected acceptance, fuzz or convergence)");

    for (const auto& c : rep.criteria) {
        std::fprintf(stderr, "[%s] %2d %-4s %7.2fs  %s\n", rep.name.c_str(), c.id, c.pass ? "PASS" : "FAIL", c.seconds,
                     c.title.c_str());
    }
    emit(msolab::to_json(rep), o.out);
    return rep.pass ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, Options& o, bool operators) {
    if (operators) {
        app->add_option("--theta", o.theta, "domain inner function: \"z^m\", JSON, or @file");
        app->add_option("--alpha", o.alpha, "codomain inner function: \"z^m\", JSON, or @file");
        app->add_option("--symbol", o.symbol, "symbol as {\"coeffs\": [[k, re, im], ...]} or @file");
        app->add_option("--M", o.depth, "truncation depth");
        app->add_flag("--allow-high-modulus", o.allow_high_modulus, "accept zeros with modulus above 0.95");
    }
    app->add_option("--tol", o.tol, "defect tolerance");
    app->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"msolab: truncated and dual truncated Toeplitz operator laboratory"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "build a TTO or DTTO and write its JSON");
    build->add_option("kind", o.kind, "tto or dtto")->required()->check(CLI::IsMember({"tto", "dtto"}));
    add_common(build, o, true);

    auto* check = app.add_subcommand("check", "run membership checks on an operator JSON");
    check->add_option("input", o.input, "operator JSON: inline, @file, file path, or - for stdin")->required();
    check->add_option("--checks", o.checks, "any of shift, blocks, adtto, analytic")->delimiter(',');
    add_common(check, o, false);

    auto* recover = app.add_subcommand("recover", "recover the symbol of a DTTO");
    recover->add_option("input", o.input, "operator JSON: inline, @file, file path, or - for stdin")->required();
    recover->add_option("--method", o.method, "boundary or zbar")->check(CLI::IsMember({"boundary", "zbar"}));
    add_common(recover, o, false);

    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", o.suite, "acceptance, fuzz or convergence")->required();
    suite->add_option("--seed", o.seed, "seed for the random families");
    suite->add_option("--cases", o.cases, "case count for the fuzz suite");
    add_common(suite, o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (*build) return cmd_build(o);
        if (*check) return cmd_check(o);
        if (*recover) return cmd_recover(o);
        return cmd_suite(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
