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

// Runs the msolab executable and checks exit codes and payloads.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef MSOLAB_CLI
#error "MSOLAB_CLI must point at the msolab executable"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Run {
    int code;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("msolab_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

Run run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = std::string(MSOLAB_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream s;
    s << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

const std::string kSymbol = R"('{"coeffs":[[-1,2,0],[1,1,0]]}')";

}  // namespace

TEST_CASE("cli build tto") {
    const Run r = run(R"(build tto --theta z^2 --alpha z^2 --symbol '{"coeffs":[[1,1,0]]}')");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("matrix") == Json::parse("[[[0.0,0.0],[0.0,0.0]],[[1.0,0.0],[0.0,0.0]]]"));
}

TEST_CASE("cli build dtto with phi = 1 gives identity blocks") {
    const Run r = run(R"(build dtto --theta z^2 --alpha z^2 --symbol '{"coeffs":[[0,1,0]]}' --M 6)");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    const Json& that = j.at("blocks").at("That");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k) CHECK(that[i][k][0].get<double>() == (i == k ? 1.0 : 0.0));
}

TEST_CASE("cli input errors exit with 2") {
    CHECK(run(R"(build dtto --theta '{"zeros":[[1.5,0]]}' --alpha z --symbol '{"coeffs":[[0,1,0]]}')").code == 2);
    CHECK(run(R"(build dtto --theta z^2 --alpha z^2 --symbol '{"coeffs":[[3,1,0]]}' --M 3)").code == 2);
    CHECK(run("build dtto --theta z^2 --alpha z^2 --symbol '{broken'").code == 2);
    CHECK(run("suite nope").code == 2);
    CHECK(run("check '{\"kind\":\"dtto\"}'").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("cli check and recover") {
    const std::string d = path("d.json");
    REQUIRE(run("build dtto --theta z^2 --alpha z^2 --M 10 --symbol " + kSymbol + " --out " + d).code == 0);

    const Run ok = run(d + " --checks adtto");
    CHECK(ok.code == 2);  // missing subcommand
    const Run check = run("check " + d + " --checks adtto");
    CHECK(check.code == 0);
    const Json reports = Json::parse(check.out).at("reports");
    CHECK(reports.size() == 4);
    for (const auto& rep : reports) CHECK(rep.at("defect").get<double>() <= 1e-10);

    CHECK(run("check " + d + " --checks shift,blocks,adtto").code == 0);
    CHECK(run("check " + d + " --checks analytic").code == 1);
    CHECK(run("check " + d + " --checks nonsense").code == 2);

    for (const char* m : {"boundary", "zbar"}) {
        const Run rec = run("recover " + d + " --method " + m);
        CHECK(rec.code == 0);
        const Json j = Json::parse(rec.out);
        CHECK(j.at("coeffs") == Json::parse("[[-1,2.0,0.0],[1,1.0,0.0]]"));
        CHECK(j.at("residual").get<double>() <= 1e-11);
    }
}

TEST_CASE("cli check detects theta (x) theta") {
    const std::string d = path("p.json");
    REQUIRE(run("build dtto --theta z^2 --alpha z^2 --M 10 --symbol " + kSymbol + " --out " + d).code == 0);
    std::ifstream in(d);
    Json j = Json::parse(in);
    j["blocks"]["That"][0][0][0] = j["blocks"]["That"][0][0][0].get<double>() + 1.0;
    std::ofstream(path("q.json")) << j.dump();
    const Run r = run("check " + path("q.json"));
    CHECK(r.code == 1);
    const Json rep = Json::parse(r.out).at("reports")[0];
    CHECK(rep.at("condition") == "th8.12-1");
    CHECK(rep.at("defect").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("cli recover on a non-member exits with 1") {
    const std::string d = path("r.json");
    REQUIRE(run("build dtto --theta z^2 --alpha z^2 --M 8 --symbol " + kSymbol + " --out " + d).code == 0);
    std::ifstream in(d);
    Json j = Json::parse(in);
    j["blocks"]["TCheck"][1][4][0] = 0.7;
    j["blocks"]["GammaHat"][2][2][1] = -0.4;
    std::ofstream(path("s.json")) << j.dump();
    const Run r = run("recover " + path("s.json"));
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out).at("residual").get<double>() > 0.1);
}

TEST_CASE("cli suite convergence and fuzz") {
    const Run c = run("suite convergence");
    CHECK(c.code == 0);
    const Json j = Json::parse(c.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("criteria")[0].at("details").at("sigma_max").size() == 5);

    const Run f1 = run("suite fuzz --cases 5 --seed 3");
    const Run f2 = run("suite fuzz --cases 5 --seed 3");
    CHECK(f1.code == 0);
    CHECK(f1.out == f2.out);
}
