// Copyright 2026 the autoeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "autoeval/cli.hpp"

using namespace autoeval;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"autoeval"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/autoeval_test_") + name;
}

}  // namespace

TEST_CASE("verify agrees with Horner across methods") {
    RunResult r = run_cli({"verify", "--field", "p=3,m=5", "--degrees", "0,1,9,10,100",
                           "--trials", "5", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all methods agree with Horner"));
    CHECK(contains(r.out, "method m1:"));
    CHECK(contains(r.out, "method m2:"));
    CHECK(contains(r.out, "method best:"));
}

TEST_CASE("verify handles subfield coefficients") {
    RunResult r = run_cli({"verify", "--field", "p=2,m=8", "--subfield", "4", "--degrees",
                           "10,254", "--trials", "4", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "method ext_basis:"));
    CHECK(contains(r.out, "method ext_m2:"));
}

TEST_CASE("verify with zero trials warns and passes vacuously") {
    RunResult r = run_cli({"verify", "--field", "p=2,m=8", "--degrees", "10",
                           "--trials", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "warning"));
}

TEST_CASE("malformed requests exit with usage errors") {
    CHECK(run_cli({"verify", "--field", "p=4,m=2", "--degrees", "5"}).code == 2);
    CHECK(run_cli({"verify", "--field", "p=3,m=5", "--degrees", "5",
                   "--methods", "fourier"}).code == 2);
    CHECK(run_cli({"verify", "--field", "p=2,m=8", "--subfield", "4", "--degrees", "5",
                   "--methods", "m1"}).code == 2);
    CHECK(run_cli({"verify", "--field", "p=2,m=8", "--subfield", "3", "--degrees", "5"}).code == 2);
    CHECK(run_cli({"rs", "worstcase", "--words", "0"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
}

TEST_CASE("help prints subcommands and exits cleanly") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verify"));
    CHECK(contains(r.out, "bench"));
    CHECK(contains(r.out, "rs"));
}

TEST_CASE("bench emits the documented rows deterministically") {
    std::vector<std::string> args{"bench", "--field", "p=3,m=5", "--degrees", "10",
                                  "--methods", "m1", "--seed", "3"};
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "p,s,m,n,method,L,predicted_mul,measured_mul,measured_add,horner_mul,wall_ns"));
    // The depth-1 decomposition of a degree-10 polynomial over F_3 costs 9.
    CHECK(contains(a.out, "3,1,5,10,m1,1,9,"));

    RunResult c = run_cli({"bench", "--field", "p=2,m=8", "--degrees", "255",
                           "--methods", "m1,m2", "--seed", "5"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "2,1,8,255,m1,4,33,"));
    CHECK(contains(c.out, "2,1,8,255,m2,3,51,"));
}

TEST_CASE("bench respects the thread budget without changing output") {
    std::vector<std::string> args{"bench", "--field", "p=2,m=8", "--degrees", "63,255",
                                  "--methods", "m1,m2,best", "--seed", "11"};
    RunResult single = run_cli(args);
    REQUIRE(setenv("AUTOEVAL_THREADS", "4", 1) == 0);
    RunResult quad = run_cli(args);
    REQUIRE(unsetenv("AUTOEVAL_THREADS") == 0);
    CHECK(single.code == 0);
    CHECK(quad.code == 0);
    CHECK(single.out == quad.out);
}

TEST_CASE("bench writes CSV to a file") {
    std::string path = temp_path("bench.csv");
    RunResult r = run_cli({"bench", "--field", "p=3,m=5", "--degrees", "10,27",
                           "--methods", "horner,m1", "--seed", "1", "--out", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "wrote"));
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,s,m,n,method,L,predicted_mul,measured_mul,measured_add,horner_mul,wall_ns");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 4);
    std::remove(path.c_str());
}

TEST_CASE("bench evaluates a polynomial loaded from a file") {
    FieldContext F = FieldContext::from_spec("p=2,m=8");
    SplitMix64 rng(19);
    DensePoly P = sample_poly(F, rng, 100, 4);
    std::string path = temp_path("poly.txt");
    {
        std::ofstream os(path);
        write_poly(os, P);
    }
    RunResult r = run_cli({"bench", "--poly", path, "--methods", "ext_basis,ext_m2,best",
                           "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "2,4,8,100,ext_basis,"));
    std::remove(path.c_str());
}

TEST_CASE("rs worstcase reproduces the headline comparison") {
    RunResult r = run_cli({"rs", "worstcase"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "stage,muls,adds"));
    CHECK(contains(r.out, "6735 vs 8159"));
    CHECK(contains(r.out, "automorphic 3823+2912*K"));
    CHECK(contains(r.out, "horner 31+8128*K"));
}

TEST_CASE("rs random and codeword demos verify cleanly") {
    RunResult r = run_cli({"rs", "random", "--words", "2", "--seed", "6"});
    CHECK(r.code == 0);
    RunResult c = run_cli({"rs", "codeword", "--words", "2", "--seed", "6"});
    CHECK(c.code == 0);
}

TEST_CASE("rs writes word and syndrome files") {
    std::string wpath = temp_path("word.txt");
    std::string spath = temp_path("synd.txt");
    RunResult r = run_cli({"rs", "worstcase", "--word", wpath, "--syndromes", spath});
    CHECK(r.code == 0);

    std::ifstream win(wpath);
    REQUIRE(win.good());
    int lines = 0;
    for (std::string line; std::getline(win, line);) {
        if (!line.empty()) ++lines;
    }
    CHECK(lines == 255);

    std::ifstream sin(spath);
    REQUIRE(sin.good());
    std::string first;
    std::getline(sin, first);
    CHECK(contains(first, "S1="));
    std::remove(wpath.c_str());
    std::remove(spath.c_str());
}
