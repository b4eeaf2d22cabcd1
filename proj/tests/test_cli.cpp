/* Copyright 2026 The cocycle-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cocycle_forge/algebra_io.hpp"
#include "cocycle_forge/cli.hpp"
#include "json.hpp"

using namespace cforge;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COCYCLE_FORGE_TEST_DATA) + "/" + name; }

// Unsets the degree override for the duration of a test.
struct DegreeEnv {
    explicit DegreeEnv(const char* value = nullptr) {
        if (value) setenv("COCYCLE_FORGE_MAX_DEGREE", value, 1);
        else unsetenv("COCYCLE_FORGE_MAX_DEGREE");
    }
    ~DegreeEnv() { unsetenv("COCYCLE_FORGE_MAX_DEGREE"); }
};

}  // namespace

TEST(Cli, LiftExamples) {
    EXPECT_EQ(run({"lift", "--builtin", "sl2", "--cocycle", "cartan", "--x", "X Y", "--g1", "X", "--g2", "Y"}).out, "4/3\n");
    EXPECT_EQ(run({"lift", "--builtin", "sl2", "--x", "1", "--g1", "X", "--g2", "Y"}).out, "0\n");
    EXPECT_EQ(run({"lift", "--builtin", "sl2", "--x", "H", "--g1", "X", "--g2", "Y"}).out, "8/3\n");
    EXPECT_EQ(run({"lift", "--builtin", "sl2", "--x", "Y X", "--g1", "X", "--g2", "Y"}).out, "-4/3\n");
    EXPECT_EQ(run({"lift", "--algebra", data("sl2.json"), "--x", "X Y", "--g1", "X", "--g2", "Y"}).out, "4/3\n");
}

TEST(Cli, LiftErrors) {
    CliResult r = run({"lift", "--builtin", "sl2", "--x", "X", "--g1", "Q", "--g2", "Y"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown basis name 'Q'"), std::string::npos);
    r = run({"lift", "--builtin", "heisenberg3", "--cocycle", data("unordered_cocycle.json"), "--x", "x", "--g1", "x", "--g2", "y"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("strictly increasing"), std::string::npos);
    r = run({"lift", "--builtin", "sl2", "--x", "X^", "--g1", "X", "--g2", "Y"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(run({"lift", "--builtin", "sl2", "--g1", "X", "--g2", "Y"}).code, 2);
    EXPECT_EQ(run({"lift", "--builtin", "nope", "--x", "X", "--g1", "X", "--g2", "Y"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, LiftWithCocycleFile) {
    const CliResult r = run({"lift", "--algebra", data("heisenberg.json"), "--cocycle", data("volume_cocycle.json"), "--x", "z",
                       "--g1", "x", "--g2", "y"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1/3\n");
}

TEST(Cli, TableExamples) {
    DegreeEnv env;
    CliResult r = run({"table", "--builtin", "sl2", "--pairs", "XY", "--max-degree", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "a\tb\tc\tvalue\n1\t0\t0\t0\n0\t1\t0\t0\n0\t0\t1\t8/3\n2\t0\t0\t0\n1\t1\t0\t4/3\n1\t0\t1\t0\n"
              "0\t2\t0\t0\n0\t1\t1\t0\n0\t0\t2\t0\n# vanishing XY: ok (9 rows)\n");

    r = run({"table", "--builtin", "sl2", "--pairs", "XY", "--max-degree", "0"});
    EXPECT_EQ(r.out, "a\tb\tc\tvalue\n# vanishing XY: ok (0 rows)\n");

    r = run({"table", "--builtin", "sl2", "--pairs", "YH", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int nonzero = 0;
    while (std::getline(lines, line) && line[0] != '#') {
        int a, b, c;
        std::string value;
        std::istringstream(line) >> a >> b >> c >> value;
        if (value != "0") {
            ++nonzero;
            EXPECT_EQ(a, b + 1) << line;
        }
    }
    EXPECT_GT(nonzero, 0);

    r = run({"table", "--builtin", "sl2", "--pairs", "XQ"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown pair"), std::string::npos);
}

TEST(Cli, TableJsonAndGeneralPairs) {
    DegreeEnv env;
    CliResult r = run({"table", "--builtin", "sl2", "--pairs", "XY,XH", "--max-degree", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["tables"].size(), 2u);
    EXPECT_EQ(doc["tables"][0]["pair"], "XY");
    EXPECT_EQ(doc["tables"][0]["entries"][4]["value"], "4/3");
    EXPECT_EQ(doc["tables"][1]["vanishing_failures"], 0);

    r = run({"table", "--builtin", "heisenberg3", "--cocycle", data("volume_cocycle.json"), "--g1", "x", "--g2", "y",
             "--max-degree", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "monomial\tvalue\nx\t0\ny\t0\nz\t1/3\n");
    EXPECT_EQ(run({"table", "--builtin", "heisenberg3", "--pairs", "XY"}).code, 2);
}

TEST(Cli, DegreeEnvironmentOverride) {
    {
        DegreeEnv env("1");
        const CliResult r = run({"table", "--builtin", "sl2", "--pairs", "XY"});
        EXPECT_NE(r.out.find("(3 rows)"), std::string::npos);
        EXPECT_NE(run({"table", "--builtin", "sl2", "--pairs", "XY", "--max-degree", "2"}).out.find("(9 rows)"),
                  std::string::npos);
    }
    {
        DegreeEnv env;
        EXPECT_NE(run({"table", "--builtin", "sl2", "--pairs", "XY"}).out.find("(34 rows)"), std::string::npos);
    }
    DegreeEnv env("x");
    EXPECT_EQ(run({"table", "--builtin", "sl2", "--pairs", "XY"}).code, 2);
}

TEST(Cli, VerifyExamples) {
    DegreeEnv env;
    CliResult r = run({"verify", "--builtin", "sl2", "--suite", "all", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[]\n");
    EXPECT_NE(r.err.find("[quasi] condition c"), std::string::npos);

    r = run({"verify", "--builtin", "abelian2", "--suite", "lift", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[]\n");

    r = run({"verify", "--builtin", "sl2", "--suite", "compat", "--rmatrix-file", data("bad_r.json")});
    EXPECT_EQ(r.code, 1);
    const auto rows = nlohmann::json::parse(r.out);
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows[0]["condition"], "compat");
    EXPECT_EQ(rows[0]["generator"], "X,Y");

    r = run({"verify", "--builtin", "sl2", "--suite", "quasi", "--rmatrix-file", data("bad_r.json"), "--max-degree", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("compatibility condition violated"), std::string::npos);

    EXPECT_EQ(run({"verify", "--builtin", "sl2", "--suite", "everything"}).code, 2);
}

TEST(Cli, VerifyHeisenbergWithFiles) {
    DegreeEnv env;
    CliResult r = run({"verify", "--algebra", data("heisenberg.json"), "--cocycle", data("volume_cocycle.json"), "--rmatrix-file",
                 data("central_r.json"), "--suite", "all", "--max-degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[]\n");
    // the Killing form of a nilpotent algebra is zero, so there is no default r-matrix
    r = run({"verify", "--builtin", "heisenberg3", "--suite", "compat"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("degenerate"), std::string::npos);
}

TEST(Cli, ReportRowsHaveSortedKeys) {
    const CliResult r = run({"verify", "--builtin", "sl2", "--suite", "compat", "--rmatrix-file", data("bad_r.json")});
    const std::string head = r.out.substr(0, r.out.find('}'));
    const auto pos = [&](const char* key) { return head.find(std::string("\"") + key + "\""); };
    EXPECT_LT(pos("condition"), pos("generator"));
    EXPECT_LT(pos("generator"), pos("lhs"));
    EXPECT_LT(pos("lhs"), pos("monomial"));
    EXPECT_LT(pos("monomial"), pos("rhs"));
}

TEST(Cli, Determinism) {
    DegreeEnv env;
    const std::vector<std::string> args{"table", "--builtin", "sl2", "--max-degree", "3", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> bad{"verify", "--builtin", "sl2", "--suite", "compat", "--rmatrix-file", data("bad_r.json")};
    EXPECT_EQ(run(bad).out, run(bad).out);
}

TEST(Cli, Validate) {
    CliResult r = run({"validate", "--algebra", data("heisenberg.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["valid"].get<bool>());

    r = run({"validate", "--algebra", data("jacobi_broken.json")});
    EXPECT_EQ(r.code, 1);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["jacobi_violations"].size(), 1u);
    EXPECT_EQ(doc["jacobi_violations"][0]["i"], 0);
    EXPECT_EQ(doc["jacobi_violations"][0]["j"], 1);
    EXPECT_EQ(doc["jacobi_violations"][0]["k"], 2);

    r = run({"lift", "--algebra", data("jacobi_broken.json"), "--x", "x1", "--g1", "x1", "--g2", "x2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("(x1, x2, x3)"), std::string::npos);

    for (const char* bad : {"bad_index.json", "bad_rational.json", "malformed.json"}) {
        r = run({"validate", "--algebra", data(bad)});
        EXPECT_EQ(r.code, 2) << bad;
        EXPECT_NE(r.err.find("error:"), std::string::npos) << bad;
    }
    EXPECT_EQ(run({"validate", "--algebra", data("missing.json")}).code, 2);
    EXPECT_EQ(run({"validate", "--builtin", "sl2", "--algebra", data("sl2.json")}).code, 2);
}

TEST(Cli, KillingCartanRmatrix) {
    CliResult r = run({"killing", "--builtin", "sl2"});
    EXPECT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["matrix"][0][1], "4");
    EXPECT_EQ(doc["matrix"][2][2], "8");
    EXPECT_TRUE(doc["nondegenerate"].get<bool>());

    r = run({"cartan", "--builtin", "sl2"});
    doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["terms"].size(), 1u);
    EXPECT_EQ(doc["terms"][0]["c"], "8");

    r = run({"rmatrix", "--builtin", "sl2"});
    EXPECT_EQ(r.code, 0);
    const Tensor2 t = parse_rmatrix(r.out, 3);
    Tensor2 expected;
    expected.add_term({0, 1}, Rational(1, 4));
    expected.add_term({1, 0}, Rational(1, 4));
    expected.add_term({2, 2}, Rational(1, 8));
    EXPECT_EQ(t, expected);

    r = run({"rmatrix", "--builtin", "sl2", "--rmatrix-file", data("bad_r.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not invariant"), std::string::npos);
    EXPECT_EQ(run({"rmatrix", "--builtin", "abelian2", "--form", "identity"}).code, 0);
    EXPECT_EQ(run({"cartan", "--builtin", "sl2", "--form", "identity"}).code, 2);
}

TEST(AlgebraIo, RoundTrips) {
    const LieAlgebra L = builtin::sl2xsl2();
    EXPECT_EQ(parse_algebra(algebra_to_json(L)), L);
    const Cochain f = cartan_cocycle(L, killing_form(L));
    EXPECT_EQ(parse_cocycle(cocycle_to_json(f), 6), f);
    const Tensor2 r = standard_r_matrix(L, killing_form(L));
    EXPECT_EQ(parse_rmatrix(rmatrix_to_json(r), 6), r);
    EXPECT_EQ(report_to_json({}), "[]");
}

TEST(AlgebraIo, SchemaErrors) {
    EXPECT_THROW(parse_algebra_spec("{"), SchemaError);
    EXPECT_THROW(parse_algebra_spec(R"({"basis": ["a"]})"), SchemaError);
    EXPECT_THROW(parse_algebra_spec(R"({"name": "n", "basis": ["a", "a"]})"), SchemaError);
    EXPECT_THROW(parse_algebra_spec(R"({"name": "n", "basis": ["a", "b"], "brackets": [{"i": 1, "j": 0, "terms": []}]})"),
                 SchemaError);
    EXPECT_THROW(parse_cocycle(R"({"terms": [{"i": 0, "j": 1, "k": 5, "c": "1"}]})", 3), SchemaError);
    EXPECT_THROW(parse_rmatrix(R"({"terms": [{"i": 0, "j": 1, "c": 1.5}]})", 3), SchemaError);
    EXPECT_NO_THROW(parse_algebra_spec(R"({"name": "line", "basis": ["a"]})"));
}
