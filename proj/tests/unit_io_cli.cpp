#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "modlie/modlie.hpp"

using namespace modlie;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(MODLIE_CLI) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    const int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("modlie_test_" + name)).string(); }

}  // namespace

// ---- JSON formats ----

TEST(Json, AlgebraRoundTrip) {
    auto W = witt_algebra(3, 2);
    Envelope E = restricted_zassenhaus(W);
    for (const auto& L : {W, E.env, borel_algebra(W)}) {
        Json j = algebra_to_json(*L);
        auto back = algebra_from_json(j);
        EXPECT_EQ(algebra_to_json(*back), j);
        EXPECT_EQ(back->pmap().has_value(), L->pmap().has_value());
    }
    Json j = algebra_to_json(*E.env);
    EXPECT_EQ(j["dim"], 10);
    EXPECT_TRUE(j.contains("pmap"));
    EXPECT_TRUE(j.contains("provenance"));
}

TEST(Json, AlgebraRejectsBadInput) {
    Json j = algebra_to_json(*witt_algebra(3, 1));
    Json bad = j;
    bad["p"] = 4;
    EXPECT_THROW(algebra_from_json(bad), InvalidArgument);
    bad = j;
    bad.erase("brackets");
    EXPECT_THROW(algebra_from_json(bad), InvalidArgument);
    // flipping one structure constant breaks Jacobi
    bad = j;
    bad["brackets"][0]["coeffs"][0][1] = 2;
    bad["brackets"].push_back({{"i", 0}, {"j", 2}, {"coeffs", Json::array({Json::array({1, 1})})}});
    EXPECT_THROW(algebra_from_json(bad), InvalidArgument);
}

TEST(Json, ModuleRoundTrip) {
    auto W = witt_algebra(5, 1);
    Module V = verma(W, 2);
    Json j = module_to_json(V, algebra_to_json(*W));
    Module back = module_from_json(j, W);
    EXPECT_EQ(back.actions(), V.actions());
    Json bad = j;
    bad["action"][0][0] = 1;
    EXPECT_THROW(module_from_json(bad, W), InvalidArgument);
    bad = j;
    bad["dim"] = 4;
    EXPECT_THROW(module_from_json(bad, W), InvalidArgument);
}

TEST(Json, ResultShape) {
    CohomologyResult r{{0, 1}, {0, 2}};
    Json j = result_to_json("witt:3,1", "verma:2", r, 2);
    EXPECT_EQ(j["dims"], Json::array({0, 2}));
    EXPECT_EQ(j["restricted_h1"], 2);
}

TEST(Specs, Parsing) {
    auto h = parse_algebra_spec("envelope:3,2");
    EXPECT_EQ(h.alg->dim(), 10u);
    EXPECT_EQ(parse_module_spec(h, "verma:1").dim(), 9u);
    EXPECT_EQ(parse_module_spec(h, "simple:2").dim(), 8u);
    EXPECT_EQ(parse_module_spec(h, "adjoint").dim(), 10u);
    EXPECT_EQ(parse_module_spec(h, "dual:dpow:1").dim(), 9u);
    SpecDefaults d{5, 1, 3, std::nullopt};
    auto w = parse_algebra_spec("witt", d);
    EXPECT_EQ(w.alg->dim(), 5u);
    EXPECT_EQ(parse_module_spec(w, "verma", d).action(zidx(0))(0, 0), 3u);
    EXPECT_THROW(parse_algebra_spec("witt:4,1"), InvalidArgument);
    EXPECT_THROW(parse_algebra_spec("witt:3"), InvalidArgument);
    EXPECT_THROW(parse_algebra_spec("witt:3,x"), InvalidArgument);
    EXPECT_THROW(parse_module_spec(w, "weight:1"), InvalidArgument);
    EXPECT_THROW(parse_module_spec(parse_algebra_spec("borel:3,1"), "verma:1"), InvalidArgument);
    EXPECT_THROW(parse_algebra_spec("/nonexistent/alg.json"), InvalidArgument);
}

// ---- check registry ----

TEST(Checks, RegistryAndApplicability) {
    auto names = check_names();
    EXPECT_EQ(names.size(), 30u);
    EXPECT_THROW(run_check("no-such-check", 3, 1, 1), InvalidArgument);
    EXPECT_THROW(run_check("1cohzas", 2, 1, 1), InvalidArgument);
    VerifyOptions opt;
    opt.timing = false;
    auto rep = run_check("1cohzas", 3, 2, 1, opt);
    EXPECT_TRUE(rep.pass);
    ASSERT_EQ(rep.cases.size(), 3u);
    EXPECT_EQ(rep.cases[0].computed["dim"], 1);
    EXPECT_EQ(rep.cases[1].computed["dim"], 1);
    EXPECT_EQ(rep.cases[2].computed["dim"], 2);
    EXPECT_EQ(rep.to_json()["ms"], 0);
    auto h2 = run_check("2cohreszas", 5, 2, 1, opt);
    EXPECT_TRUE(h2.pass);
    EXPECT_EQ(h2.cases.front().expected["dim"], 1);
}

TEST(Checks, CharacteristicTwoRunsOnlyItsChecks) {
    auto reps = run_all(2, 1, 1);
    std::vector<std::string> ran;
    for (const auto& r : reps) {
        ran.push_back(r.check);
        EXPECT_TRUE(r.pass) << r.check;
    }
    EXPECT_EQ(ran, (std::vector<std::string>{"simplicity", "2cohzas"}));
}

TEST(Checks, RunAllAtSmallestOddCase) {
    for (const auto& r : run_all(3, 1, 1)) {
        EXPECT_TRUE(r.pass) << r.check << "\n" << r.to_json().dump(1);
        for (const auto& c : r.cases) {
            EXPECT_FALSE(c.cite.empty());
            EXPECT_EQ(c.pass, c.expected == c.computed);
        }
    }
}

// ---- command line ----

TEST(Cli, AlgebraCommand) {
    const std::string path = temp_path("w32.json");
    auto r = run_cli("algebra witt:3,2 --out " + path);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(read_json_file(path)["dim"], 9);
    r = run_cli("algebra envelope:3,2");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["dim"], 10);
    EXPECT_TRUE(j.contains("pmap") && j.contains("provenance"));
    EXPECT_EQ(run_cli("algebra witt:4,1").code, 2);
    EXPECT_EQ(run_cli("nonsense").code, 2);
}

TEST(Cli, CohomologyCommand) {
    auto r = run_cli("cohomology witt:3,1 verma:2 --max-degree 2");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(Json::parse(r.out)["dims"], Json::array({1, 2, 1}));
    r = run_cli("cohomology envelope:3,1 verma:2 --max-degree 1");
    EXPECT_EQ(Json::parse(r.out)["dims"][1], 2);
    r = run_cli("cohomology witt:5,1 trivial --max-degree 2 --format table");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2       1"), std::string::npos) << r.out;
    r = run_cli("cohomology witt:7,2 verma:1 --max-degree 2");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("limit"), std::string::npos);
    // a file produced by the module command reads back
    const std::string alg = temp_path("e31.json"), mod = temp_path("v31.json");
    ASSERT_EQ(run_cli("algebra envelope:3,2 --out " + alg).code, 0);
    ASSERT_EQ(run_cli("module " + alg + " trivial --out " + mod).code, 0);
    r = run_cli("cohomology " + alg + " " + mod + " --max-degree 1");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(Json::parse(r.out)["dims"], Json::array({1, 1}));
}

TEST(Cli, VerifyAndModuleCommands) {
    auto r = run_cli("verify --check 1cohzas --p 3 --m 2 --no-timing");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("\"pass\": true"), std::string::npos);
    EXPECT_EQ(run_cli("verify --check 1cohzas --p 11 --m 2").code, 2);
    EXPECT_EQ(run_cli("verify --check bogus --p 3 --m 1").code, 2);
    r = run_cli("restricted-h1 envelope:3,2 verma:1");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(Json::parse(r.out)["restricted_h1"], 1);
    r = run_cli("composition-series witt:3,1 verma:0");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("2"), std::string::npos);
    r = run_cli("isomorphic witt:5,1 adjoint verma:3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["isomorphic"], "true");
    r = run_cli("isomorphic witt:5,1 adjoint verma:2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["isomorphic"], "false");
}
