#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "qfermat/census.hpp"
#include "qfermat/expr.hpp"

namespace qfermat {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string witness5() {
  static const std::string doc = print_params(*find_witness(5, {.cy = true, .generic = true}));
  return doc;
}

TEST(Cli, CheckCyOnTwist) {
  const auto r = run({"check-cy", "--params-json", R"({"n":5,"twist":[1,2,3,4,0]})", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["is_cy"].get<bool>());
  EXPECT_EQ(j["common_value"], 0);
  const auto text = run({"check-cy", "--params-json", R"({"n":5,"twist":[1,2,3,4,0]})"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("Calabi-Yau: yes"), std::string::npos);
}

TEST(Cli, CheckCyFalseExitsOne) {
  const auto r = run({"check-cy", "--params-json", R"({"n":5,"entries":[{"i":1,"j":2,"e":1}]})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("Calabi-Yau: no"), std::string::npos);
}

TEST(Cli, CentralProductOnGenericCyWitness) {
  const auto r = run({"central", "--params-json", witness5(), "--poly", "x1*x2*x3*x4*x5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(run({"central", "--params-json", witness5(), "--poly", "x1*x2"}).code, 1);
  EXPECT_EQ(run({"central", "--params-json", witness5(), "--poly", "x1^5+x2^5+x3^5+x4^5+x5^5"}).code, 0);
}

TEST(Cli, Hilb1Points) {
  const auto r = run({"hilb1", "--params-json", witness5(), "--algebra", "A", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["discrete"].get<bool>());
  EXPECT_EQ(j["total_points"], 50);
  const auto text = run({"hilb1", "--params-json", witness5(), "--algebra", "A"});
  EXPECT_NE(text.out.find("total points: 50"), std::string::npos);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"frobenius", "--params-json", witness5()}).code, 0);
  EXPECT_EQ(run({"twist-check", "--params-json", witness5()}).code, 1);
  EXPECT_EQ(run({"twist-check", "--params-json", R"({"n":4,"twist":[0,1,2,3]})"}).code, 0);
  const auto patch = run({"patch", "--params-json", witness5(), "--generator", "2", "--format", "json"});
  EXPECT_EQ(patch.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(patch.out));
  const auto eval = run({"eval", "--params-json", R"({"n":2,"exponents":[[0,1],[1,0]]})", "--poly",
                         "(x1 + x2)*(x1 + x2)"});
  EXPECT_EQ(eval.code, 2);
  const auto eval2 = run({"eval", "--params-json", R"({"n":2,"exponents":[[0,1],[1,0]]})", "--poly",
                          "x1*x1 + x1*x2 + x2*x1 + x2*x2"});
  EXPECT_EQ(eval2.code, 0);
  EXPECT_EQ(eval2.out, "x1^2 + x2^2\n");
}

TEST(Cli, InputAndCapacityErrors) {
  EXPECT_EQ(run({"check-cy", "--params-json", R"({"n":3,"exponents":[[0,1,0],[1,0,0],[0,0,0]]})"}).code, 2);
  EXPECT_EQ(run({"check-cy", "--params-json", "{not json"}).code, 2);
  EXPECT_EQ(run({"check-cy"}).code, 2);
  EXPECT_EQ(run({"check-cy", "--params", "/nonexistent/params.json"}).code, 2);
  EXPECT_EQ(run({"eval", "--params-json", R"({"n":5,"twist":[0,0,0,0,0]})", "--poly", "x6"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"census", "--n", "7"}).code, 3);
  EXPECT_EQ(run({"census", "--n", "2"}).code, 3);
  const auto r = run({"census", "--n", "7"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ParamsFromFile) {
  const std::string path = ::testing::TempDir() + "qfermat_params.json";
  {
    std::ofstream f(path);
    f << R"({"n":4,"twist":[3,1,0,2]})";
  }
  EXPECT_EQ(run({"check-cy", "--params", path}).code, 0);
  std::remove(path.c_str());
}

TEST(Cli, CensusDeterministicJson) {
  const auto a = run({"census", "--n", "4", "--format", "json", "--workers", "1"});
  const auto b = run({"census", "--n", "4", "--format", "json", "--workers", "1"});
  const auto c = run({"census", "--n", "4", "--format", "json", "--workers", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["count_generic_and_cy"], 192);
  EXPECT_TRUE(j["n4_dichotomy_holds"].get<bool>());
}

TEST(Cli, JsonByteDeterministic) {
  for (const char* cmd : {"check-cy", "hilb1", "frobenius", "twist-check", "patch"}) {
    const auto a = run({cmd, "--params-json", witness5(), "--format", "json"});
    const auto b = run({cmd, "--params-json", witness5(), "--format", "json"});
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_FALSE(a.out.empty()) << cmd << a.err;
  }
}

}  // namespace
}  // namespace qfermat
