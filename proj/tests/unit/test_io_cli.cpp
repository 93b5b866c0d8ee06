#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eigenop/budget.hpp"
#include "eigenop/cli.hpp"
#include "eigenop/errors.hpp"
#include "eigenop/json_io.hpp"
#include "eigenop/rng.hpp"
#include "eigenop/selftest.hpp"

using eigenop::cplx;
using eigenop::EigenOp;
using eigenop::Json;
using eigenop::PhiSpec;
using eigenop::TruncatedSeries;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eigenop_lab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int status = eigenop::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "eigenop_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void expect_invalid(auto&& call) {
  try {
    call();
    FAIL() << "expected invalid_argument";
  } catch (const eigenop::Error& e) {
    EXPECT_EQ(e.code(), eigenop::ErrorCode::invalid_argument);
  }
}

}  // namespace

TEST(Json, SeriesAndOperatorRoundTrip) {
  const TruncatedSeries f({cplx{1, -2}, 0.5, cplx{0, 3}});
  EXPECT_EQ(eigenop::series_from_json(eigenop::to_json(f)), f);
  const EigenOp op(cplx{0.5, 0.25}, PhiSpec({0, cplx{1, 1}, 2}, cplx{-1, 0.5}, eigenop::Builtin::cosh));
  EXPECT_EQ(eigenop::op_from_json(eigenop::to_json(op)), op);
  EXPECT_EQ(eigenop::to_json(cplx{1.5, -2}).dump(), "[1.5,-2.0]");
}

TEST(Json, AcceptedInputForms) {
  EXPECT_EQ(eigenop::complex_from_json(Json(2.5)), cplx(2.5));
  EXPECT_EQ(eigenop::series_from_json(Json::parse(R"({"coeffs": [1, [0, 1]]})")), TruncatedSeries({1, cplx{0, 1}}));
  EXPECT_EQ(eigenop::series_from_json(Json::parse(R"({"vector": [[0, 0], 2]})")), TruncatedSeries({0, 2}));
  const auto op = eigenop::op_from_json(Json::parse(R"({"lambda": 0.5, "phi": {"poly": [0, 1]}})"));
  EXPECT_EQ(op, EigenOp(0.5, PhiSpec({0, 1})));
}

TEST(Json, MalformedInputIsInvalidArgument) {
  expect_invalid([] { eigenop::complex_from_json(Json::parse(R"("x")")); });
  expect_invalid([] { eigenop::complex_from_json(Json::parse("[1, 2, 3]")); });
  expect_invalid([] { eigenop::series_from_json(Json::parse("[]")); });
  expect_invalid([] { eigenop::op_from_json(Json::parse(R"({"lambda": 0, "phi": {"poly": [1]}})")); });
  expect_invalid([] { eigenop::op_from_json(Json::parse(R"({"lambda": 1, "phi": {"poly": [0, 0]}})")); });
  expect_invalid([] { eigenop::phi_from_json(Json::parse(R"({"poly": [1], "builtin": "tan"})")); });
}

TEST(Json, ClassificationFields) {
  const auto j = eigenop::to_json(eigenop::classify(0.5, PhiSpec({0, 1})));
  EXPECT_EQ(j["sc"]["verdict"], true);
  EXPECT_EQ(j["sc"]["citation"], "Th. super1");
  EXPECT_TRUE(j["hc"].contains("note"));
}

TEST(Csv, OrbitColumns) {
  const auto rec = eigenop::orbit(EigenOp(0.5, PhiSpec({0, 1})), TruncatedSeries({0, 1}), 2,
                                  {eigenop::Seminorm::rho(1), eigenop::Seminorm::sup_disk(2)},
                                  {{"g", TruncatedSeries({1})}}, false);
  std::ostringstream out;
  eigenop::write_orbit_csv(out, rec);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,scalar_re,scalar_im,rho(1),sup_disk(2),sup_disk(2)_upper,dist_g");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 3u);
}

TEST(Budget, ParseAndReject) {
  const auto b = eigenop::Budget::parse("max_degree=100,leibniz_work=8");
  EXPECT_EQ(b.max_degree, 100u);
  EXPECT_EQ(b.leibniz_work, 8u);
  EXPECT_EQ(b.mn_search_cap, eigenop::Budget{}.mn_search_cap);
  expect_invalid([] { eigenop::Budget::parse("nonsense=1"); });
  expect_invalid([] { eigenop::Budget::parse("max_degree=abc"); });
}

TEST(Rng, SplitStreamsAreReproducibleAndDistinct) {
  const eigenop::Rng root(42);
  auto a = root.split("x");
  auto b = root.split("x");
  auto c = root.split("y");
  const double va = a.uniform(0, 1);
  EXPECT_EQ(va, b.uniform(0, 1));
  EXPECT_NE(va, c.uniform(0, 1));
  for (int i = 0; i < 100; ++i) {
    const auto z = a.in_annulus(0.5, 2.0);
    EXPECT_GE(std::abs(z), 0.5 - 1e-15);
    EXPECT_LE(std::abs(z), 2.0 + 1e-15);
    EXPECT_LE(std::abs(a.in_disk(3.0)), 3.0);
    const auto k = a.uniform_index(2, 4);
    EXPECT_GE(k, 2u);
    EXPECT_LE(k, 4u);
  }
}

TEST(Selftest, PassesAndIsDeterministic) {
  const auto a = eigenop::selftest(42);
  EXPECT_TRUE(a["passed"].get<bool>()) << a.dump(2);
  EXPECT_EQ(a.dump(), eigenop::selftest(42).dump());
}

TEST(Cli, ClassifyReportsSuper1) {
  const auto r = run_cli({"classify", "--op", R"({"lambda": [0.5, 0], "phi": {"poly": [[0,0],[1,0]]}})"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["sc"]["verdict"], true);
  EXPECT_EQ(j["sc"]["citation"], "Th. super1");
}

TEST(Cli, ZeroOrbitCsv) {
  const auto r = run_cli({"orbit", "--op", R"({"lambda": 0.5, "phi": {"poly": [0, 1]}})", "--f", "[0, 0, 0]",
                          "--seminorm", "rho:1", "--seminorm", "sup:2", "--n-max", "4", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');  // n
    std::getline(cells, cell, ',');  // scalar_re
    std::getline(cells, cell, ',');  // scalar_im
    while (std::getline(cells, cell, ',')) EXPECT_EQ(std::stod(cell), 0.0) << line;
  }
  EXPECT_EQ(rows, 5u);
}

TEST(Cli, VerifySupsupPasses) {
  const auto r = run_cli({"verify", "supsup", "--op", R"({"lambda": 2, "phi": {"poly": [1, 1]}})", "--seed", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["violations"], 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({"verify", "nolemma", "--op", R"({"lambda": 2, "phi": {"poly": [1, 1]}})"}).status, 2);
  EXPECT_EQ(run_cli({"classify"}).status, 2);
  EXPECT_EQ(run_cli({"classify", "--op", R"({"lambda": 0, "phi": {"poly": [1]}})"}).status, 2);
  const auto pre = run_cli({"construct", "--op", R"({"lambda": 2, "phi": {"poly": [0, 1]}})", "--target", "g=[1]"});
  EXPECT_EQ(pre.status, 2);
  EXPECT_EQ(Json::parse(pre.out)["error"]["code"], "precondition");
}

TEST(Cli, BudgetErrorsExitThree) {
  ::setenv("EIGENOP_LAB_BUDGET", "max_iterations=5", 1);
  const auto r = run_cli({"orbit", "--op", R"({"lambda": 0.5, "phi": {"poly": [0, 1]}})", "--f", "[1]",
                          "--n-max", "10"});
  ::unsetenv("EIGENOP_LAB_BUDGET");
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(Json::parse(r.out)["error"]["code"], "budget");
}

TEST(Cli, ConstructionFeedsBackIntoOrbit) {
  const auto out = scratch("construct.json");
  const std::string op = R"({"lambda": 0.5, "phi": {"poly": [0, 1]}})";
  const auto r = run_cli({"construct", "--op", op, "--target", "one=[1]", "--target", "lin=[0, 1]", "--tol", "1e-4",
                          "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(out.string() + ".meta.json"));
  std::ifstream in(out);
  const auto report = Json::parse(in);
  const auto k = report["schedule"][1]["k"].get<std::size_t>();
  const auto back = run_cli({"orbit", "--op", op, "--f", out.string(), "--n-max", std::to_string(k), "--target",
                             "lin=[0, 1]"});
  ASSERT_EQ(back.status, 0) << back.err;
  EXPECT_EQ(Json::parse(back.out)["entries"].size(), k + 1);
}

TEST(Cli, SelftestOutputIsByteIdentical) {
  const auto a = run_cli({"selftest", "--seed", "42"});
  const auto b = run_cli({"selftest", "--seed", "42"});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SchemaListsCsvColumns) {
  const auto r = run_cli({"--schema"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("scalar_re"), std::string::npos);
}
