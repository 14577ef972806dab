#include "affbetti/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace affbetti::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json betti_of(const Result& r) { return json::parse(r.out).at("betti"); }

TEST(Cli, Betti) {
  auto r = run({"betti", "--type", "A1", "--lambda", "2", "--basis", "coroot"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(betti_of(r), json::parse("[1,1,1,1,1]"));

  r = run({"betti", "--type", "A2", "--lambda", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("betti"), json::parse("[1,1,2,2,3,3,4,3,3,2,1]"));
  EXPECT_EQ(doc.at("type"), "A2");
  EXPECT_EQ(doc.at("rank"), 2);
  EXPECT_EQ(doc.at("lambda_coroot"), json::parse("[2,3]"));
  EXPECT_EQ(doc.at("lambda_coweight"), json::parse("[1,4]"));
  EXPECT_EQ(doc.at("length_top"), 10);
  EXPECT_EQ(doc.at("interval_size"), 25);

  r = run({"betti", "--type", "A2", "--lambda", "0,0"});
  EXPECT_EQ(betti_of(r), json::parse("[1]"));

  r = run({"betti", "--type", "A2", "--lambda", "1,4", "--basis", "coweight", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i,b_i\n0,1\n1,1\n2,2\n3,2\n4,3\n5,3\n6,4\n7,3\n8,3\n9,2\n10,1\n");
}

TEST(Cli, Verify) {
  for (auto [type, lambda] : std::vector<std::pair<std::string, std::string>>{{"A2", "2,3"}, {"B2", "1,1"}, {"A1", "3"}}) {
    auto r = run({"verify", "--type", type, "--lambda", lambda});
    EXPECT_EQ(r.code, 0) << type << " " << r.err;
    EXPECT_TRUE(json::parse(r.out).at("match").get<bool>());
  }
  auto r = run({"oracle", "--type", "A2", "--lambda", "2,3", "--jobs", "2"});
  EXPECT_EQ(betti_of(r), json::parse("[1,1,2,2,3,3,4,3,3,2,1]"));
}

TEST(Cli, Sweep) {
  auto r = run({"sweep", "--type", "A4", "--below", "2,3,3,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("records").size(), 30u);
  EXPECT_EQ(doc.at("counts").at("all"), 30);
  EXPECT_EQ(doc.at("counts").at("unimodal"), 30);

  auto csv = run({"sweep", "--type", "A2", "--below", "1,1", "--format", "csv"});
  EXPECT_EQ(csv.out,
            "lambda_coroot,lambda_coweight,length_top,interval_size,unimodal,log_concave,error\n"
            "0;0,0;0,0,1,true,true,\n"
            "1;1,1;1,4,7,true,false,\n");
}

TEST(Cli, Polytope) {
  auto r = run({"polytope", "--type", "A2", "--lambda", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("volume"), "33/2");
  EXPECT_EQ(doc.at("breakpoints"), json::parse(R"(["0","6","9","10"])"));
  bool found = false;
  for (const auto& v : doc.at("vertices"))
    if (v == json::parse(R"(["3/2","3"])")) found = true;
  EXPECT_TRUE(found);

  auto csv = run({"polytope", "--type", "A1", "--lambda", "2", "--format", "csv", "--grid", "3"});
  EXPECT_EQ(csv.out, "z,F,g\n0,0,1\n2,2,1\n4,4,1\n");
}

TEST(Cli, Measures) {
  auto r = run({"measures", "--type", "A2", "--lambda", "2,3", "--k", "1,2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("rows").size(), 33u);
  for (const auto& row : doc.at("rows")) EXPECT_TRUE(row.at("sandwich_ok").get<bool>());

  auto csv = run({"measures", "--type", "A2", "--lambda", "2,3", "--k", "1", "--grid", "2", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "k,z,err_mk,err_mklat,err_mklatplus,sandwich_ok");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST(Cli, Poincare) {
  auto r = run({"poincare", "--type", "A2", "--subset", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc.at("poincare"), json::parse(R"({"0":1,"1":2,"2":2,"3":1})"));
  EXPECT_EQ(doc.at("quotient_poincare"), json::parse(R"({"0":1,"1":1,"2":1})"));
  EXPECT_EQ(doc.at("order"), 6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"betti", "--type", "A2", "--lambda", "1,0"}).code, kUsage);
  EXPECT_EQ(run({"betti", "--type", "D3", "--lambda", "1,1,1"}).code, kUsage);
  EXPECT_EQ(run({"betti", "--type", "A2"}).code, kUsage);
  EXPECT_EQ(run({"betti", "--type", "A2", "--lambda", "1,2,3"}).code, kUsage);
  EXPECT_EQ(run({"betti", "--type", "A2", "--lambda", "1,0", "--basis", "coweight"}).code, kUsage);
  EXPECT_EQ(run({"betti", "--type", "A2", "--lambda", "2,3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"verify", "--type", "A2", "--lambda", "2,3", "--budget", "8"}).code, kBudget);
  EXPECT_EQ(run({"betti", "--type", "E8", "--lambda", "0,0,0,0,0,0,0,0"}).code, kBudget);
  EXPECT_EQ(run({"poincare", "--type", "A2", "--subset", "3"}).code, kUsage);
  EXPECT_EQ(run({"measures", "--type", "A2", "--lambda", "2,3", "--k", "0"}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, HelpListsCsvColumns) {
  auto r = run({"measures", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k,z,err_mk,err_mklat,err_mklatplus,sandwich_ok"), std::string::npos);
}

TEST(Cli, WritesOutputFile) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "affbetti_cli_test";
  fs::create_directories(dir);
  const fs::path file = dir / "betti.json";
  fs::remove(file);
  auto r = run({"betti", "--type", "A2", "--lambda", "2,3", "--out", file.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"betti", "--type", "A2", "--lambda", "2,3"}).out);
  EXPECT_FALSE(fs::exists(file.string() + ".tmp"));
  fs::remove_all(dir);
}

TEST(Cli, OutputIndependentOfJobs) {
  EXPECT_EQ(run({"sweep", "--type", "B3", "--below", "2,1,2", "--jobs", "1"}).out,
            run({"sweep", "--type", "B3", "--below", "2,1,2", "--jobs", "3"}).out);
  EXPECT_EQ(run({"oracle", "--type", "G2", "--lambda", "2,3", "--jobs", "1"}).out,
            run({"oracle", "--type", "G2", "--lambda", "2,3", "--jobs", "4"}).out);
}

}  // namespace
}  // namespace affbetti::cli
