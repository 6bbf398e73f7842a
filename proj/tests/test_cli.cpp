#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "holgraph_cli/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = holgraph::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, GraphDot) {
  const auto r = run({"graph", "-p", "2", "-n", "5", "--engine", "modular", "--format", "dot"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count(r.out, "[iso="), 28u);
  EXPECT_EQ(r.out, run({"graph", "-p", "2", "-n", "5", "--engine", "modular", "--format", "dot",
                        "--jobs", "3"}).out);
}

TEST(Cli, GraphFormats) {
  const auto json = run({"graph", "-p", "3", "-n", "3", "--format", "json"});
  EXPECT_EQ(json.status, 0);
  EXPECT_NE(json.out.find("\"cliques\""), std::string::npos);
  const auto text = run({"graph", "-p", "2", "-n", "4", "--format", "text", "--engine", "general"});
  EXPECT_EQ(count(text.out, "\nedge "), 28u);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "-p", "2", "-n", "4"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, Lemmas) {
  const auto r = run({"lemmas", "-p", "2", "-n", "10"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count(r.out, "PASS"), 7u * 3u);
  EXPECT_EQ(run({"lemmas", "-p", "3", "-n", "4"}).status, 0);
  EXPECT_EQ(run({"lemmas", "-p", "2", "-n", "3"}).status, 2);
  EXPECT_EQ(run({"lemmas", "-p", "2", "-n", "30"}).status, 3);
}

TEST(Cli, Counts) {
  const auto r = run({"counts", "-p", "2", "-n", "5", "--oracle"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Semidihedral 2 2"), std::string::npos);
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
  const auto expected_only = run({"counts", "-p", "2", "-n", "12"});
  EXPECT_EQ(expected_only.status, 0);
  EXPECT_NE(expected_only.out.find("Cyclic 1024"), std::string::npos);
}

TEST(Cli, CatalogMatchesGolden) {
  const auto r = run({"catalog", "-p", "2", "-n", "5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_file(std::string(HOLGRAPH_TEST_DATA) + "/catalog_2_5.txt"));
  EXPECT_NE(run({"catalog", "-p", "3", "-n", "2", "--format", "json"}).out.find("\"U[2,0,1]\""),
            std::string::npos);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "holgraph_cli_test.dot";
  const auto r = run({"graph", "-p", "2", "-n", "4", "-o", path});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), run({"graph", "-p", "2", "-n", "4"}).out);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"graph", "-n", "4"}).status, 2);
  EXPECT_EQ(run({"graph", "-p", "2", "-n", "4", "--engine", "fast"}).status, 2);
  EXPECT_EQ(run({"graph", "-p", "4", "-n", "2"}).status, 2);
  EXPECT_EQ(run({"frobnicate", "-p", "2", "-n", "4"}).status, 2);
  EXPECT_EQ(run({"catalog", "-p", "2", "-n", "2"}).status, 2);
  EXPECT_EQ(run({"graph", "-p", "2", "-n", "4", "--format", "svg"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, FeasibilityErrors) {
  EXPECT_EQ(run({"verify", "-p", "2", "-n", "7"}).status, 3);
  EXPECT_EQ(run({"graph", "-p", "2", "-n", "13", "--engine", "general"}).status, 3);
  EXPECT_EQ(run({"counts", "-p", "3", "-n", "4", "--oracle"}).status, 3);
}
