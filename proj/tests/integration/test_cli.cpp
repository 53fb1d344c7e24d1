#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace bern::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bernoulli");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& stem) {
  const auto dir = std::filesystem::temp_directory_path() / "bern_cli_tests";
  std::filesystem::create_directories(dir);
  std::random_device rd;
  auto p = dir / (stem + "_" + std::to_string(rd()));
  std::filesystem::remove(p);
  return p;
}

TEST(Cli, PrintsSingleValue) {
  auto r = invoke({"bern", "10"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "5/66\n");
  EXPECT_EQ(invoke({"bern", "12"}).out, "-691/2730\n");
  EXPECT_EQ(invoke({"bern", "0"}).out, "1/1\n");
  EXPECT_EQ(invoke({"bern", "1"}).out, "-1/2\n");
  EXPECT_EQ(invoke({"bern", "11"}).out, "0/1\n");
}

TEST(Cli, StdoutCarriesOnlyTheResult) {
  auto r = invoke({"bern", "2000"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("finish"), std::string::npos);
  EXPECT_EQ(r.out.find("Digits"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_NE(r.err.find("using 4147 Digits"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("finish big prime loop"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("used primes up to and including"), std::string::npos) << r.err;
}

TEST(Cli, OutputFormats) {
  EXPECT_EQ(invoke({"bern", "12", "--format", "numerator"}).out, "-691\n");
  EXPECT_EQ(invoke({"bern", "12", "--format", "denominator"}).out, "2730\n");
  EXPECT_EQ(invoke({"bern", "10", "--format", "decimal", "--digits", "4"}).out, "0.0757\n");
  auto s = invoke({"bern", "20", "--format", "summary"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_NE(s.out.find("B(20)"), std::string::npos);
  EXPECT_EQ(invoke({"bern", "10", "--format", "roman"}).code, kUsage);
}

TEST(Cli, Verify) {
  auto r = invoke({"bern", "100", "--verify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("VERIFIED"), std::string::npos);
  EXPECT_EQ(r.out.find("VERIFIED"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  auto neg = invoke({"bern", "-5"});
  EXPECT_EQ(neg.code, kUsage);
  EXPECT_NE(neg.err.find("argument must be >= 0"), std::string::npos) << neg.err;
  EXPECT_EQ(invoke({"bern", "ten"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  auto big = invoke({"bern", "750000"});
  EXPECT_EQ(big.code, kLimit);
  EXPECT_FALSE(big.err.empty());
  EXPECT_TRUE(big.out.empty());
  EXPECT_EQ(invoke({"bern", "5000000"}).code, kLimit);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, TableListsEvenIndices) {
  auto r = invoke({"table", "0", "12"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "0\t1\t1\n2\t1\t6\n4\t-1\t30\n6\t1\t42\n8\t-1\t30\n10\t5\t66\n12\t-691\t2730\n");
  EXPECT_EQ(invoke({"table", "3", "6"}).out, "4\t-1\t30\n6\t1\t42\n");
  EXPECT_EQ(invoke({"table", "6", "3"}).out, "");
  EXPECT_EQ(invoke({"table", "2", "4", "--format", "summary"}).code, kUsage);
}

TEST(Cli, AgohReportsCounts) {
  const auto ckpt = scratch("agoh").string();
  auto r = invoke({"agoh", "100", "--checkpoint", ckpt});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0 violations, 99 candidates checked\n");
  EXPECT_EQ(invoke({"agoh", "2", "--checkpoint", ""}).out, "0 violations, 1 candidates checked\n");

  auto resumed = invoke({"agoh", "300", "--checkpoint", ckpt, "--resume"});
  EXPECT_EQ(resumed.code, kOk);
  EXPECT_EQ(resumed.out, "0 violations, 299 candidates checked\n");
  EXPECT_NE(resumed.err.find("candidates taken from checkpoint"), std::string::npos);
  std::filesystem::remove(ckpt);
}

TEST(Cli, PiCacheOption) {
  const auto cache = scratch("pi").string();
  auto r = invoke({"bern", "1000", "--pi-cache", cache, "--format", "denominator"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "342999030\n");
  EXPECT_TRUE(std::filesystem::exists(cache));
  EXPECT_EQ(invoke({"bern", "1000", "--pi-cache", cache, "--format", "denominator"}).out,
            "342999030\n");
  std::filesystem::remove(cache);
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  EXPECT_EQ(invoke({"bern", "3000", "--threads", "4"}).out, invoke({"bern", "3000"}).out);
}

}  // namespace
}  // namespace bern::cli
