#include <gtest/gtest.h>

#include <mpfr.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "bern/pi.hpp"

namespace bern {
namespace {

// Truncated, not rounded, to 61 significant digits.
constexpr const char* kTwoPi60 = "6.283185307179586476925286766559005768394338798750211641949889";

namespace fs = std::filesystem;

fs::path scratch_file(const std::string& stem) {
  const auto dir = fs::temp_directory_path() / "bern_pi_tests";
  fs::create_directories(dir);
  std::random_device rd;
  auto path = dir / (stem + "_" + std::to_string(rd()) + ".txt");
  fs::remove(path);
  return path;
}

TEST(TwoPi, FifteenDigits) {
  EXPECT_EQ(two_pi(15).value.to_significant(15), "6.28318530717958");
  EXPECT_EQ(two_pi(60).value.to_significant(60), std::string(kTwoPi60).substr(0, 61));
  EXPECT_THROW(two_pi(5), std::invalid_argument);
}

TEST(TwoPi, AgmMatchesMpfrConstant) {
  for (mpfr_prec_t bits : {64, 333, 4000, 70000}) {
    const auto agm = two_pi_agm(bits);
    BigFloat ref(bits + 64);
    mpfr_const_pi(ref.get(), MPFR_RNDN);
    mpfr_mul_ui(ref.get(), ref.get(), 2, MPFR_RNDN);
    BigFloat diff(bits + 64);
    mpfr_sub(diff.get(), agm.get(), ref.get(), MPFR_RNDN);
    if (!mpfr_zero_p(diff.get())) {
      EXPECT_LT(mpfr_get_exp(diff.get()), 3 - bits) << bits;
    }
  }
}

TEST(TwoPi, ShorterRequestIsPrefixOfLonger) {
  const auto long_pi = two_pi(2000).value.to_significant(2000);
  for (std::uint64_t d : {9u, 50u, 777u, 1999u}) {
    EXPECT_EQ(two_pi(d).value.to_significant(d), long_pi.substr(0, d + 1)) << d;
  }
}

TEST(TwoPi, HighPrecisionMatchesMpfr) {
  const std::uint64_t d = 61382;
  const auto ours = two_pi(d);
  BigFloat ref(ours.value.bits());
  mpfr_const_pi(ref.get(), MPFR_RNDN);
  mpfr_mul_ui(ref.get(), ref.get(), 2, MPFR_RNDN);
  EXPECT_EQ(ours.value.to_significant(d), ref.to_significant(d));
}

TEST(PiCache, WrittenThenReused) {
  const auto path = scratch_file("cache");
  const auto first = two_pi(500, path);
  const auto contents = read_pi_cache(path);
  ASSERT_TRUE(contents);
  EXPECT_GE(contents->digit_count, 500u);
  EXPECT_EQ(contents->expansion.substr(0, 61), std::string(kTwoPi60).substr(0, 61));

  const auto second = two_pi(300, path);
  EXPECT_EQ(second.value.to_significant(300), first.value.to_significant(300));
  EXPECT_EQ(read_pi_cache(path)->digit_count, contents->digit_count);

  // A longer request extends the cache and keeps the old digits as a prefix.
  two_pi(1500, path);
  const auto longer = read_pi_cache(path);
  ASSERT_TRUE(longer);
  EXPECT_GE(longer->digit_count, 1500u);
  EXPECT_EQ(longer->expansion.substr(0, contents->expansion.size()), contents->expansion);
  fs::remove(path);
}

TEST(PiCache, CorruptFileIsReplaced) {
  const auto path = scratch_file("corrupt");
  {
    std::ofstream out(path);
    out << "2*Pi 100\n6.2831853071795864769252867665590057683943387987502116419498891846x\n";
  }
  EXPECT_FALSE(read_pi_cache(path));
  EXPECT_EQ(two_pi(40, path).value.to_significant(40), std::string(kTwoPi60).substr(0, 41));
  EXPECT_TRUE(read_pi_cache(path));
  fs::remove(path);
}

TEST(PiCache, FlippedDigitIsDetected) {
  const auto path = scratch_file("flipped");
  two_pi(200, path);
  std::string header;
  std::string digits;
  {
    std::ifstream in(path);
    std::getline(in, header);
    std::getline(in, digits);
  }
  digits[100] = digits[100] == '0' ? '1' : '0';
  {
    std::ofstream out(path, std::ios::trunc);
    out << header << '\n' << digits << '\n';
  }
  EXPECT_FALSE(read_pi_cache(path));
  EXPECT_EQ(two_pi(150, path).value.to_significant(150), two_pi(150).value.to_significant(150));
  EXPECT_TRUE(read_pi_cache(path));
  fs::remove(path);
}

TEST(PiCache, MissingFileReadsAsNothing) {
  EXPECT_FALSE(read_pi_cache(scratch_file("missing")));
}

}  // namespace
}  // namespace bern
