#include "bern/pi.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bern {
namespace {

// Extra decimal digits computed beyond what is written to the cache, so the
// truncated expansion is not disturbed by the final rounding.
constexpr std::uint64_t kCacheSlackDigits = 12;

std::string expansion_of(const BigFloat& value, std::uint64_t digits) {
  return value.to_significant(digits);
}

// FNV-1a over the expansion; catches flipped or truncated digits that still
// look well formed.
std::uint64_t checksum(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

bool well_formed(const std::string& expansion, std::uint64_t digits) {
  if (expansion.size() != digits + 1 || expansion.rfind("6.", 0) != 0) return false;
  for (std::size_t i = 2; i < expansion.size(); ++i) {
    if (expansion[i] < '0' || expansion[i] > '9') return false;
  }
  return true;
}

void write_cache(const std::filesystem::path& path, std::uint64_t digits, const std::string& expansion) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // unwritable cache location: keep going without it
    out << "2*Pi " << digits << ' ' << std::hex << checksum(expansion) << std::dec << '\n'
        << expansion << '\n';
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

ApproxReal from_expansion(const std::string& expansion, std::uint64_t digits) {
  BigFloat value(bits_for_digits(digits) + kGuardBits);
  mpfr_set_str(value.get(), expansion.c_str(), 10, MPFR_RNDN);
  return ApproxReal{std::move(value), digits};
}

}  // namespace

BigFloat two_pi_agm(mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 32;
  BigFloat a(wp, 1);
  BigFloat b(wp, 2);
  mpfr_rec_sqrt(b.get(), b.get(), MPFR_RNDN);  // 1/sqrt(2)
  BigFloat t(wp, 1);
  mpfr_div_2ui(t.get(), t.get(), 2, MPFR_RNDN);  // 1/4
  BigFloat next_a(wp);
  BigFloat diff(wp);
  unsigned long doubling = 0;  // p = 2^doubling

  while (true) {
    mpfr_add(next_a.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_div_2ui(next_a.get(), next_a.get(), 1, MPFR_RNDN);
    mpfr_mul(b.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_sqrt(b.get(), b.get(), MPFR_RNDN);
    mpfr_sub(diff.get(), a.get(), next_a.get(), MPFR_RNDN);
    mpfr_sqr(diff.get(), diff.get(), MPFR_RNDN);
    mpfr_mul_2ui(diff.get(), diff.get(), doubling, MPFR_RNDN);
    mpfr_sub(t.get(), t.get(), diff.get(), MPFR_RNDN);
    ++doubling;
    std::swap(a, next_a);

    mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
    if (mpfr_zero_p(diff.get()) || mpfr_get_exp(diff.get()) < -wp + 16) break;
  }
  // 2 pi = (a + b)^2 / (2 t)
  BigFloat out(bits);
  mpfr_add(next_a.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_sqr(next_a.get(), next_a.get(), MPFR_RNDN);
  mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  mpfr_div(out.get(), next_a.get(), t.get(), MPFR_RNDN);
  return out;
}

std::optional<PiCacheContents> read_pi_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::string expansion;
  if (!std::getline(in, header) || !std::getline(in, expansion)) return std::nullopt;
  std::istringstream hs(header);
  std::string tag;
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  if (!(hs >> tag >> count >> std::hex >> sum) || tag != "2*Pi") return std::nullopt;
  if (!well_formed(expansion, count) || checksum(expansion) != sum) return std::nullopt;
  return PiCacheContents{count, std::move(expansion)};
}

ApproxReal two_pi(std::uint64_t digits, const std::optional<std::filesystem::path>& cache) {
  if (digits < 9) throw std::invalid_argument("two_pi: digits must be >= 9");

  if (cache) {
    if (auto cached = read_pi_cache(*cache); cached && cached->digit_count >= digits) {
      // A prefix with 30 spare digits is all the requested precision needs.
      const std::uint64_t used = std::min(cached->digit_count, digits + 30);
      return from_expansion(cached->expansion.substr(0, used + 1), digits);
    }
  }

  const BigFloat computed = two_pi_agm(bits_for_digits(digits + kCacheSlackDigits) + kGuardBits);
  BigFloat value(bits_for_digits(digits) + kGuardBits);
  mpfr_set(value.get(), computed.get(), MPFR_RNDN);

  // The expansion is truncated, so a longer cache extends a shorter one
  // digit for digit. A shorter cache that is not a prefix was corrupt and
  // is replaced all the same.
  if (cache) write_cache(*cache, digits, expansion_of(computed, digits));
  return ApproxReal{std::move(value), digits};
}

}  // namespace bern
