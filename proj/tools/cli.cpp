#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

#include "bern/agoh.hpp"
#include "bern/bernoulli.hpp"
#include "bern/error.hpp"
#include "bern/format.hpp"
#include "bern/oracle.hpp"

namespace bern::cli {
namespace {

// Largest index the --verify flag cross-checks against the recurrence.
constexpr std::uint64_t kVerifyCeiling = 400;

struct CommonFlags {
  std::string format = "fraction";
  std::uint64_t digits = 50;
  std::string pi_cache;
  unsigned threads = 1;
  std::uint64_t max_digits = EngineOptions{}.max_digits;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_index(const std::string& text) {
  if (!text.empty() && text[0] == '-') throw UsageError("argument must be >= 0");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("not a nonnegative integer: '" + text + "'");
  }
  if (value > static_cast<std::uint64_t>(INT64_MAX)) throw UsageError("index out of range: " + text);
  return value;
}

OutputFormat output_format(const CommonFlags& flags) {
  const auto mode = parse_output_mode(flags.format);
  if (!mode) throw UsageError("unknown format '" + flags.format + "'");
  return OutputFormat{*mode, flags.digits};
}

EngineOptions engine_options(const CommonFlags& flags) {
  EngineOptions options;
  options.threads = std::max(1u, flags.threads);
  options.max_digits = flags.max_digits;
  if (!flags.pi_cache.empty()) {
    options.pi_cache = flags.pi_cache;
  } else if (const char* env = std::getenv(kPiCacheEnv); env && *env) {
    options.pi_cache = std::filesystem::path(env);
  }
  return options;
}

void add_common(CLI::App& cmd, CommonFlags& flags, bool with_format) {
  if (with_format) {
    cmd.add_option("--format", flags.format, "fraction|numerator|denominator|decimal|summary");
    cmd.add_option("--digits", flags.digits, "digits after the point in decimal mode");
  }
  cmd.add_option("--pi-cache", flags.pi_cache, "file caching decimal digits of 2*Pi")
      ->envname(kPiCacheEnv);
  cmd.add_option("--threads", flags.threads, "worker threads");
  cmd.add_option("--max-digits", flags.max_digits, "pre-flight ceiling on digits x phase-1 primes");
}

void print_timings(const BernoulliResult& result, std::ostream& err) {
  if (!result.plan_used) return;
  err << "using " << result.plan_used->decimal_digits << " Digits\n";
  double clock = 0.0;
  for (const auto& stage : result.timings) {
    clock += stage.seconds;
    err << "finish " << stage.label << " at time = " << std::fixed << std::setprecision(6) << clock
        << " (" << stage.seconds << " s)\n";
    if (stage.label == "big prime loop") {
      err << "used primes up to and including " << result.stop_prime << '\n';
    }
  }
  err << std::defaultfloat;
}

int cmd_bern(const std::string& index, const CommonFlags& flags, bool verify, std::ostream& out,
             std::ostream& err) {
  const std::uint64_t n = parse_index(index);
  const OutputFormat format = output_format(flags);
  const BernoulliResult result = bernoulli(static_cast<std::int64_t>(n), engine_options(flags));
  print_timings(result, err);

  if (format.mode == OutputMode::summary) {
    out << render_summary(result);
  } else {
    out << render_value(result.value, format) << '\n';
  }

  if (verify) {
    if (n > kVerifyCeiling) {
      err << "verification skipped: n above " << kVerifyCeiling << '\n';
    } else if (bernoulli_recurrence(n) == result.value) {
      err << "VERIFIED\n";
    } else {
      err << "MISMATCH: recurrence gives " << bernoulli_recurrence(n).to_string() << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_table(const std::string& lo_text, const std::string& hi_text, const CommonFlags& flags,
              std::ostream& out) {
  const std::uint64_t lo = parse_index(lo_text);
  const std::uint64_t hi = parse_index(hi_text);
  if (lo > hi) throw UsageError("table range is empty: lo > hi");
  const OutputFormat format = output_format(flags);
  if (format.mode == OutputMode::summary) throw UsageError("table does not support --format summary");
  const EngineOptions options = engine_options(flags);
  for (std::uint64_t n = lo + (lo % 2); n <= hi; n += 2) {
    out << table_line(n, bernoulli(static_cast<std::int64_t>(n), options).value, format) << '\n';
  }
  return kOk;
}

int cmd_agoh(const std::string& max_text, const CommonFlags& flags, bool resume,
             const std::string& checkpoint, std::ostream& out, std::ostream& err) {
  const std::uint64_t max = parse_index(max_text);
  if (max < 2) throw UsageError("agoh needs max >= 2");
  AgohScanOptions options;
  options.threads = std::max(1u, flags.threads);
  options.engine = engine_options(flags);
  options.engine.threads = 1;
  options.resume = resume;
  if (!checkpoint.empty()) options.checkpoint = checkpoint;

  const AgohScanReport report = agoh_scan(max, options);
  for (const AgohVerdict& v : report.violations) {
    out << "violation: m = " << v.m << (v.is_prime ? " (prime)" : " (composite)") << ", residue "
        << (v.residue ? std::to_string(*v.residue) : std::string("undefined")) << '\n';
  }
  if (report.candidates_resumed > 0) {
    err << report.candidates_resumed << " candidates taken from checkpoint\n";
  }
  out << report.violations.size() << " violations, " << report.candidates_checked << " candidates checked\n";
  return report.violations.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernoulli numbers from the Euler product and Von Staudt-Clausen"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string index;
  bool verify = false;
  auto* bern_cmd = app.add_subcommand("bern", "print B(n)");
  bern_cmd->add_option("n", index, "index")->required();
  bern_cmd->add_flag("--verify", verify, "cross-check against the recurrence for n <= 400");
  add_common(*bern_cmd, flags, true);

  std::string lo;
  std::string hi;
  auto* table_cmd = app.add_subcommand("table", "print B(n) for every even n in [lo, hi]");
  table_cmd->add_option("lo", lo)->required();
  table_cmd->add_option("hi", hi)->required();
  add_common(*table_cmd, flags, true);

  std::string max;
  bool resume = false;
  std::string checkpoint = "bernoulli_agoh.ckpt";
  auto* agoh_cmd = app.add_subcommand("agoh", "check m B(m-1) = -1 (mod m) iff m prime, for m in [2, max]");
  agoh_cmd->add_option("max", max)->required();
  agoh_cmd->add_flag("--resume", resume, "skip ranges recorded in the checkpoint");
  agoh_cmd->add_option("--checkpoint", checkpoint, "checkpoint file (empty disables)");
  add_common(*agoh_cmd, flags, false);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*bern_cmd) return cmd_bern(index, flags, verify, out, err);
    if (*table_cmd) return cmd_table(lo, hi, flags, out);
    return cmd_agoh(max, flags, resume, checkpoint, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const ConsistencyError& e) {
    err << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bern::cli
