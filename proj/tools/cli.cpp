// Copyright 2026 The FingerGrover Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "fingergrover/bit_string.hpp"
#include "fingergrover/errors.hpp"
#include "fingergrover/harness.hpp"
#include "fingergrover/hash_family.hpp"
#include "fingergrover/search.hpp"
#include "fingergrover/selftest.hpp"
#include "fingergrover/sweep.hpp"
#include "fingergrover/universality.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover::cli {
namespace {

constexpr const char* kSeedEnv = "FINGERGROVER_SEED";

struct SearchArgs {
  std::string text_file;
  std::string pattern;
  std::uint64_t c = 3;
  std::optional<std::uint64_t> seed;
  bool verify = false;
  bool allow_out_of_contract = false;
  bool raw_bits = false;
};

struct AnalyzeArgs {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t c = 3;
};

struct SweepArgs {
  std::vector<std::uint64_t> n_values;
  std::vector<std::uint64_t> m_values;
  std::uint64_t c = 3;
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
};

struct VerifyArgs {
  std::string family = "freivalds";
  std::uint64_t c = 3;
  std::uint64_t n = 1;
  std::uint64_t m = 4;
  std::optional<double> eps;
  std::uint64_t size = 1;
  unsigned width = 1;
  std::uint64_t budget = UniversalityOptions{}.exhaustive_budget;
  std::uint64_t samples = UniversalityOptions{}.samples;
  std::optional<std::uint64_t> seed;
};

// --seed, else $FINGERGROVER_SEED, else 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const std::string text(env);
  std::size_t pos = 0;
  try {
    value = std::stoull(text, &pos, 10);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.front() == '-') {
    throw InvalidArgument(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return value;
}

void require_c(std::uint64_t c) {
  if (c < 3) throw InvalidArgument("c must be >= 3");
}

int cmd_search(const SearchArgs& a, bool pretty, std::ostream& out, std::ostream& err) {
  require_c(a.c);
  const BitString pattern = BitString::parse(a.pattern);
  const BitString text = read_bit_file(
      a.text_file, a.raw_bits ? BitFileFormat::kPackedBytes : BitFileFormat::kAscii);
  if (pattern.empty()) throw InvalidArgument("pattern is empty");
  if (pattern.size() > text.size()) throw InvalidArgument("pattern longer than text");

  const std::size_t occurrences = find_occurrences_classical(text, pattern).size();
  if (occurrences != 1 && !a.allow_out_of_contract) {
    err << "contract violation: pattern occurs " << occurrences
        << " times (expected exactly 1); pass --allow-out-of-contract to run anyway\n";
    return kExitContract;
  }
  const SearchOutcome outcome =
      search_with_random_prime(text, pattern, {a.c, resolve_seed(a.seed), a.verify});
  out << to_json(outcome, pretty);
  return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& a, bool pretty, std::ostream& out) {
  require_c(a.c);
  out << to_json(complexity_report(a.n, a.m, a.c), pretty);
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, bool pretty, std::ostream& out, std::ostream& err) {
  require_c(a.c);
  SweepSpec spec{a.n_values, a.m_values, a.c, a.trials, resolve_seed(a.seed)};
  const SweepTable table = sweep(spec);
  for (const SweepFailure& f : table.failures) {
    err << "row n=" << f.n << " m=" << f.m << " failed: " << f.message << '\n';
  }
  out << (a.format == "json" ? to_json(table, pretty) : to_csv(table));
  return kExitOk;
}

int cmd_verify_family(const VerifyArgs& a, bool pretty, std::ostream& out) {
  std::unique_ptr<HashFamily> family;
  double default_eps = 1.0;
  if (a.family == "freivalds") {
    require_c(a.c);
    family = std::make_unique<FreivaldsFamily>(freivalds_family(a.c, a.n, a.m));
    default_eps = 1.0 / static_cast<double>(a.c);
  } else if (a.family == "identity") {
    family = std::make_unique<IdentityFamily>(static_cast<unsigned>(a.m));
    default_eps = 0.0;
  } else {
    family = std::make_unique<ConstantFamily>(a.size, a.width);
  }
  UniversalityOptions options;
  options.exhaustive_budget = a.budget;
  options.samples = a.samples;
  options.seed = resolve_seed(a.seed);
  const UniversalityReport report = verify_strong_universality(
      *family, a.n, a.eps.value_or(default_eps), a.m, options);
  out << to_json(report, pretty);
  return kExitOk;
}

int cmd_selftest(bool corrupt_diffusion, std::ostream& out) {
  const auto results = run_selftest({corrupt_diffusion});
  out << format_selftest(results);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CheckResult& r) { return r.passed; });
  return ok ? kExitOk : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fingerprint-compressed Grover substring search simulator", "fingergrover"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Find a pattern with the random-prime search");
  search->add_option("--text", search_args.text_file, "Text file of ASCII 0/1")->required();
  search->add_option("--pattern", search_args.pattern, "Binary pattern")->required();
  search->add_option("--c", search_args.c, "Redundancy factor (>= 3)");
  search->add_option("--seed", search_args.seed, "RNG seed (default $FINGERGROVER_SEED or 0)");
  search->add_flag("--verify", search_args.verify, "Check the returned window classically");
  search->add_flag("--allow-out-of-contract", search_args.allow_out_of_contract,
                   "Run even if the pattern does not occur exactly once");
  search->add_flag("--raw-bits", search_args.raw_bits, "Read the text file as packed bytes, MSB first");
  search->fallthrough();

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Report space and query complexity for (n, m, c)");
  analyze->add_option("--n", analyze_args.n, "Number of windows")->required();
  analyze->add_option("--m", analyze_args.m, "Pattern length")->required();
  analyze->add_option("--c", analyze_args.c, "Redundancy factor (>= 3)");
  analyze->fallthrough();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo error sweep over planted instances");
  sweep_cmd->add_option("--n", sweep_args.n_values, "Window counts")->delimiter(',');
  sweep_cmd->add_option("--m", sweep_args.m_values, "Pattern lengths")->delimiter(',');
  sweep_cmd->add_option("--c", sweep_args.c, "Redundancy factor (>= 3)");
  sweep_cmd->add_option("--trials", sweep_args.trials, "Trials per row (>= 100)");
  sweep_cmd->add_option("--seed", sweep_args.seed, "RNG seed (default $FINGERGROVER_SEED or 0)");
  sweep_cmd->add_option("--format", sweep_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->fallthrough();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-family", "Check strong universality of a hash family");
  verify->add_option("--family", verify_args.family, "freivalds, identity or constant")
      ->check(CLI::IsMember({"freivalds", "identity", "constant"}));
  verify->add_option("--c", verify_args.c, "Redundancy factor for freivalds (>= 3)");
  verify->add_option("--n", verify_args.n, "Subset size");
  verify->add_option("--m", verify_args.m, "Word length (<= 20)");
  verify->add_option("--eps", verify_args.eps, "Bound to check (default 1/c, 0 for identity, 1 for constant)");
  verify->add_option("--size", verify_args.size, "Constant family size");
  verify->add_option("--width", verify_args.width, "Constant family output width");
  verify->add_option("--budget", verify_args.budget, "Exhaustive case budget");
  verify->add_option("--samples", verify_args.samples, "Samples when not exhaustive");
  verify->add_option("--seed", verify_args.seed, "Sampling seed");
  verify->fallthrough();

  bool corrupt_diffusion = false;
  auto* selftest = app.add_subcommand("selftest", "Run built-in consistency checks");
  selftest->add_flag("--corrupt-diffusion", corrupt_diffusion)->group("");
  selftest->fallthrough();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*search) return cmd_search(search_args, pretty, out, err);
    if (*analyze) return cmd_analyze(analyze_args, pretty, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, pretty, out, err);
    if (*verify) return cmd_verify_family(verify_args, pretty, out);
    if (*selftest) return cmd_selftest(corrupt_diffusion, out);
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fingergrover::cli
