#pragma once

// Subcommand implementations for the `bruhat` tool, kept out of main() so the
// test suite can drive them directly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/orbit.hpp"
#include "bruhat/serialize.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/word.hpp"

namespace bruhat::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kNotReduced = 2,
  kOverCap = 3,
  kParse = 4,
};

/// Maps a library exception to the documented exit code.
int exit_code_for(const std::exception& e);

/// How the reduced word for (u, v) is specified on the command line.
struct WordRequest {
  std::string type;
  std::string u = "e";
  std::string v = "w0";
  std::optional<std::string> u_word;
  std::optional<std::string> v_word;
  /// Overrides u/v entirely, e.g. "-1 +2 -2 +1".
  std::optional<std::string> signed_word;
  /// 0/1 pattern, 0 = letter of u; default puts u's letters first.
  std::optional<std::string> shuffle;
};

struct ResolvedWord {
  CartanSpec cartan;
  Word u;
  Word v;
  SignedWord word;
};

/// Parses and validates a WordRequest. Throws ParseError / NotReducedError.
ResolvedWord resolve(const WordRequest& request);

struct RunReport {
  std::string type_label;
  Word u_word;
  Word v_word;
  SignedWord signed_word;
  int d = 0;
  int bounded_count = 0;
  bool sigma_b_connected = false;
  OrbitSummary summary;
  std::uint64_t gf2_fixed_points = 0;
  double elapsed_ms = 0;
};

RunReport run_components(const WordRequest& request, const EnumerationOptions& options);

Json to_json(const RunReport& report, bool with_timing = true);
std::string to_csv(const RunReport& report, bool with_timing = true);

/// Sigma graph for the request; `with_split` attaches standard_split() when
/// the Cartan matrix has one, `threshold` forces the split {1..t}.
SigmaGraph run_sigma(const WordRequest& request, bool with_split, std::optional<int> threshold);

/// Raw TransvectionSet JSON in, OrbitSummary JSON out (plus the GF(2)
/// fixed-point count when the action is linear).
Json run_orbits(const Json& input, const EnumerationOptions& options);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string scope;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

const char* to_string(CheckStatus status);

struct VerifyOptions {
  std::string scope = "all";
  int max_path = 16;
  int max_rank = 8;
  int walks = 10;
  int walk_steps = 100;
  std::uint64_t seed = 1;
  EnumerationOptions enumeration;
};

/// Scopes: all, paths, ladders, table, theorem3, lemma1, invariance.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_results(const std::vector<CheckResult>& results);
Json results_to_json(const std::vector<CheckResult>& results);

struct InvarianceReport {
  std::string type_label;
  Word u_word;
  Word v_word;
  std::uint64_t seed = 0;
  int walks = 0;
  int steps = 0;
  std::uint64_t base_count = 0;
  std::vector<SignedWord> variants;
  std::vector<std::uint64_t> counts;
  bool consistent = true;
};

/// Runs `walks` braid-walk + reshuffle variants of the resolved word and
/// compares their orbit counts.
InvarianceReport run_invariance(const WordRequest& request, int walks, int steps, std::uint64_t seed,
                                const EnumerationOptions& options);

Json to_json(const InvarianceReport& report);

}  // namespace bruhat::cli
