#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bruhat/error.hpp"
#include "bruhat/serialize.hpp"
#include "bruhat/special.hpp"
#include "commands.hpp"

namespace {

using namespace bruhat;
using namespace bruhat::cli;

struct Globals {
  std::uint64_t memory_cap_bytes = std::uint64_t{512} << 20;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  int max_dimension = 26;
  std::string format = "json";
  bool no_timing = false;

  EnumerationOptions enumeration() const {
    EnumerationOptions opts;
    opts.memory_cap_bytes = static_cast<std::size_t>(memory_cap_bytes);
    opts.threads = threads == 0 ? 1 : threads;
    opts.max_dimension = max_dimension;
    return opts;
  }
};

void add_word_options(CLI::App* cmd, WordRequest& request) {
  cmd->add_option("--type", request.type, "Lie type, e.g. A3, B4, F4, Wt(4,2)")->required();
  cmd->add_option("--u", request.u, "u as e, w0 or a word")->capture_default_str();
  cmd->add_option("--v", request.v, "v as e, w0 or a word")->capture_default_str();
  cmd->add_option("--u-word", request.u_word, "explicit reduced word for u");
  cmd->add_option("--v-word", request.v_word, "explicit reduced word for v");
  cmd->add_option("--word", request.signed_word, "signed word, e.g. \"-1 +2 -2 +1\"");
  cmd->add_option("--shuffle", request.shuffle, "0/1 pattern, 0 = letter of u");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Component counts of real reduced double Bruhat cells"};
  app.require_subcommand(1);
  app.add_option("--memory-cap-bytes", g.memory_cap_bytes, "visited-set memory cap")
      ->envname("BRUHAT_MEMORY_CAP_BYTES");
  app.add_option("--threads", g.threads, "enumeration threads")->envname("BRUHAT_THREADS");
  app.add_option("--seed", g.seed, "braid-walk seed")->envname("BRUHAT_SEED");
  app.add_option("--max-dimension", g.max_dimension, "largest d enumerated")
      ->envname("BRUHAT_MAX_DIMENSION");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timing", g.no_timing, "report elapsed_ms as 0");

  WordRequest components_req;
  auto* components = app.add_subcommand("components", "count orbits for a pair (u, v)");
  add_word_options(components, components_req);

  WordRequest sigma_req;
  bool dot = false;
  bool json_out = false;
  bool with_split = false;
  std::optional<int> threshold;
  auto* sigma = app.add_subcommand("sigma", "print the Sigma graph of a word");
  add_word_options(sigma, sigma_req);
  auto* dot_flag = sigma->add_flag("--dot", dot, "Graphviz output");
  sigma->add_flag("--json", json_out, "JSON output (default)")->excludes(dot_flag);
  sigma->add_flag("--split", with_split, "attach the standard U/L split");
  sigma->add_option("--threshold", threshold, "attach the split U = levels 1..t");

  std::string orbits_input = "-";
  bool with_representatives = false;
  auto* orbits = app.add_subcommand("orbits", "enumerate a raw transvection set given as JSON");
  orbits->add_option("--input", orbits_input, "file or - for stdin")->capture_default_str();
  orbits->add_flag("--representatives", with_representatives, "include orbit minima");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the oracle checks");
  verify->add_option("--scope", verify_opts.scope,
                     "all, paths, ladders, table, theorem3, lemma1 or invariance")
      ->capture_default_str();
  verify->add_option("--max", verify_opts.max_path, "largest path length")->capture_default_str();
  verify->add_option("--max-rank", verify_opts.max_rank, "largest rank in the table")
      ->capture_default_str();
  verify->add_option("--walks", verify_opts.walks, "braid walks per fixture")->capture_default_str();
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "JSON instead of the pass/fail table");

  WordRequest invariance_req;
  int walks = 10;
  int steps = 100;
  auto* invariance = app.add_subcommand("invariance", "compare counts across braid-equivalent words");
  add_word_options(invariance, invariance_req);
  invariance->add_option("--walks", walks)->capture_default_str();
  invariance->add_option("--steps", steps, "braid moves per walk")->capture_default_str();

  auto* table = app.add_subcommand("table", "known component counts for (e, w0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    const auto opts = g.enumeration();
    const bool timing = !g.no_timing;

    if (*components) {
      const auto report = run_components(components_req, opts);
      if (g.format == "csv") {
        std::cout << to_csv(report, timing);
      } else {
        std::cout << to_json(report, timing).dump(2) << '\n';
      }
      std::cerr << report.type_label << ": d=" << report.d << " orbits=" << report.summary.orbit_count
                << '\n';
      return kOk;
    }
    if (*sigma) {
      const auto graph = run_sigma(sigma_req, with_split, threshold);
      if (dot) {
        std::cout << to_dot(graph);
      } else {
        std::cout << bruhat::to_json(graph).dump(2) << '\n';
      }
      return kOk;
    }
    if (*orbits) {
      auto input = Json::parse(read_input(orbits_input));
      auto out = run_orbits(input, opts);
      if (!with_representatives) out.erase("representatives");
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    if (*verify) {
      verify_opts.seed = g.seed;
      verify_opts.enumeration = opts;
      const auto results = run_verify(verify_opts);
      if (verify_json) {
        std::cout << results_to_json(results).dump(2) << '\n';
      } else {
        std::cout << format_results(results);
      }
      return all_passed(results) ? kOk : kFailure;
    }
    if (*invariance) {
      const auto report = run_invariance(invariance_req, walks, steps, g.seed, opts);
      std::cout << to_json(report).dump(2) << '\n';
      if (!report.consistent) {
        std::cerr << "orbit counts differ across braid-equivalent words\n";
        return kFailure;
      }
      return kOk;
    }
    if (*table) {
      const auto rows = known_counts(g.max_dimension);
      if (g.format == "csv") {
        std::cout << to_csv(rows);
      } else {
        std::cout << bruhat::to_json(rows).dump(2) << '\n';
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kFailure;
}
