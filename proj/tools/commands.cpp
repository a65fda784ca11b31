#include "commands.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "bruhat/error.hpp"
#include "bruhat/fixtures.hpp"
#include "bruhat/parse.hpp"
#include "bruhat/special.hpp"

namespace bruhat::cli {

namespace {

WeylElement product(const Word& word, const CartanSpec& cartan) {
  auto w = WeylElement::identity(cartan.rank());
  for (int i : word) w.multiply_simple(i, cartan);
  return w;
}

Word resolve_element(const std::string& element, const std::optional<std::string>& explicit_word,
                     const CartanSpec& cartan, const char* which) {
  Word base = parse_word(element, cartan);
  if (!is_reduced(base, cartan)) {
    throw NotReducedError(std::string(which) + " word '" + word_to_string(base) + "' is not reduced");
  }
  if (!explicit_word) return base;
  Word word = parse_word(*explicit_word, cartan);
  if (!is_reduced(word, cartan)) {
    throw NotReducedError(std::string(which) + " word '" + word_to_string(word) + "' is not reduced");
  }
  if (word.size() != base.size() || !(product(word, cartan) == product(base, cartan))) {
    throw NotReducedError(std::string(which) + " word '" + word_to_string(word) +
                          "' is not a reduced word for " + element);
  }
  return word;
}

Json word_json(const Word& word) {
  Json out = Json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

std::string histogram_text(const OrbitSummary& s) {
  std::string out;
  for (const auto& [size, mult] : s.histogram) {
    if (!out.empty()) out += ';';
    out += std::to_string(size) + ':' + std::to_string(mult);
  }
  return out;
}

// Enumeration plus the two identities every run must satisfy.
struct CheckedRun {
  OrbitSummary summary;
  bool identities_hold = true;
  std::string failure;
};

CheckedRun checked_enumerate(const TransvectionSet& action, const EnumerationOptions& options) {
  CheckedRun run{enumerate_orbits(action, options), true, {}};
  const std::uint64_t states = std::uint64_t{1} << action.dimension();
  if (run.summary.total_states() != states) {
    run.identities_hold = false;
    run.failure = "partition identity violated";
  }
  if (action.is_linear()) {
    const auto fixed = fixed_points_linear(action);
    if (fixed.count != run.summary.fixed_points) {
      run.identities_hold = false;
      run.failure += (run.failure.empty() ? "" : "; ") + std::string("GF(2) kernel count ") +
                     std::to_string(fixed.count) + " != fixed points " +
                     std::to_string(run.summary.fixed_points);
    }
  }
  return run;
}

CheckResult make(std::string scope, std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(scope), std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                     std::move(detail)};
}

void verify_paths(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  for (int m = 1; m <= opt.max_path; ++m) {
    const auto run = checked_enumerate(path_graph(m).action, opt.enumeration);
    const bool ok = run.identities_hold && run.summary.orbit_count == path_orbit_count(m) &&
                    run.summary.fixed_points == 2;
    out.push_back(make("paths", "m=" + std::to_string(m), ok,
                       "orbits=" + std::to_string(run.summary.orbit_count) +
                           " fixed=" + std::to_string(run.summary.fixed_points) + " " + run.failure));
  }
}

void verify_ladders(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  for (int m = 3; m <= 12; ++m) {
    const auto ladder = ladder_graph(m);
    const auto run = checked_enumerate(ladder.action, opt.enumeration);
    bool ok = run.identities_hold && run.summary.orbit_count == 12 && run.summary.fixed_points == 4;
    std::string detail = "orbits=" + std::to_string(run.summary.orbit_count) +
                         " fixed=" + std::to_string(run.summary.fixed_points);

    const auto labels = orbit_labels(ladder.action, opt.enumeration);
    std::map<std::uint32_t, std::uint64_t> sizes;
    std::map<std::uint32_t, int> invariant;  // bit0 = x1, bit1 = x2, bit2 = Q_S
    bool constant = true;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      ++sizes[labels[x]];
      const int value = static_cast<int>(x & 1U) | static_cast<int>(x & 2U) |
                        (q_s(static_cast<State>(x), ladder) ? 4 : 0);
      const auto [it, inserted] = invariant.emplace(labels[x], value);
      if (!inserted && it->second != value) constant = false;
    }
    if (!constant) detail += " invariant-not-constant";
    ok = ok && constant;

    std::set<std::uint32_t> witness_orbits;
    bool witnesses_nontrivial = true;
    for (State w : ladder_witnesses(m)) {
      witness_orbits.insert(labels[w]);
      witnesses_nontrivial = witnesses_nontrivial && sizes[labels[w]] > 1;
    }
    if (witness_orbits.size() != 8 || !witnesses_nontrivial) detail += " witnesses-not-distinct";
    ok = ok && witness_orbits.size() == 8 && witnesses_nontrivial;

    if (m <= 8) {
      std::set<std::uint32_t> reached;
      for (State x = 1; x < 16; ++x) reached.insert(labels[x]);
      reached.insert(labels[ladder_special_vector(m)]);
      bool covered = true;
      for (const auto& [label, size] : sizes) {
        if (size > 1 && !reached.contains(label)) covered = false;
      }
      if (!covered) detail += " reachability-failed";
      ok = ok && covered;
    }
    out.push_back(make("ladders", "m=" + std::to_string(m), ok, detail + " " + run.failure));
  }
}

void verify_table(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  for (const auto& entry : known_counts(opt.enumeration.max_dimension)) {
    const auto name = entry.label.to_string();
    if (entry.label.rank > opt.max_rank) continue;
    if (entry.reference_only) {
      out.push_back({"table", name, CheckStatus::Skipped,
                     "reference-only: d=" + std::to_string(entry.dimension) +
                         " expected=" + std::to_string(entry.count)});
      continue;
    }
    const auto fixture = e_w0_fixture(entry.label);
    const auto graph = fixture_sigma(fixture);
    const auto run = checked_enumerate(transvections_from_sigma(graph), opt.enumeration);
    const bool ok = run.identities_hold && run.summary.orbit_count == entry.count;
    out.push_back(make("table", name, ok,
                       "d=" + std::to_string(graph.size()) +
                           " orbits=" + std::to_string(run.summary.orbit_count) +
                           " expected=" + std::to_string(entry.count) + " " + run.failure));
  }
}

void verify_theorem3(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  std::vector<std::string> labels = {"B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "F4"};
  for (const auto& text : labels) {
    const auto label = TypeLabel::parse(text);
    if (positive_root_count(label) > opt.enumeration.max_dimension) {
      out.push_back({"theorem3", text, CheckStatus::Skipped, "d over the dimension cap"});
      continue;
    }
    const auto graph = fixture_sigma(e_w0_fixture(label));
    const auto analysis = analyze_split(graph, opt.enumeration);
    const auto run = checked_enumerate(transvections_from_sigma(graph), opt.enumeration);
    const int n = analysis.rank;
    const int t = analysis.threshold;
    bool ok = run.identities_hold && analysis.sigma_b_connected &&
              analysis.predicted == run.summary.orbit_count &&
              analysis.upper_fixed == (std::uint64_t{1} << t) &&
              analysis.lower_fixed == (std::uint64_t{1} << (n - t));
    if (text == "C3") ok = ok && analysis.n_upper == 2 && analysis.n_lower == 7;
    if (text == "B3") ok = ok && analysis.n_upper == 7 && analysis.n_lower == 2;
    std::string detail = "t=" + std::to_string(t) + " N_U=" + std::to_string(analysis.n_upper) +
                         " N_L=" + std::to_string(analysis.n_lower) +
                         " predicted=" + std::to_string(analysis.predicted) +
                         " enumerated=" + std::to_string(run.summary.orbit_count) +
                         " connected=" + (analysis.sigma_b_connected ? "yes" : "no");
    if (n >= 4 && label.family != Family::F) {
      const auto big = label.family == Family::C ? analysis.n_lower : analysis.n_upper;
      detail += " E6-consequence(2^n)=" +
                std::string(big == (std::uint64_t{1} << n) ? "holds" : "fails");
    }
    out.push_back(make("theorem3", text, ok, detail + " " + run.failure));
  }
}

void verify_lemma1(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  for (const char* text : {"B2", "C3", "B3", "C4"}) {
    const auto graph = fixture_sigma(e_w0_fixture(TypeLabel::parse(text)));
    const auto lower = graph.lower();
    if (lower.size() > 12) {
      out.push_back({"lemma1", text, CheckStatus::Skipped, "|L| > 12"});
      continue;
    }
    const auto linear = affine_orbits(graph, 0, opt.enumeration);
    const std::uint64_t expected =
        (std::uint64_t{1} << graph.split().threshold()) + linear.nontrivial;
    bool ok = linear.orbit_count == expected;
    std::uint64_t mismatches = 0;
    const std::uint64_t slices = std::uint64_t{1} << lower.size();
    for (std::uint64_t bits = 0; bits < slices; ++bits) {
      State nu = 0;
      for (std::size_t i = 0; i < lower.size(); ++i) {
        if ((bits >> i) & 1U) nu |= State{1} << lower[i];
      }
      if (affine_orbits(graph, nu, opt.enumeration).orbit_count != expected) ++mismatches;
    }
    ok = ok && mismatches == 0;
    out.push_back(make("lemma1", text, ok,
                       "2^t+N_U=" + std::to_string(expected) + " slices=" + std::to_string(slices) +
                           " mismatches=" + std::to_string(mismatches)));
  }
}

void verify_invariance(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  struct Case {
    const char* type;
    const char* u;
    const char* v;
  };
  const Case cases[] = {
      {"A1", "e", "w0"},   {"A2", "e", "w0"},   {"A3", "e", "w0"},   {"A4", "e", "w0"},
      {"A5", "e", "w0"},   {"B2", "e", "w0"},   {"B3", "e", "w0"},   {"B4", "e", "w0"},
      {"C2", "e", "w0"},   {"C3", "e", "w0"},   {"C4", "e", "w0"},   {"D4", "e", "w0"},
      {"G2", "e", "w0"},   {"A2", "w0", "w0"},  {"B2", "w0", "w0"},  {"G2", "w0", "w0"},
      {"C3", "1 2", "w0"}, {"A3", "w0", "1 2 3"},
  };
  for (const auto& c : cases) {
    WordRequest request;
    request.type = c.type;
    request.u = c.u;
    request.v = c.v;
    const auto report = run_invariance(request, opt.walks, opt.walk_steps, opt.seed, opt.enumeration);
    bool ok = report.consistent;
    if (std::string(c.u) == "e" && std::string(c.v) == "w0") {
      ok = ok && known_count(TypeLabel::parse(c.type)) == report.base_count;
    }
    out.push_back(make("invariance", std::string(c.type) + " (" + c.u + "," + c.v + ")", ok,
                       "count=" + std::to_string(report.base_count) +
                           " variants=" + std::to_string(report.counts.size())));
  }
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotReducedError*>(&e)) return kNotReduced;
  if (dynamic_cast<const DimensionTooLarge*>(&e)) return kOverCap;
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kParse;
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return kParse;
  return kFailure;
}

ResolvedWord resolve(const WordRequest& request) {
  auto cartan = cartan_matrix(request.type);
  if (request.signed_word) {
    auto word = parse_signed_word(*request.signed_word, cartan);
    require_reduced(word, cartan);
    auto u = word.u_part();
    auto v = word.v_part();
    return ResolvedWord{std::move(cartan), std::move(u), std::move(v), std::move(word)};
  }
  Word u = resolve_element(request.u, request.u_word, cartan, "u");
  Word v = resolve_element(request.v, request.v_word, cartan, "v");
  const auto pattern =
      request.shuffle ? parse_pattern(*request.shuffle) : default_pattern(u.size(), v.size());
  auto word = make_signed_word(u, v, pattern, cartan);
  return ResolvedWord{std::move(cartan), std::move(u), std::move(v), std::move(word)};
}

RunReport run_components(const WordRequest& request, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto resolved = resolve(request);
  const auto graph = build_sigma(resolved.word, resolved.cartan);

  RunReport report;
  report.type_label = resolved.cartan.label().to_string();
  report.u_word = resolved.u;
  report.v_word = resolved.v;
  report.signed_word = resolved.word;
  report.d = graph.size();
  const auto bounded = graph.bounded();
  report.bounded_count = static_cast<int>(bounded.size());
  report.sigma_b_connected = is_connected(graph, bounded);

  const auto action = transvections_from_sigma(graph);
  report.summary = enumerate_orbits(action, options);
  report.gf2_fixed_points = fixed_points_linear(action).count;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const RunReport& report, bool with_timing) {
  Json out;
  out["type_label"] = report.type_label;
  out["u_word"] = word_json(report.u_word);
  out["v_word"] = word_json(report.v_word);
  out["signed_word"] = bruhat::to_json(report.signed_word);
  out["d"] = report.d;
  out["bounded_count"] = report.bounded_count;
  out["sigma_b_connected"] = report.sigma_b_connected;
  out["orbit_count"] = report.summary.orbit_count;
  out["fixed_points"] = report.summary.fixed_points;
  out["nontrivial"] = report.summary.nontrivial;
  out["gf2_fixed_points"] = report.gf2_fixed_points;
  Json hist = Json::array();
  for (const auto& [size, mult] : report.summary.histogram) hist.push_back(Json::array({size, mult}));
  out["histogram"] = std::move(hist);
  out["elapsed_ms"] = with_timing ? static_cast<std::int64_t>(report.elapsed_ms + 0.5) : 0;
  out["peak_state_bytes"] = report.summary.peak_state_bytes;
  return out;
}

std::string to_csv(const RunReport& report, bool with_timing) {
  std::ostringstream out;
  out << "type_label,u_word,v_word,signed_word,d,bounded_count,sigma_b_connected,orbit_count,"
         "fixed_points,histogram,elapsed_ms,peak_state_bytes\n";
  out << report.type_label << ",\"" << word_to_string(report.u_word) << "\",\""
      << word_to_string(report.v_word) << "\",\"" << report.signed_word.to_string() << "\","
      << report.d << ',' << report.bounded_count << ','
      << (report.sigma_b_connected ? "true" : "false") << ',' << report.summary.orbit_count << ','
      << report.summary.fixed_points << ",\"" << histogram_text(report.summary) << "\","
      << (with_timing ? static_cast<std::int64_t>(report.elapsed_ms + 0.5) : 0) << ','
      << report.summary.peak_state_bytes << '\n';
  return out.str();
}

SigmaGraph run_sigma(const WordRequest& request, bool with_split, std::optional<int> threshold) {
  const auto resolved = resolve(request);
  std::optional<LevelSplit> split;
  if (threshold) {
    split = threshold_split(resolved.cartan.rank(), *threshold);
  } else if (with_split) {
    split = standard_split(resolved.cartan);
  }
  return build_sigma(resolved.word, resolved.cartan, std::move(split));
}

Json run_orbits(const Json& input, const EnumerationOptions& options) {
  const auto action = transvection_set_from_json(input);
  Json out = bruhat::to_json(enumerate_orbits(action, options));
  if (action.is_linear()) out["gf2_fixed_points"] = fixed_points_linear(action).count;
  return out;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "FAIL";
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  static const std::set<std::string> scopes = {"all",      "paths",  "ladders",   "table",
                                               "theorem3", "lemma1", "invariance"};
  if (!scopes.contains(options.scope)) throw ParseError("unknown verify scope '" + options.scope + "'");
  std::vector<CheckResult> out;
  const bool all = options.scope == "all";
  if (all || options.scope == "paths") verify_paths(options, out);
  if (all || options.scope == "ladders") verify_ladders(options, out);
  if (all || options.scope == "table") verify_table(options, out);
  if (all || options.scope == "theorem3") verify_theorem3(options, out);
  if (all || options.scope == "lemma1") verify_lemma1(options, out);
  if (all || options.scope == "invariance") verify_invariance(options, out);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return false;
  }
  return true;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    out << to_string(r.status) << "  " << r.scope << "  " << r.name << "  " << r.detail << '\n';
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Fail) ++fail;
    if (r.status == CheckStatus::Skipped) ++skip;
  }
  out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

Json results_to_json(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    out.push_back(Json{{"scope", r.scope}, {"name", r.name}, {"status", to_string(r.status)},
                       {"detail", r.detail}});
  }
  return out;
}

InvarianceReport run_invariance(const WordRequest& request, int walks, int steps, std::uint64_t seed,
                                const EnumerationOptions& options) {
  const auto resolved = resolve(request);
  InvarianceReport report;
  report.type_label = resolved.cartan.label().to_string();
  report.u_word = resolved.u;
  report.v_word = resolved.v;
  report.seed = seed;
  report.walks = walks;
  report.steps = steps;

  const auto base = build_sigma(resolved.word, resolved.cartan);
  report.base_count = enumerate_orbits(transvections_from_sigma(base), options).orbit_count;

  WalkRng rng(seed);
  for (int k = 0; k < walks; ++k) {
    const Word u = braid_walk(resolved.u, resolved.cartan, steps, rng);
    const Word v = braid_walk(resolved.v, resolved.cartan, steps, rng);
    const auto pattern = random_pattern(u.size(), v.size(), rng);
    auto word = make_signed_word(u, v, pattern, resolved.cartan);
    const auto graph = build_sigma(word, resolved.cartan);
    const auto count = enumerate_orbits(transvections_from_sigma(graph), options).orbit_count;
    report.consistent = report.consistent && count == report.base_count;
    report.counts.push_back(count);
    report.variants.push_back(std::move(word));
  }
  return report;
}

Json to_json(const InvarianceReport& report) {
  Json out;
  out["type_label"] = report.type_label;
  out["u_word"] = word_json(report.u_word);
  out["v_word"] = word_json(report.v_word);
  out["seed"] = report.seed;
  out["walks"] = report.walks;
  out["steps"] = report.steps;
  out["base_count"] = report.base_count;
  Json variants = Json::array();
  for (std::size_t k = 0; k < report.variants.size(); ++k) {
    variants.push_back(Json{{"signed_word", bruhat::to_json(report.variants[k])},
                            {"orbit_count", report.counts[k]}});
  }
  out["variants"] = std::move(variants);
  out["consistent"] = report.consistent;
  return out;
}

}  // namespace bruhat::cli
