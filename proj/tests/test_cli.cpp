#include <doctest.h>

#include "bruhat/error.hpp"
#include "commands.hpp"

using namespace bruhat;
using namespace bruhat::cli;

namespace {

WordRequest request(const char* type, const char* u = "e", const char* v = "w0") {
  WordRequest r;
  r.type = type;
  r.u = u;
  r.v = v;
  return r;
}

int code_of(const WordRequest& r) {
  try {
    run_components(r, {});
  } catch (const std::exception& e) {
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace

TEST_CASE("components for A1, B3 and F4") {
  CHECK(run_components(request("A1"), {}).summary.orbit_count == 2);
  CHECK(run_components(request("B3"), {}).summary.orbit_count == 30);

  auto f4 = request("F4");
  f4.v_word = "1 2 3 4 ;x6";
  const auto report = run_components(f4, {});
  CHECK(report.d == 24);
  CHECK(report.summary.orbit_count == 80);
  CHECK(report.sigma_b_connected);
  CHECK(report.gf2_fixed_points == report.summary.fixed_points);
  CHECK(report.summary.total_states() == (std::uint64_t{1} << 24));
}

TEST_CASE("report JSON is deterministic without timing") {
  const auto a = to_json(run_components(request("C3"), {}), false).dump();
  const auto b = to_json(run_components(request("C3"), {}), false).dump();
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["orbit_count"] == 30);
  CHECK(j["elapsed_ms"] == 0);
  CHECK(j["type_label"] == "C3");
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"type_label", "u_word", "v_word", "signed_word", "d",
                                         "bounded_count", "sigma_b_connected", "orbit_count",
                                         "fixed_points", "nontrivial", "gf2_fixed_points", "histogram",
                                         "elapsed_ms", "peak_state_bytes"});
  const auto csv = to_csv(run_components(request("B2"), {}), false);
  CHECK(csv.rfind("type_label,u_word,v_word,signed_word,d,", 0) == 0);
  CHECK(csv.find("B2,\"\",\"1 2 1 2\",\"+1 +2 +1 +2\",4,2,true,8,") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto bad = request("A2", "1 1");
  CHECK(code_of(bad) == kNotReduced);

  auto wrong = request("A2", "e", "w0");
  wrong.v_word = "1 2";
  CHECK(code_of(wrong) == kNotReduced);

  auto other = request("A2", "e", "w0");
  other.v_word = "2 1 2";
  CHECK(code_of(other) == kOk);

  CHECK(code_of(request("A7")) == kOverCap);
  CHECK(code_of(request("Q3")) == kParse);
  CHECK(code_of(request("A2", "1 9")) == kParse);

  auto shuffled = request("A2", "1", "w0");
  shuffled.shuffle = "0111";
  CHECK(code_of(shuffled) == kOk);
  shuffled.shuffle = "011";
  CHECK(code_of(shuffled) != kOk);
}

TEST_CASE("signed word override") {
  auto r = request("B2");
  r.signed_word = "-1 +2 -2 +1";
  const auto resolved = resolve(r);
  CHECK(resolved.u == Word{0, 1});
  CHECK(resolved.v == Word{1, 0});
  CHECK(resolved.word.to_string() == "-1 +2 -2 +1");
}

TEST_CASE("sigma command") {
  auto r = request("B2");
  r.signed_word = "+1 +2 +1 +2";
  const auto j = to_json(run_sigma(r, false, std::nullopt));
  CHECK(j["edges"].size() == 4);
  CHECK(j["bounded"] == Json::array({3, 4}));
  CHECK_FALSE(j.contains("partitions"));
  const auto split = to_json(run_sigma(r, true, std::nullopt));
  CHECK(split["partitions"]["t"] == 1);
  const auto one = to_json(run_sigma(request("A1"), false, std::nullopt));
  CHECK(one["d"] == 1);
  CHECK(one["edges"].empty());
}

TEST_CASE("orbits command") {
  const auto out = run_orbits(Json::parse(R"({"d": 3, "generators": [{"target": 2, "mask": [1, 3]}]})"), {});
  CHECK(out["d"] == 3);
  CHECK(out["orbit_count"] == 6);
  CHECK(out["fixed_points"] == 4);
  CHECK(out["gf2_fixed_points"] == 4);
}

TEST_CASE("invariance command") {
  struct Row {
    const char* type;
    std::uint64_t count;
  };
  for (const auto& row : {Row{"B2", 8}, Row{"A2", 6}, Row{"C3", 30}}) {
    CAPTURE(row.type);
    const auto report = run_invariance(request(row.type), 10, 100, 1, {});
    CHECK(report.consistent);
    CHECK(report.base_count == row.count);
    CHECK(report.counts == std::vector<std::uint64_t>(10, row.count));
  }
  const auto a = to_json(run_invariance(request("B3"), 5, 40, 9, {})).dump();
  const auto b = to_json(run_invariance(request("B3"), 5, 40, 9, {})).dump();
  CHECK(a == b);
}

TEST_CASE("verify scopes") {
  VerifyOptions opts;
  opts.scope = "paths";
  const auto paths = run_verify(opts);
  CHECK(paths.size() == 16);
  CHECK(all_passed(paths));

  opts.scope = "table";
  opts.max_rank = 3;
  const auto table = run_verify(opts);
  CHECK(all_passed(table));
  CHECK(format_results(table).find("summary:") != std::string::npos);
  CHECK(results_to_json(table).size() == table.size());

  opts.scope = "nonsense";
  CHECK_THROWS_AS(run_verify(opts), ParseError);
}
