#include <doctest.h>

#include <algorithm>

#include "bruhat/error.hpp"
#include "bruhat/fixtures.hpp"
#include "bruhat/parse.hpp"
#include "bruhat/serialize.hpp"
#include "bruhat/sigma.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void check_against_oracle(const SigmaGraph& g) {
  const auto o = oracle::sigma(g.word(), g.cartan());
  std::set<std::pair<int, int>> horizontal, inclined;
  for (const auto& e : g.edges()) {
    REQUIRE(e.first < e.second);
    (e.horizontal() ? horizontal : inclined).insert({e.first, e.second});
  }
  CHECK(horizontal == o.horizontal);
  CHECK(inclined == o.inclined);
  for (int k = 0; k < g.size(); ++k) {
    CHECK(g.previous(k) == o.prev[k]);
    CHECK(as_set(g.mask(k)) == o.masks[k]);
  }
}

}  // namespace

TEST_CASE("B2 golden fixture") {
  // Hand-derived for w = (+1,+2,+1,+2) with a12 = -2, a21 = -1.
  const auto c = cartan_matrix("B2");
  const auto g = build_sigma(parse_signed_word("+1 +2 +1 +2", c), c);
  CHECK(g.size() == 4);
  CHECK(g.previous(0) == SigmaGraph::kNone);
  CHECK(g.previous(1) == SigmaGraph::kNone);
  CHECK(g.previous(2) == 0);
  CHECK(g.previous(3) == 1);
  CHECK(g.bounded() == std::vector<int>{2, 3});

  std::vector<std::tuple<int, int, EdgeRule>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.first, e.second, e.rule);
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<std::tuple<int, int, EdgeRule>>{{0, 2, EdgeRule::Horizontal},
                                                             {1, 2, EdgeRule::SameSign},
                                                             {1, 3, EdgeRule::Horizontal},
                                                             {2, 3, EdgeRule::SameSign}});
  CHECK_FALSE(g.omega(0, 1));
  CHECK(g.omega(1, 0));
  CHECK(g.mask(2) == std::vector<int>{0, 1, 3});
  CHECK(g.mask(3) == std::vector<int>{1});
}

TEST_CASE("single letter") {
  const auto c = cartan_matrix("A1");
  const auto g = build_sigma(parse_signed_word("+1", c), c);
  CHECK(g.size() == 1);
  CHECK(g.edges().empty());
  CHECK(g.bounded().empty());
  CHECK(g.unbounded() == std::vector<int>{0});
}

TEST_CASE("edges match the definitions on random shuffles") {
  WalkRng rng(2024);
  struct Case {
    const char* type;
    const char* u;
    const char* v;
  };
  const Case cases[] = {{"A3", "w0", "w0"}, {"B3", "1 2 3", "w0"}, {"C3", "w0", "2 3 2"},
                        {"G2", "w0", "w0"}, {"D4", "1 2 4", "w0"}, {"F4", "3 4 3", "w0"},
                        {"Wt(4,2)", "1 2 3 4", "2 3 2"}};
  for (const auto& c : cases) {
    CAPTURE(c.type);
    const auto cartan = cartan_matrix(c.type);
    for (int k = 0; k < 20; ++k) {
      const auto u = braid_walk(parse_word(c.u, cartan), cartan, 20, rng);
      const auto v = braid_walk(parse_word(c.v, cartan), cartan, 20, rng);
      const auto word = make_signed_word(u, v, random_pattern(u.size(), v.size(), rng), cartan);
      CAPTURE(word.to_string());
      check_against_oracle(build_sigma(word, cartan));
    }
  }
}

TEST_CASE("structural invariants") {
  for (const char* label : {"A5", "B4", "C4", "D5", "F4", "G2"}) {
    CAPTURE(label);
    const auto g = fixture_sigma(e_w0_fixture(TypeLabel::parse(label)));
    const auto& c = g.cartan();
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges()) {
      CHECK(seen.insert({e.first, e.second}).second);
      if (e.horizontal()) {
        CHECK(g.level(e.first) == g.level(e.second));
        CHECK(g.previous(e.second) == e.first);
      } else {
        CHECK(c.adjacent(g.level(e.first), g.level(e.second)));
      }
    }
    for (int k = 0; k < g.size(); ++k) {
      CHECK(g.is_bounded(k) == (g.previous(k) >= 0));
      for (int r : g.mask(k)) CHECK(g.has_edge(k, r));
    }
    CHECK(g.bounded().size() + g.unbounded().size() == static_cast<std::size_t>(g.size()));
    CHECK(static_cast<int>(g.unbounded().size()) == c.rank());
  }
}

TEST_CASE("C4 word 1234 repeated four times") {
  const auto g = fixture_sigma(e_w0_fixture(TypeLabel::parse("C4")));
  check_against_oracle(g);
  CHECK(g.size() == 16);
  CHECK(g.bounded().size() == 12);
  const auto b = g.bounded();
  CHECK(is_connected(g, b));
  // U is level 4 only and its graph is a path.
  CHECK(g.upper() == std::vector<int>{3, 7, 11, 15});
  CHECK(g.lower().size() == 12);
  CHECK(g.bounded_upper() == std::vector<int>{7, 11, 15});
  CHECK(g.free_upper() == std::vector<int>{3});
  CHECK(g.free_lower() == std::vector<int>{0, 1, 2});
  const auto u = g.upper();
  for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(g.has_edge(u[i], u[i + 1]));
}

TEST_CASE("split accessors") {
  const auto c = cartan_matrix("A3");
  const auto g = build_sigma(parse_signed_word("+1 +2 +1", c), c);
  CHECK_FALSE(g.has_split());
  CHECK_THROWS(g.split());
  const auto t = build_sigma(parse_signed_word("+1 +2 +1", c), c, threshold_split(3, 1));
  CHECK(t.upper() == std::vector<int>{0, 2});
  CHECK(t.lower() == std::vector<int>{1});
}

TEST_CASE("non-reduced words are rejected") {
  const auto c = cartan_matrix("A2");
  CHECK_THROWS_AS(build_sigma(parse_signed_word("+1 +1", c), c), NotReducedError);
  CHECK_THROWS_AS(build_sigma(parse_signed_word("-1 +2 -1 -2 -1 -2", c), c), NotReducedError);
}

TEST_CASE("DOT and JSON output") {
  const auto c = cartan_matrix("B2");
  const auto g = build_sigma(parse_signed_word("+1 +2 +1 +2", c), c, standard_split(c));
  const auto dot = to_dot(g);
  CHECK(dot.rfind("graph sigma {", 0) == 0);
  CHECK(dot.find("3:1+") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);

  const auto j = to_json(g);
  CHECK(j["d"] == 4);
  CHECK(j["lminus"] == Json::array({0, 0, 1, 2}));
  CHECK(j["bounded"] == Json::array({3, 4}));
  CHECK(j["masks"][2] == Json::array({1, 2, 4}));
  CHECK(j["masks"][3] == Json::array({2}));
  CHECK(j["partitions"]["U"] == Json::array({1, 3}));
  CHECK(j["partitions"]["L"] == Json::array({2, 4}));
  CHECK(j.dump() == to_json(g).dump());
}
