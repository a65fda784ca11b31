#include "bruhat/special.hpp"

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

State bit(int k) { return State{1} << k; }

}  // namespace

PathGraph path_graph(int m) {
  if (m < 1) throw InvalidArgument("path graph needs m >= 1");
  std::vector<Transvection> gens;
  for (int j = 1; j < m; ++j) {
    State mask = bit(j - 1);
    if (j + 1 < m) mask |= bit(j + 1);
    gens.push_back({j, mask, false});
  }
  return PathGraph{m, TransvectionSet(m, std::move(gens))};
}

LadderGraph ladder_graph(int m) {
  if (m < 1) throw InvalidArgument("ladder graph needs m >= 1");
  const int n = 2 * m;
  LadderGraph ladder;
  ladder.m = m;
  for (int i = 1; i <= m - 1; ++i) {
    // 1-based (2i, 2i+2), (2i-1, 2i+1), (2i+1, 2i+2), (2i, 2i+1).
    ladder.edges.emplace_back(2 * i - 1, 2 * i + 1);
    ladder.edges.emplace_back(2 * i - 2, 2 * i);
    ladder.edges.emplace_back(2 * i, 2 * i + 1);
    ladder.edges.emplace_back(2 * i - 1, 2 * i);
  }
  std::vector<Transvection> gens;
  for (int j = 2; j < n; ++j) {
    State mask = 0;
    for (int offset : {-2, -1, 1, 2}) {
      const int k = j + offset;
      if (k >= 0 && k < n) mask |= bit(k);
    }
    gens.push_back({j, mask, false});
  }
  ladder.action = TransvectionSet(n, std::move(gens));
  return ladder;
}

std::uint64_t path_orbit_count(int m) {
  if (m < 1) throw InvalidArgument("path graph needs m >= 1");
  return static_cast<std::uint64_t>(m) + 1;
}

OrbitCount ladder_orbit_count(int m, const EnumerationOptions& options) {
  if (m > 3) return {12, 4};
  const auto summary = enumerate_orbits(ladder_graph(m).action, options);
  return {summary.orbit_count, summary.fixed_points};
}

bool q_s(State x, const LadderGraph& ladder) {
  bool value = __builtin_parityll(x) != 0;
  for (const auto& [a, b] : ladder.edges) {
    value ^= ((x >> a) & (x >> b) & 1U) != 0;
  }
  return value;
}

std::vector<State> ladder_witnesses(int m) {
  if (m < 3) throw InvalidArgument("ladder witnesses need m >= 3");
  return {
      bit(0) | bit(1) | bit(2) | bit(3),  // (1,1,1,1,0,...)
      bit(0) | bit(1) | bit(2),           // (1,1,1,0,0,...)
      bit(0) | bit(3),                    // (1,0,0,1,0,...)
      bit(0),                             // (1,0,0,0,0,...)
      bit(1) | bit(2) | bit(3),           // (0,1,1,1,0,...)
      bit(1) | bit(2),                    // (0,1,1,0,0,...)
      bit(2),                             // (0,0,1,0,0,...)
      bit(2) | bit(3) | bit(4),           // (0,0,1,1,1,0,...)
  };
}

State ladder_special_vector(int m) {
  if (m < 3) throw InvalidArgument("ladder special vector needs m >= 3");
  return bit(2) | bit(3) | bit(4);
}

std::uint64_t theorem3_count(int n, int t, std::uint64_t n_upper, std::uint64_t n_lower) {
  if (t < 1 || t > n - 1) throw InvalidArgument("threshold must lie in [1, n-1]");
  return pow2(n) + pow2(n - t) * n_upper + pow2(t) * n_lower;
}

std::uint64_t theorem4_count(int m, int n) {
  if (m < 1 || n < 2) throw InvalidArgument("theorem4_count needs m >= 1 and n >= 2");
  return static_cast<std::uint64_t>(m + 5) * pow2(n - 1);
}

std::optional<std::uint64_t> known_count(const TypeLabel& label) {
  const int n = label.rank;
  switch (label.family) {
    case Family::A: {
      static constexpr std::uint64_t small[] = {0, 2, 6, 20, 52};
      if (n >= 1 && n <= 4) return small[n];
      return 3 * pow2(n);
    }
    case Family::B:
    case Family::C:
      if (n == 2) return 8;
      if (n == 3) return 30;
      return static_cast<std::uint64_t>(n + 5) * pow2(n - 1);
    case Family::D:
    case Family::E:
      return 3 * pow2(n);
    case Family::F: return 80;
    case Family::G: return 11;
    case Family::Wt:
    case Family::Custom: return std::nullopt;
  }
  return std::nullopt;
}

int positive_root_count(const TypeLabel& label) {
  const int n = label.rank;
  switch (label.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::Wt:
    case Family::Custom: break;
  }
  throw InvalidArgument("no positive root count for " + label.to_string());
}

std::vector<KnownCount> known_counts(int max_dimension) {
  std::vector<TypeLabel> labels;
  auto add = [&labels](Family f, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) labels.push_back(TypeLabel{f, n, 0});
  };
  add(Family::A, 1, 8);
  add(Family::B, 2, 8);
  add(Family::C, 2, 8);
  add(Family::D, 4, 8);
  add(Family::E, 6, 8);
  add(Family::F, 4, 4);
  add(Family::G, 2, 2);

  std::vector<KnownCount> out;
  out.reserve(labels.size());
  for (const auto& label : labels) {
    KnownCount entry;
    entry.label = label;
    entry.count = *known_count(label);
    entry.dimension = positive_root_count(label);
    entry.reference_only = entry.dimension > max_dimension;
    out.push_back(entry);
  }
  return out;
}

SplitAnalysis analyze_split(const SigmaGraph& graph, const EnumerationOptions& options) {
  const auto& split = graph.split();
  SplitAnalysis out;
  out.rank = graph.cartan().rank();
  out.threshold = split.threshold();
  const auto bounded = graph.bounded();
  out.sigma_b_connected = is_connected(graph, bounded);

  const auto upper = graph.upper();
  const auto lower = graph.lower();
  out.upper_size = static_cast<int>(upper.size());
  out.lower_size = static_cast<int>(lower.size());

  const auto up = enumerate_orbits(restricted_action(graph, upper, graph.bounded_upper()), options);
  const auto low = enumerate_orbits(restricted_action(graph, lower, graph.bounded_lower()), options);
  out.upper_fixed = up.fixed_points;
  out.lower_fixed = low.fixed_points;
  out.n_upper = up.nontrivial;
  out.n_lower = low.nontrivial;
  if (out.threshold >= 1 && out.threshold <= out.rank - 1) {
    out.predicted = theorem3_count(out.rank, out.threshold, out.n_upper, out.n_lower);
  }
  return out;
}

}  // namespace bruhat
