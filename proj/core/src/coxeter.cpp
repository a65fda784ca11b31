#include "bruhat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

constexpr int kMaxRank = 64;

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid integer '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_rank(const TypeLabel& label) {
  const int n = label.rank;
  bool ok = false;
  switch (label.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    case Family::Wt: ok = n >= 2 && label.threshold >= 1 && label.threshold <= n - 1; break;
    case Family::Custom: ok = n >= 1; break;
  }
  if (!ok || n > kMaxRank) {
    throw InvalidArgument("unsupported type/rank: " + label.to_string());
  }
}

using Rows = std::vector<std::vector<int>>;

Rows identity2(int n) {
  Rows a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

void bond(Rows& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

}  // namespace

TypeLabel TypeLabel::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty type label");

  TypeLabel label;
  if (text.size() > 2 && (text.substr(0, 2) == "Wt" || text.substr(0, 2) == "wt" ||
                          text.substr(0, 2) == "WT")) {
    auto rest = trim(text.substr(2));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw ParseError("expected Wt(n,t), got '" + std::string(text) + "'");
    }
    rest = rest.substr(1, rest.size() - 2);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("expected Wt(n,t), got '" + std::string(text) + "'");
    }
    label.family = Family::Wt;
    label.rank = parse_int(trim(rest.substr(0, comma)), "type label");
    label.threshold = parse_int(trim(rest.substr(comma + 1)), "type label");
    check_rank(label);
    return label;
  }

  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': label.family = Family::A; break;
    case 'B': label.family = Family::B; break;
    case 'C': label.family = Family::C; break;
    case 'D': label.family = Family::D; break;
    case 'E': label.family = Family::E; break;
    case 'F': label.family = Family::F; break;
    case 'G': label.family = Family::G; break;
    default: throw ParseError("unknown type family in '" + std::string(text) + "'");
  }
  label.rank = parse_int(trim(text.substr(1)), "type label");
  check_rank(label);
  return label;
}

std::string TypeLabel::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::G: return "G" + std::to_string(rank);
    case Family::Wt: return "Wt(" + std::to_string(rank) + "," + std::to_string(threshold) + ")";
    case Family::Custom: return "custom";
  }
  return "custom";
}

CartanSpec::CartanSpec(TypeLabel label, std::vector<std::vector<int>> rows)
    : label_(label), rank_(static_cast<int>(rows.size())) {
  if (rank_ < 1 || rank_ > kMaxRank) {
    throw InvalidArgument("Cartan matrix rank must be in [1," + std::to_string(kMaxRank) + "]");
  }
  entries_.reserve(static_cast<std::size_t>(rank_) * static_cast<std::size_t>(rank_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != rank_) throw InvalidArgument("Cartan matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < rank_; ++i) {
    if (entry(i, i) != 2) throw InvalidArgument("Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((entry(i, j) == 0) != (entry(j, i) == 0)) {
        throw InvalidArgument("Cartan matrix zero pattern is not symmetric");
      }
      if (is_standard() && entry(i, j) > 0) {
        throw InvalidArgument("standard Cartan matrix has a positive off-diagonal entry");
      }
    }
  }
}

CartanSpec CartanSpec::custom(std::vector<std::vector<int>> rows) {
  TypeLabel label;
  label.family = Family::Custom;
  label.rank = static_cast<int>(rows.size());
  return CartanSpec(label, std::move(rows));
}

std::vector<std::vector<int>> CartanSpec::rows() const {
  Rows out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                  entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)) + rank_);
  }
  return out;
}

bool CartanSpec::parity(int i, int j) const {
  if (i == j) return true;
  return (std::abs(entry(i, j)) % 2) == 1;
}

int CartanSpec::coxeter_exponent(int i, int j) const {
  if (i == j) return 1;
  switch (std::abs(entry(i, j) * entry(j, i))) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

CartanSpec cartan_matrix(const TypeLabel& label) {
  check_rank(label);
  const int n = label.rank;
  Rows a = identity2(n);
  switch (label.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n - 1; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 2);
      bond(a, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4.
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::F:
      bond(a, 0, 1);
      bond(a, 1, 2);
      bond(a, 2, 3);
      a[1][2] = -2;
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    case Family::Wt:
      for (int i = 0; i + 1 < n; ++i) {
        a[i][i + 1] = 1;
        a[i + 1][i] = 1;
      }
      a[label.threshold - 1][label.threshold] = 2;
      break;
    case Family::Custom:
      throw InvalidArgument("custom Cartan matrices are built with CartanSpec::custom");
  }
  return CartanSpec(label, std::move(a));
}

CartanSpec cartan_matrix(std::string_view label) { return cartan_matrix(TypeLabel::parse(label)); }

void CoxeterGraph::connect(int i, int j) {
  if (i == j) throw InvalidArgument("Coxeter graph has no self-loops");
  neighbours_[i] |= std::uint64_t{1} << j;
  neighbours_[j] |= std::uint64_t{1} << i;
}

std::vector<std::pair<int, int>> CoxeterGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

CoxeterGraph coxeter_graph(const CartanSpec& cartan) {
  CoxeterGraph g(cartan.rank());
  for (int i = 0; i < cartan.rank(); ++i) {
    for (int j = i + 1; j < cartan.rank(); ++j) {
      if (cartan.adjacent(i, j)) g.connect(i, j);
    }
  }
  return g;
}

RootVector RootSystem::reflect(int i, const RootVector& root) const {
  RootVector out = root;
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += root[j] * cartan_.reflection_entry(j, i);
  out[i] -= pairing;
  return out;
}

std::optional<std::size_t> RootSystem::find(const RootVector& root) const {
  const auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), root,
      [this](std::size_t k, const RootVector& r) { return positive_[k] < r; });
  if (it == sorted_.end() || positive_[*it] != root) return std::nullopt;
  return *it;
}

RootSystem positive_roots(const CartanSpec& cartan) {
  if (!cartan.is_standard()) {
    throw InvalidArgument("root systems are only available for standard types, not " +
                          cartan.label().to_string());
  }
  const int n = cartan.rank();
  RootSystem rs(cartan);

  std::map<RootVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (int i = 0; i < n; ++i) {
    RootVector simple(static_cast<std::size_t>(n), 0);
    simple[i] = 1;
    seen.emplace(simple, rs.positive_.size());
    rs.simple_index_.push_back(rs.positive_.size());
    queue.push_back(rs.positive_.size());
    rs.positive_.push_back(std::move(simple));
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector image = rs.reflect(i, rs.positive_[k]);
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
      if (seen.contains(image)) continue;
      seen.emplace(image, rs.positive_.size());
      queue.push_back(rs.positive_.size());
      rs.positive_.push_back(std::move(image));
    }
  }

  rs.sorted_.reserve(seen.size());
  for (const auto& [root, k] : seen) rs.sorted_.push_back(k);

  const std::size_t count = rs.positive_.size();
  rs.reflection_table_.assign(static_cast<std::size_t>(n) * count, -1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < count; ++k) {
      if (k == rs.simple_index_[i]) continue;
      const auto target = seen.find(rs.reflect(i, rs.positive_[k]));
      if (target == seen.end()) {
        throw InvalidArgument("positive roots are not permuted by s_" + std::to_string(i + 1) +
                              "; matrix is not of finite type");
      }
      rs.reflection_table_[static_cast<std::size_t>(i) * count + k] =
          static_cast<int>(target->second);
    }
  }
  return rs;
}

int LevelSplit::threshold() const {
  return static_cast<int>(std::count(upper.begin(), upper.end(), true));
}

LevelSplit threshold_split(int rank, int t) {
  if (t < 1 || t > rank - 1) {
    throw InvalidArgument("threshold must lie in [1, rank-1]");
  }
  LevelSplit split;
  split.upper.assign(static_cast<std::size_t>(rank), false);
  for (int i = 0; i < t; ++i) split.upper[i] = true;
  return split;
}

std::optional<LevelSplit> standard_split(const CartanSpec& cartan) {
  const int n = cartan.rank();
  std::optional<std::pair<int, int>> doubled;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (!cartan.adjacent(p, q)) continue;
      if (!cartan.parity(p, q) && cartan.parity(q, p)) {
        if (doubled) return std::nullopt;
        doubled = std::make_pair(p, q);
      }
    }
  }
  if (!doubled) return std::nullopt;

  const auto graph = coxeter_graph(cartan);
  LevelSplit split;
  split.upper.assign(static_cast<std::size_t>(n), false);
  std::vector<int> stack{doubled->first};
  split.upper[doubled->first] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (!graph.adjacent(v, w) || split.upper[w]) continue;
      if (v == doubled->first && w == doubled->second) continue;
      split.upper[w] = true;
      stack.push_back(w);
    }
  }
  if (split.upper[doubled->second]) return std::nullopt;  // bond lies on a cycle
  return split;
}

}  // namespace bruhat
