#include "bruhat/sigma.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "bruhat/error.hpp"

namespace bruhat {

const char* to_string(EdgeRule rule) {
  switch (rule) {
    case EdgeRule::Horizontal: return "horizontal";
    case EdgeRule::SameSign: return "inclined-ii";
    case EdgeRule::OppositeSign: return "inclined-iii";
  }
  return "horizontal";
}

bool SigmaGraph::has_edge(int k, int l) const {
  const auto& nb = neighbours_[k];
  return std::binary_search(nb.begin(), nb.end(), l);
}

std::vector<int> SigmaGraph::bounded() const {
  return select([this](int k) { return is_bounded(k); });
}

std::vector<int> SigmaGraph::unbounded() const {
  return select([this](int k) { return !is_bounded(k); });
}

int SigmaGraph::level_count() const {
  return static_cast<int>(std::set<int>(levels_.begin(), levels_.end()).size());
}

const LevelSplit& SigmaGraph::split() const {
  if (!split_) throw InvalidArgument("Sigma graph was built without a level split");
  return *split_;
}

SigmaGraph SigmaGraph::with_split(LevelSplit split) const {
  if (split.rank() != cartan_.rank()) {
    throw InvalidArgument("level split rank does not match the Cartan matrix");
  }
  SigmaGraph copy = *this;
  copy.split_ = std::move(split);
  return copy;
}

std::vector<int> SigmaGraph::upper() const {
  return select([this](int k) { return is_upper(k); });
}

std::vector<int> SigmaGraph::lower() const {
  return select([this](int k) { return !is_upper(k); });
}

std::vector<int> SigmaGraph::bounded_upper() const {
  return select([this](int k) { return is_upper(k) && is_bounded(k); });
}

std::vector<int> SigmaGraph::bounded_lower() const {
  return select([this](int k) { return !is_upper(k) && is_bounded(k); });
}

std::vector<int> SigmaGraph::free_upper() const {
  return select([this](int k) { return is_upper(k) && !is_bounded(k); });
}

std::vector<int> SigmaGraph::free_lower() const {
  return select([this](int k) { return !is_upper(k) && !is_bounded(k); });
}

SigmaGraph build_sigma(const SignedWord& word, const CartanSpec& cartan,
                       std::optional<LevelSplit> split) {
  for (const auto& letter : word.letters()) {
    if (letter.index < 0 || letter.index >= cartan.rank()) {
      throw InvalidArgument("letter level outside the Cartan matrix rank");
    }
  }
  require_reduced(word, cartan);

  SigmaGraph g(cartan, word);
  const int d = word.size();
  g.levels_.resize(static_cast<std::size_t>(d));
  g.previous_.assign(static_cast<std::size_t>(d), SigmaGraph::kNone);
  std::vector<int> last(static_cast<std::size_t>(cartan.rank()), SigmaGraph::kNone);
  for (int k = 0; k < d; ++k) {
    const int lv = word[k].index;
    g.levels_[k] = lv;
    g.previous_[k] = last[lv];
    last[lv] = k;
  }

  g.neighbours_.assign(static_cast<std::size_t>(d), {});
  for (int l = 0; l < d; ++l) {
    for (int k = 0; k < l; ++k) {
      const int kp = g.previous_[k];
      const int lp = g.previous_[l];
      std::optional<EdgeRule> rule;
      if (k == lp) {
        rule = EdgeRule::Horizontal;
      }
      if (cartan.adjacent(g.levels_[k], g.levels_[l])) {
        if (rule) throw std::logic_error("pair is both horizontal and inclined");
        if (kp < lp && lp < k && word[lp].sign == word[k].sign) {
          rule = EdgeRule::SameSign;
        } else if (lp < kp && kp < k && word[kp].sign == -word[k].sign) {
          rule = EdgeRule::OppositeSign;
        }
      }
      if (!rule) continue;
      g.edges_.push_back({k, l, *rule});
      g.neighbours_[k].push_back(l);
      g.neighbours_[l].push_back(k);
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const SigmaEdge& a, const SigmaEdge& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });

  g.masks_.assign(static_cast<std::size_t>(d), {});
  for (int r = 0; r < d; ++r) {
    auto& nb = g.neighbours_[r];
    std::sort(nb.begin(), nb.end());
    for (int k : nb) {
      if (g.omega(k, r)) g.masks_[r].push_back(k);
    }
  }

  if (split) {
    if (split->rank() != cartan.rank()) {
      throw InvalidArgument("level split rank does not match the Cartan matrix");
    }
    g.split_ = std::move(split);
  }
  return g;
}

bool is_connected(const SigmaGraph& graph, std::span<const int> subset) {
  if (subset.size() <= 1) return true;
  std::vector<char> inside(static_cast<std::size_t>(graph.size()), 0);
  for (int k : subset) {
    if (k < 0 || k >= graph.size()) throw InvalidArgument("vertex outside Sigma graph");
    inside[k] = 1;
  }
  std::vector<char> seen(inside.size(), 0);
  std::vector<int> stack{subset.front()};
  seen[subset.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : graph.neighbours(v)) {
      if (!inside[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  const auto distinct =
      static_cast<std::size_t>(std::count(inside.begin(), inside.end(), char{1}));
  return reached == distinct;
}

std::string to_dot(const SigmaGraph& graph) {
  std::ostringstream out;
  out << "graph sigma {\n";
  for (int k = 0; k < graph.size(); ++k) {
    out << "  " << k + 1 << " [label=\"" << k + 1 << ':' << graph.level(k) + 1
        << (graph.sign(k) > 0 ? '+' : '-') << "\"";
    if (graph.is_bounded(k)) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& e : graph.edges()) {
    out << "  " << e.first + 1 << " -- " << e.second + 1;
    if (e.horizontal()) {
      out << " [style=solid];\n";
    } else {
      out << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bruhat
