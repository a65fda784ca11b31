#pragma once

// The graph Sigma(i) of a reduced word i for a pair (u, v), its mod-2 Omega
// parities and the transvection masks derived from them.
//
// Positions are 0-based internally. previous(l) is the last position k < l on
// the same level, or kNone; that keeps the strict order of the 1-based l^-
// (where 0 means "none").

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

enum class EdgeRule {
  Horizontal,    // k = l^-
  SameSign,      // k^- < l^- < k, eps(i_{l^-}) = eps(i_k)
  OppositeSign,  // l^- < k^- < k, eps(i_{k^-}) = -eps(i_k)
};

const char* to_string(EdgeRule rule);

struct SigmaEdge {
  int first = 0;   // smaller endpoint
  int second = 0;  // larger endpoint
  EdgeRule rule = EdgeRule::Horizontal;

  bool horizontal() const noexcept { return rule == EdgeRule::Horizontal; }
  bool operator==(const SigmaEdge&) const = default;
};

class SigmaGraph {
 public:
  static constexpr int kNone = -1;

  int size() const noexcept { return static_cast<int>(levels_.size()); }
  const CartanSpec& cartan() const noexcept { return cartan_; }
  const SignedWord& word() const noexcept { return word_; }

  int level(int k) const { return levels_[k]; }
  int sign(int k) const { return word_[k].sign; }
  int previous(int k) const { return previous_[k]; }

  const std::vector<SigmaEdge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbours(int k) const { return neighbours_[k]; }
  bool has_edge(int k, int l) const;

  /// Omega_kl over F2.
  bool omega(int k, int l) const { return cartan_.parity(levels_[k], levels_[l]); }

  /// {k : {k,r} in Sigma, Omega_kr = 1}, sorted; never contains r.
  const std::vector<int>& mask(int r) const { return masks_[r]; }

  bool is_bounded(int k) const { return previous_[k] != kNone; }
  std::vector<int> bounded() const;
  std::vector<int> unbounded() const;

  /// Number of distinct levels appearing in the word.
  int level_count() const;

  // Partition data, only available when a LevelSplit was supplied.
  bool has_split() const noexcept { return split_.has_value(); }
  const LevelSplit& split() const;
  SigmaGraph with_split(LevelSplit split) const;

  bool is_upper(int k) const { return split().is_upper(levels_[k]); }
  std::vector<int> upper() const;          // U
  std::vector<int> lower() const;          // L
  std::vector<int> bounded_upper() const;  // B_U
  std::vector<int> bounded_lower() const;  // B_L
  std::vector<int> free_upper() const;     // C_U
  std::vector<int> free_lower() const;     // C_L

 private:
  friend SigmaGraph build_sigma(const SignedWord&, const CartanSpec&, std::optional<LevelSplit>);
  SigmaGraph(CartanSpec cartan, SignedWord word) : cartan_(std::move(cartan)), word_(std::move(word)) {}

  template <typename Pred>
  std::vector<int> select(Pred pred) const {
    std::vector<int> out;
    for (int k = 0; k < size(); ++k) {
      if (pred(k)) out.push_back(k);
    }
    return out;
  }

  CartanSpec cartan_;
  SignedWord word_;
  std::vector<int> levels_;
  std::vector<int> previous_;
  std::vector<SigmaEdge> edges_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> masks_;
  std::optional<LevelSplit> split_;
};

/// Builds Sigma(i). The word must be reduced (NotReducedError otherwise) and
/// `split`, when given, must have the Cartan matrix's rank.
SigmaGraph build_sigma(const SignedWord& word, const CartanSpec& cartan,
                       std::optional<LevelSplit> split = std::nullopt);

/// Connectivity of the induced subgraph; empty and singleton sets count as connected.
bool is_connected(const SigmaGraph& graph, std::span<const int> subset);

/// Undirected DOT; horizontal edges solid, inclined edges dashed, vertices
/// labelled "k:|i_k|^eps" with 1-based k.
std::string to_dot(const SigmaGraph& graph);

}  // namespace bruhat
