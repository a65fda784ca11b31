#pragma once

// Cartan data, Coxeter graphs and root systems.
//
// Vertices (simple reflections) are numbered 0..n-1 internally; every textual
// surface (labels, words, JSON) uses the 1-based Bourbaki numbering.
//
// Matrix convention: a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j),
// so B2 = [[2,-2],[-1,2]] and G2 = [[2,-1],[-3,2]]. In B_n the doubled entry is
// a_{n-1,n}; in C_n it is a_{n,n-1}; in F4 it is a_{2,3}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bruhat {

enum class Family { A, B, C, D, E, F, G, Wt, Custom };

struct TypeLabel {
  Family family = Family::A;
  int rank = 1;
  /// Position of the doubled bond for Wt(n,t); unused otherwise.
  int threshold = 0;

  /// Parses "A4", "B3", "E6", "F4", "G2", "Wt(4,2)". Throws ParseError.
  static TypeLabel parse(std::string_view text);
  std::string to_string() const;

  /// True for the Cartan-Killing families (everything except Wt and custom).
  bool is_standard() const noexcept { return family != Family::Wt && family != Family::Custom; }

  bool operator==(const TypeLabel&) const = default;
};

class CartanSpec {
 public:
  /// Validates the diagonal, the zero pattern and (for standard labels) the sign pattern.
  CartanSpec(TypeLabel label, std::vector<std::vector<int>> rows);

  static CartanSpec custom(std::vector<std::vector<int>> rows);

  int rank() const noexcept { return rank_; }
  const TypeLabel& label() const noexcept { return label_; }
  bool is_standard() const noexcept { return label_.is_standard(); }

  int entry(int i, int j) const { return entries_[index(i, j)]; }
  std::vector<std::vector<int>> rows() const;

  /// {i,j} is an edge of the Coxeter graph iff a_ij * a_ji != 0.
  bool adjacent(int i, int j) const { return i != j && entry(i, j) * entry(j, i) != 0; }

  /// Parity used by the Omega matrix: 1 on equal levels, |a_ij| mod 2 otherwise.
  bool parity(int i, int j) const;

  /// Order m_ij of s_i s_j; 0 stands for infinity.
  int coxeter_exponent(int i, int j) const;

  /// Entry of the generalized Cartan matrix used for reflections: 2 on the
  /// diagonal, -|a_ij| elsewhere. Coincides with a_ij for standard types.
  int reflection_entry(int i, int j) const {
    if (i == j) return 2;
    const int a = entry(i, j);
    return a < 0 ? a : -a;
  }

  bool operator==(const CartanSpec& other) const {
    return label_ == other.label_ && entries_ == other.entries_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j);
  }

  TypeLabel label_;
  int rank_ = 0;
  std::vector<int> entries_;
};

CartanSpec cartan_matrix(const TypeLabel& label);
CartanSpec cartan_matrix(std::string_view label);

class CoxeterGraph {
 public:
  explicit CoxeterGraph(int n) : neighbours_(static_cast<std::size_t>(n), 0) {}

  int size() const noexcept { return static_cast<int>(neighbours_.size()); }
  bool adjacent(int i, int j) const { return (neighbours_[i] >> j) & 1U; }
  std::uint64_t neighbours(int i) const { return neighbours_[i]; }
  void connect(int i, int j);
  /// Edges {i,j} with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const CoxeterGraph&) const = default;

 private:
  std::vector<std::uint64_t> neighbours_;
};

CoxeterGraph coxeter_graph(const CartanSpec& cartan);

/// Root coordinates in the basis of simple roots.
using RootVector = std::vector<int>;

class RootSystem {
 public:
  const CartanSpec& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank(); }

  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }
  std::size_t size() const noexcept { return positive_.size(); }

  /// Index of alpha_i inside positive_roots().
  std::size_t simple_root_index(int i) const { return simple_index_[i]; }

  /// s_i applied to an arbitrary coordinate vector.
  RootVector reflect(int i, const RootVector& root) const;

  /// Index of s_i(beta_k) among the positive roots, or nullopt when
  /// beta_k = alpha_i (which is sent to -alpha_i).
  std::optional<std::size_t> reflected_index(int i, std::size_t k) const {
    const int v = reflection_table_[static_cast<std::size_t>(i) * positive_.size() + k];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }

  std::optional<std::size_t> find(const RootVector& root) const;

 private:
  friend RootSystem positive_roots(const CartanSpec& cartan);
  explicit RootSystem(CartanSpec cartan) : cartan_(std::move(cartan)) {}

  CartanSpec cartan_;
  std::vector<RootVector> positive_;
  std::vector<std::size_t> simple_index_;
  // Indices into positive_ in lexicographic order of the coordinates.
  std::vector<std::size_t> sorted_;
  std::vector<int> reflection_table_;
};

/// Closure of the simple roots under simple reflections. Standard types only.
RootSystem positive_roots(const CartanSpec& cartan);

/// Split of the levels (vertices of the Coxeter graph) into an upper block U
/// and a lower block L across a single doubled bond.
struct LevelSplit {
  std::vector<bool> upper;

  int rank() const noexcept { return static_cast<int>(upper.size()); }
  bool is_upper(int level) const { return upper[level]; }
  /// Number of upper levels (the threshold t).
  int threshold() const;
};

/// Levels {1..t} form the upper block.
LevelSplit threshold_split(int rank, int t);

/// Split across the unique edge {p,q} with a_pq even and a_qp odd: U is the
/// component of p once that edge is removed. nullopt when no such unique edge
/// exists (simply-laced types, G2).
std::optional<LevelSplit> standard_split(const CartanSpec& cartan);

}  // namespace bruhat
