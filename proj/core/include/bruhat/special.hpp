#pragma once

// Closed-form orbit counts and the special graph families behind them:
// path graphs, two-level ladder graphs S(m), the threshold-split formula and
// the table of known component counts for the pair (e, w0).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/orbit.hpp"
#include "bruhat/sigma.hpp"

namespace bruhat {

/// Path on m vertices; generators j in [2, m] with mask {j-1, j+1}.
struct PathGraph {
  int m = 0;
  TransvectionSet action;
};

PathGraph path_graph(int m);

/// Ladder S(m) on 2m vertices, odd vertices on the lower level and even ones
/// on the upper level. Generators j in [3, 2m] with mask {j-2, j-1, j+1, j+2}.
struct LadderGraph {
  int m = 0;
  /// 0-based edges (a, b), a < b.
  std::vector<std::pair<int, int>> edges;
  TransvectionSet action;
};

LadderGraph ladder_graph(int m);

/// m + 1.
std::uint64_t path_orbit_count(int m);

struct OrbitCount {
  std::uint64_t orbits = 0;
  std::uint64_t fixed_points = 0;

  bool operator==(const OrbitCount&) const = default;
};

/// (12, 4) for m > 3; smaller ladders are enumerated. S(3) has 11 orbits:
/// (0,0,1,1,1,0) is a fixed point there.
OrbitCount ladder_orbit_count(int m, const EnumerationOptions& options = {});

/// Q_S(x) = sum_i x_i + sum_{edges (i,j)} x_i x_j over F2.
bool q_s(State x, const LadderGraph& ladder);

/// The eight vectors that separate the nontrivial ladder orbits by
/// (x_1, x_2, Q_S).
std::vector<State> ladder_witnesses(int m);

/// (0,0,1,1,1,0,...,0).
State ladder_special_vector(int m);

/// 2^n + 2^(n-t) N_U + 2^t N_L.
std::uint64_t theorem3_count(int n, int t, std::uint64_t n_upper, std::uint64_t n_lower);

/// (m + 5) 2^(n-1).
std::uint64_t theorem4_count(int m, int n);

struct KnownCount {
  TypeLabel label;
  std::uint64_t count = 0;
  /// d = l(w0) = number of positive roots.
  int dimension = 0;
  /// Too large for exhaustive enumeration at the given dimension cap.
  bool reference_only = false;
};

/// Component count of L^{e,w0}(R) for a type, when known.
std::optional<std::uint64_t> known_count(const TypeLabel& label);

/// Number of positive roots, from the classical formulas.
int positive_root_count(const TypeLabel& label);

/// A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2.
std::vector<KnownCount> known_counts(int max_dimension = 26);

/// Quantities entering the threshold-split formula, all obtained by
/// enumerating sub-actions of a Sigma graph with a level split.
struct SplitAnalysis {
  int rank = 0;
  int threshold = 0;
  bool sigma_b_connected = false;
  int upper_size = 0;
  int lower_size = 0;
  std::uint64_t upper_fixed = 0;  // fixed points of Gamma_U on F2^U
  std::uint64_t lower_fixed = 0;  // fixed points of Gamma_L on F2^L
  std::uint64_t n_upper = 0;      // N_U
  std::uint64_t n_lower = 0;      // N_L
  std::uint64_t predicted = 0;    // theorem3_count(rank, threshold, N_U, N_L)
};

SplitAnalysis analyze_split(const SigmaGraph& graph, const EnumerationOptions& options = {});

}  // namespace bruhat
