#pragma once

// Transvection groups acting on F2^d and exhaustive orbit enumeration.
//
// A state is an integer in [0, 2^d); bit k holds coordinate k (0-based).

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bruhat/sigma.hpp"

namespace bruhat {

using State = std::uint64_t;

/// x -> x + (<mask, x> + bias) e_target. With bias = 0 this is a transvection;
/// bias = 1 gives the affine maps of a shifted sub-action.
struct Transvection {
  int target = 0;
  State mask = 0;
  bool bias = false;

  bool operator==(const Transvection&) const = default;
};

class TransvectionSet {
 public:
  static constexpr int kMaxDimension = 63;

  TransvectionSet() = default;
  /// Throws InvalidArgument if a target is out of range, lies in its own
  /// mask, or a mask reaches past the dimension.
  TransvectionSet(int dimension, std::vector<Transvection> generators);

  int dimension() const noexcept { return dimension_; }
  const std::vector<Transvection>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_linear() const noexcept;

  State apply(std::size_t generator, State x) const {
    const auto& t = generators_[generator];
    const State flip = static_cast<State>((__builtin_parityll(x & t.mask) ^ (t.bias ? 1 : 0)) & 1);
    return x ^ (flip << t.target);
  }

  /// Applies the generator whose target is `coordinate`; InvalidArgument if
  /// that coordinate is not a generator.
  State apply_at(int coordinate, State x) const;

  bool operator==(const TransvectionSet&) const = default;

 private:
  int dimension_ = 0;
  std::vector<Transvection> generators_;
};

/// One generator per vertex of `generating_set`, mask_r taken from Sigma.
TransvectionSet transvections_from_sigma(const SigmaGraph& graph, std::span<const int> generating_set);

/// Generators for every bounded vertex.
TransvectionSet transvections_from_sigma(const SigmaGraph& graph);

/// The sub-action of `generators` on the coordinates `coords` (renumbered in
/// ascending order). Coordinates outside `coords` are frozen at their value in
/// `ambient`, which turns into the affine bias of each generator.
TransvectionSet restricted_action(const SigmaGraph& graph, std::span<const int> coords,
                                  std::span<const int> generators, State ambient = 0);

struct EnumerationOptions {
  /// Upper bound on bytes held by the visited set plus worklists.
  std::size_t memory_cap_bytes = std::size_t{512} << 20;
  /// Largest accepted dimension regardless of the memory budget.
  int max_dimension = 26;
  /// 1 runs the sequential DFS; more runs a level-synchronous parallel BFS
  /// over a shared atomic bitmap. Results are identical.
  unsigned threads = 1;
  /// Maximum number of orbit representatives kept in the summary.
  std::size_t max_representatives = 1024;
};

struct OrbitSummary {
  int dimension = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t fixed_points = 0;
  std::uint64_t nontrivial = 0;
  /// orbit size -> multiplicity
  std::map<std::uint64_t, std::uint64_t> histogram;
  /// Minimal element of each orbit, ascending, capped.
  std::vector<State> representatives;
  bool representatives_truncated = false;
  std::size_t peak_state_bytes = 0;

  /// Sum of size * multiplicity.
  std::uint64_t total_states() const;
};

/// Exact orbit partition statistics over all 2^d states. Throws
/// DimensionTooLarge when the state space does not fit the options.
OrbitSummary enumerate_orbits(const TransvectionSet& action, const EnumerationOptions& options = {});

/// Minimal orbit element for every state (index = state). For small
/// dimensions; subject to the same limits as enumerate_orbits.
std::vector<std::uint32_t> orbit_labels(const TransvectionSet& action,
                                        const EnumerationOptions& options = {});

struct FixedPoints {
  std::uint64_t count = 0;
  int rank = 0;
  std::vector<State> basis;
};

/// The fixed points of a linear action: the kernel of the matrix whose rows
/// are the generator masks. count = 2^(d - rank).
FixedPoints fixed_points_linear(const TransvectionSet& action);

/// Orbits of the Gamma_U(nu)-action on F2^U: generators B_U on the slice
/// nu + F2^U. `nu` must vanish on U.
OrbitSummary affine_orbits(const SigmaGraph& graph, State nu, const EnumerationOptions& options = {});

}  // namespace bruhat
