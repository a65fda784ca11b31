#include "bruhat/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "bruhat/error.hpp"
#include "bruhat/gf2.hpp"

namespace bruhat {

namespace {

constexpr std::size_t kParallelFrontier = std::size_t{1} << 14;

std::uint64_t state_count(int d) { return std::uint64_t{1} << d; }

std::size_t bitmap_words(int d) {
  return static_cast<std::size_t>((state_count(d) + 63) / 64);
}

// Bits of the last bitmap word that correspond to real states.
std::uint64_t word_limit(int d, std::size_t word) {
  if (d >= 6) return ~std::uint64_t{0};
  (void)word;
  return (std::uint64_t{1} << state_count(d)) - 1;
}

void check_budget(int d, std::size_t required, const EnumerationOptions& options) {
  if (d > options.max_dimension || d > TransvectionSet::kMaxDimension ||
      required > options.memory_cap_bytes) {
    throw DimensionTooLarge(d, std::min(options.max_dimension, TransvectionSet::kMaxDimension),
                            required, options.memory_cap_bytes);
  }
}

class SummaryBuilder {
 public:
  SummaryBuilder(int d, std::size_t max_representatives) : max_reps_(max_representatives) {
    summary_.dimension = d;
  }

  void add(State representative, std::uint64_t size) {
    ++summary_.orbit_count;
    ++summary_.histogram[size];
    if (summary_.representatives.size() < max_reps_) {
      summary_.representatives.push_back(representative);
    } else {
      summary_.representatives_truncated = true;
    }
  }

  OrbitSummary finish(std::size_t peak_bytes) {
    const auto it = summary_.histogram.find(1);
    summary_.fixed_points = it == summary_.histogram.end() ? 0 : it->second;
    summary_.nontrivial = summary_.orbit_count - summary_.fixed_points;
    summary_.peak_state_bytes = peak_bytes;
    return std::move(summary_);
  }

 private:
  std::size_t max_reps_;
  OrbitSummary summary_;
};

// Iterative DFS from each unvisited seed in increasing order; the seed is the
// minimal element of its orbit because every smaller state is already visited.
template <typename Slot>
OrbitSummary enumerate_sequential(const TransvectionSet& action, const EnumerationOptions& options) {
  const int d = action.dimension();
  const std::size_t words = bitmap_words(d);
  const std::size_t bitmap_bytes = words * sizeof(std::uint64_t);
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<Slot> stack;
  std::size_t peak = bitmap_bytes;
  std::size_t budgeted_capacity = 0;

  auto mark = [&visited](State x) { visited[x >> 6] |= std::uint64_t{1} << (x & 63); };
  auto seen = [&visited](State x) { return (visited[x >> 6] >> (x & 63)) & 1U; };

  SummaryBuilder out(d, options.max_representatives);
  const std::size_t ngen = action.size();
  for (std::size_t w = 0; w < words; ++w) {
    for (;;) {
      const std::uint64_t open = ~visited[w] & word_limit(d, w);
      if (open == 0) break;
      const State seed = (static_cast<State>(w) << 6) | static_cast<State>(__builtin_ctzll(open));
      mark(seed);
      stack.push_back(static_cast<Slot>(seed));
      std::uint64_t size = 0;
      while (!stack.empty()) {
        const State x = stack.back();
        stack.pop_back();
        ++size;
        for (std::size_t g = 0; g < ngen; ++g) {
          const State y = action.apply(g, x);
          if (seen(y)) continue;
          mark(y);
          stack.push_back(static_cast<Slot>(y));
        }
        if (stack.capacity() != budgeted_capacity) {
          budgeted_capacity = stack.capacity();
          const std::size_t bytes = bitmap_bytes + budgeted_capacity * sizeof(Slot);
          peak = std::max(peak, bytes);
          if (bytes > options.memory_cap_bytes) {
            throw DimensionTooLarge(d, options.max_dimension, bytes, options.memory_cap_bytes);
          }
        }
      }
      out.add(seed, size);
    }
  }
  return out.finish(peak);
}

// Level-synchronous BFS per orbit. Seeds are still taken in increasing order
// by a single thread, so representatives and statistics match the DFS.
OrbitSummary enumerate_parallel(const TransvectionSet& action, const EnumerationOptions& options) {
  const int d = action.dimension();
  const std::size_t words = bitmap_words(d);
  const std::size_t bitmap_bytes = words * sizeof(std::uint64_t);
  std::vector<std::atomic<std::uint64_t>> visited(words);
  for (auto& v : visited) v.store(0, std::memory_order_relaxed);

  // Returns true if this call claimed x.
  auto claim = [&visited](State x) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    return (visited[x >> 6].fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
  };

  const std::size_t ngen = action.size();
  auto expand = [&](std::span<const State> chunk, std::vector<State>& next) {
    for (State x : chunk) {
      for (std::size_t g = 0; g < ngen; ++g) {
        const State y = action.apply(g, x);
        if (claim(y)) next.push_back(y);
      }
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  std::vector<State> frontier;
  std::vector<State> next;
  std::vector<std::vector<State>> local(threads);
  std::size_t peak = bitmap_bytes;

  SummaryBuilder out(d, options.max_representatives);
  for (std::size_t w = 0; w < words; ++w) {
    for (;;) {
      const std::uint64_t open =
          ~visited[w].load(std::memory_order_relaxed) & word_limit(d, w);
      if (open == 0) break;
      const State seed = (static_cast<State>(w) << 6) | static_cast<State>(__builtin_ctzll(open));
      claim(seed);
      frontier.assign(1, seed);
      std::uint64_t size = 0;
      while (!frontier.empty()) {
        size += frontier.size();
        next.clear();
        if (frontier.size() < kParallelFrontier || threads == 1) {
          expand(frontier, next);
        } else {
          const std::size_t chunk = (frontier.size() + threads - 1) / threads;
          {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
              const std::size_t lo = std::min(frontier.size(), t * chunk);
              const std::size_t hi = std::min(frontier.size(), lo + chunk);
              local[t].clear();
              pool.emplace_back([&, lo, hi, t] {
                expand(std::span<const State>(frontier).subspan(lo, hi - lo), local[t]);
              });
            }
          }
          for (auto& part : local) next.insert(next.end(), part.begin(), part.end());
        }
        std::size_t bytes = bitmap_bytes + (frontier.capacity() + next.capacity()) * sizeof(State);
        for (const auto& part : local) bytes += part.capacity() * sizeof(State);
        peak = std::max(peak, bytes);
        if (bytes > options.memory_cap_bytes) {
          throw DimensionTooLarge(d, options.max_dimension, bytes, options.memory_cap_bytes);
        }
        frontier.swap(next);
      }
      out.add(seed, size);
    }
  }
  return out.finish(peak);
}

}  // namespace

TransvectionSet::TransvectionSet(int dimension, std::vector<Transvection> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension < 0 || dimension > kMaxDimension) {
    throw InvalidArgument("transvection dimension must lie in [0," + std::to_string(kMaxDimension) +
                          "]");
  }
  const State all = dimension == 0 ? 0 : (~State{0} >> (64 - dimension));
  for (const auto& t : generators_) {
    if (t.target < 0 || t.target >= dimension) {
      throw InvalidArgument("transvection target outside the state dimension");
    }
    if ((t.mask >> t.target) & 1U) {
      throw InvalidArgument("transvection mask contains its own target");
    }
    if (t.mask & ~all) throw InvalidArgument("transvection mask exceeds the state dimension");
  }
}

bool TransvectionSet::is_linear() const noexcept {
  return std::none_of(generators_.begin(), generators_.end(),
                      [](const Transvection& t) { return t.bias; });
}

State TransvectionSet::apply_at(int coordinate, State x) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].target == coordinate) return apply(g, x);
  }
  throw InvalidArgument("coordinate " + std::to_string(coordinate + 1) + " is not a generator");
}

TransvectionSet transvections_from_sigma(const SigmaGraph& graph, std::span<const int> generating_set) {
  const int d = graph.size();
  if (d > TransvectionSet::kMaxDimension) {
    throw DimensionTooLarge(d, TransvectionSet::kMaxDimension, 0, 0);
  }
  std::vector<int> gens(generating_set.begin(), generating_set.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Transvection> out;
  out.reserve(gens.size());
  for (int r : gens) {
    if (r < 0 || r >= d) throw InvalidArgument("generator outside the Sigma graph");
    State mask = 0;
    for (int k : graph.mask(r)) mask |= State{1} << k;
    out.push_back({r, mask, false});
  }
  return TransvectionSet(d, std::move(out));
}

TransvectionSet transvections_from_sigma(const SigmaGraph& graph) {
  const auto b = graph.bounded();
  return transvections_from_sigma(graph, b);
}

TransvectionSet restricted_action(const SigmaGraph& graph, std::span<const int> coords,
                                  std::span<const int> generators, State ambient) {
  const int d = graph.size();
  if (ambient != 0 && d > 64) throw InvalidArgument("ambient vector needs a Sigma graph with d <= 64");
  std::vector<int> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> position(static_cast<std::size_t>(d), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= d) throw InvalidArgument("coordinate outside the Sigma graph");
    position[sorted[i]] = static_cast<int>(i);
  }

  std::vector<int> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Transvection> out;
  for (int r : gens) {
    if (r < 0 || r >= d || position[r] < 0) {
      throw InvalidArgument("generator " + std::to_string(r + 1) + " is not among the coordinates");
    }
    Transvection t{position[r], 0, false};
    for (int k : graph.mask(r)) {
      if (position[k] >= 0) {
        t.mask |= State{1} << position[k];
      } else if (k < 64 && ((ambient >> k) & 1U)) {
        t.bias = !t.bias;
      }
    }
    out.push_back(t);
  }
  return TransvectionSet(static_cast<int>(sorted.size()), std::move(out));
}

std::uint64_t OrbitSummary::total_states() const {
  std::uint64_t total = 0;
  for (const auto& [size, mult] : histogram) total += size * mult;
  return total;
}

OrbitSummary enumerate_orbits(const TransvectionSet& action, const EnumerationOptions& options) {
  const int d = action.dimension();
  check_budget(d, d <= TransvectionSet::kMaxDimension ? bitmap_words(d) * sizeof(std::uint64_t) : 0,
               options);
  if (options.threads > 1) return enumerate_parallel(action, options);
  if (d <= 32) return enumerate_sequential<std::uint32_t>(action, options);
  return enumerate_sequential<std::uint64_t>(action, options);
}

std::vector<std::uint32_t> orbit_labels(const TransvectionSet& action, const EnumerationOptions& options) {
  const int d = action.dimension();
  if (d > 31) throw DimensionTooLarge(d, 31, 0, options.memory_cap_bytes);
  const std::size_t n = static_cast<std::size_t>(state_count(d));
  check_budget(d, n * sizeof(std::uint32_t), options);

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<std::uint32_t> stack;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (label[seed] != kUnset) continue;
    const auto rep = static_cast<std::uint32_t>(seed);
    label[seed] = rep;
    stack.push_back(rep);
    while (!stack.empty()) {
      const State x = stack.back();
      stack.pop_back();
      for (std::size_t g = 0; g < action.size(); ++g) {
        const State y = action.apply(g, x);
        if (label[y] != kUnset) continue;
        label[y] = rep;
        stack.push_back(static_cast<std::uint32_t>(y));
      }
    }
  }
  return label;
}

FixedPoints fixed_points_linear(const TransvectionSet& action) {
  if (!action.is_linear()) {
    throw InvalidArgument("fixed_points_linear needs a linear action (no affine bias)");
  }
  // tau_r fixes x iff <mask_r, x> = 0.
  std::vector<gf2::Row> rows;
  rows.reserve(action.size());
  for (const auto& t : action.generators()) rows.push_back(t.mask);
  const auto kernel = gf2::kernel(rows, action.dimension());
  FixedPoints out;
  out.rank = kernel.rank;
  out.count = std::uint64_t{1} << (action.dimension() - kernel.rank);
  out.basis = kernel.basis;
  return out;
}

OrbitSummary affine_orbits(const SigmaGraph& graph, State nu, const EnumerationOptions& options) {
  const auto upper = graph.upper();
  for (int k : upper) {
    if (k < 64 && ((nu >> k) & 1U)) {
      throw InvalidArgument("nu must be supported on L; coordinate " + std::to_string(k + 1) +
                            " lies in U");
    }
  }
  if (graph.size() < 64 && (nu >> graph.size()) != 0) {
    throw InvalidArgument("nu has bits beyond the Sigma graph");
  }
  const auto gens = graph.bounded_upper();
  return enumerate_orbits(restricted_action(graph, upper, gens, nu), options);
}

}  // namespace bruhat
