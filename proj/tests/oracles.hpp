#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Cartan matrix entries and are only practical for small inputs.

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bruhat/coxeter.hpp"
#include "bruhat/word.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long>>;  // column j = image of alpha_j

inline Matrix identity(int n) {
  Matrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Left multiplication by s_i in the simple-root basis:
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, <alpha_j, alpha_i^vee> = a_ji.
inline Matrix reflect_left(const Matrix& m, int i, const bruhat::CartanSpec& c) {
  const int n = c.rank();
  Matrix out = m;
  for (int col = 0; col < n; ++col) {
    long pairing = 0;
    for (int j = 0; j < n; ++j) pairing += m[j][col] * c.entry(j, i);
    out[i][col] -= pairing;
  }
  return out;
}

inline Matrix product(const std::vector<int>& word, const bruhat::CartanSpec& c) {
  Matrix m = identity(c.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = reflect_left(m, *it, c);
  return m;
}

// Breadth-first search of the Cayley graph: element -> length.
struct WeylGroup {
  std::map<Matrix, int> length;
  int longest = 0;
};

inline WeylGroup weyl_group(const bruhat::CartanSpec& c) {
  WeylGroup g;
  std::queue<Matrix> todo;
  g.length[identity(c.rank())] = 0;
  todo.push(identity(c.rank()));
  while (!todo.empty()) {
    Matrix m = todo.front();
    todo.pop();
    const int len = g.length[m];
    for (int i = 0; i < c.rank(); ++i) {
      Matrix next = reflect_left(m, i, c);
      if (g.length.emplace(next, len + 1).second) {
        g.longest = std::max(g.longest, len + 1);
        todo.push(std::move(next));
      }
    }
  }
  return g;
}

inline bool reduced(const std::vector<int>& word, const bruhat::CartanSpec& c, const WeylGroup& g) {
  return g.length.at(product(word, c)) == static_cast<int>(word.size());
}

// Every word of the given length whose product is `target` and which is reduced.
inline std::set<std::vector<int>> reduced_words(const Matrix& target, int length,
                                                const bruhat::CartanSpec& c) {
  std::set<std::vector<int>> out;
  std::vector<int> word(length, 0);
  const int n = c.rank();
  long total = 1;
  for (int k = 0; k < length; ++k) total *= n;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int k = 0; k < length; ++k) {
      word[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    if (product(word, c) == target) out.insert(word);
  }
  return out;
}

// Sigma graph straight from the definitions, 0-based positions.
struct Sigma {
  std::vector<int> prev;
  std::set<std::pair<int, int>> horizontal;
  std::set<std::pair<int, int>> inclined;
  std::vector<std::set<int>> masks;
};

inline Sigma sigma(const bruhat::SignedWord& w, const bruhat::CartanSpec& c) {
  const int d = w.size();
  Sigma s;
  s.prev.assign(d, -1);
  for (int k = 0; k < d; ++k) {
    for (int j = k - 1; j >= 0; --j) {
      if (w[j].index == w[k].index) {
        s.prev[k] = j;
        break;
      }
    }
  }
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      const int a = w[k].index;
      const int b = w[l].index;
      if (s.prev[l] == k) {
        s.horizontal.insert({k, l});
        continue;
      }
      if (a == b || c.entry(a, b) * c.entry(b, a) == 0) continue;
      const int pk = s.prev[k];
      const int pl = s.prev[l];
      const bool ii = pk < pl && pl < k && w[pl].sign == w[k].sign;
      const bool iii = pl < pk && pk < k && w[pk].sign == -w[k].sign;
      if (ii || iii) s.inclined.insert({k, l});
    }
  }
  s.masks.assign(d, {});
  auto add = [&](int r, int k) {
    const int a = w[k].index;
    const int b = w[r].index;
    const bool omega = a == b || (c.entry(a, b) % 2 != 0);
    if (omega) s.masks[r].insert(k);
  };
  for (const auto& [k, l] : s.horizontal) {
    add(k, l);
    add(l, k);
  }
  for (const auto& [k, l] : s.inclined) {
    add(k, l);
    add(l, k);
  }
  return s;
}

// Orbit sizes by plain BFS on explicit (target, mask) lists.
struct Generator {
  int target;
  std::vector<int> mask;
  int bias = 0;
};

inline std::uint64_t apply(const Generator& g, std::uint64_t x) {
  int flip = g.bias;
  for (int k : g.mask) flip ^= static_cast<int>((x >> k) & 1U);
  return flip ? x ^ (std::uint64_t{1} << g.target) : x;
}

inline std::map<std::uint64_t, std::uint64_t> orbit_histogram(int d, const std::vector<Generator>& gens) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::vector<char> seen(std::size_t{1} << d, 0);
  for (std::uint64_t s = 0; s < seen.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t size = 0;
    std::queue<std::uint64_t> todo;
    todo.push(s);
    seen[s] = 1;
    while (!todo.empty()) {
      const auto x = todo.front();
      todo.pop();
      ++size;
      for (const auto& g : gens) {
        const auto y = apply(g, x);
        if (!seen[y]) {
          seen[y] = 1;
          todo.push(y);
        }
      }
    }
    ++histogram[size];
  }
  return histogram;
}

inline std::uint64_t count_fixed(int d, const std::vector<Generator>& gens) {
  std::uint64_t fixed = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
    bool all = true;
    for (const auto& g : gens) all = all && apply(g, x) == x;
    fixed += all;
  }
  return fixed;
}

inline std::vector<Generator> random_generators(int d, std::mt19937_64& rng, bool affine = false) {
  std::vector<Generator> gens;
  for (int t = 0; t < d; ++t) {
    if (rng() % 3 == 0) continue;
    Generator g{t, {}, affine ? static_cast<int>(rng() % 2) : 0};
    for (int k = 0; k < d; ++k) {
      if (k != t && rng() % 3 == 0) g.mask.push_back(k);
    }
    gens.push_back(g);
  }
  return gens;
}

}  // namespace oracle
