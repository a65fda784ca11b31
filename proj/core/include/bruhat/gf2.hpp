#pragma once

// Dense GF(2) linear algebra on rows of at most 64 columns.

#include <cstdint>
#include <span>
#include <vector>

namespace bruhat::gf2 {

using Row = std::uint64_t;

struct Kernel {
  int columns = 0;
  int rank = 0;
  /// Basis of {x : <row, x> = 0 for every row}; columns - rank vectors.
  std::vector<Row> basis;
};

int rank(std::span<const Row> rows);

Kernel kernel(std::span<const Row> rows, int columns);

/// Parity of the dot product.
inline bool dot(Row a, Row b) { return __builtin_parityll(a & b) != 0; }

}  // namespace bruhat::gf2
