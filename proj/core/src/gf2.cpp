#include "bruhat/gf2.hpp"

#include <stdexcept>

namespace bruhat::gf2 {

namespace {

// Reduced row echelon form in place; returns the pivot column of each kept row.
std::vector<int> eliminate(std::vector<Row>& rows, int columns) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int c = 0; c < columns && next < rows.size(); ++c) {
    const Row bit = Row{1} << c;
    std::size_t found = next;
    while (found < rows.size() && !(rows[found] & bit)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

}  // namespace

int rank(std::span<const Row> rows) {
  std::vector<Row> work(rows.begin(), rows.end());
  return static_cast<int>(eliminate(work, 64).size());
}

Kernel kernel(std::span<const Row> rows, int columns) {
  if (columns < 0 || columns > 64) throw std::invalid_argument("gf2::kernel supports up to 64 columns");
  const Row all = columns == 64 ? ~Row{0} : ((Row{1} << columns) - 1);
  std::vector<Row> work;
  work.reserve(rows.size());
  for (Row r : rows) {
    if (r & ~all) throw std::invalid_argument("gf2::kernel row has bits beyond the column count");
    work.push_back(r);
  }
  const auto pivots = eliminate(work, columns);

  Kernel k;
  k.columns = columns;
  k.rank = static_cast<int>(pivots.size());
  std::vector<char> is_pivot(static_cast<std::size_t>(columns), 0);
  for (int p : pivots) is_pivot[p] = 1;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    // x_f = 1, other free columns 0, pivot columns solved from the RREF rows.
    Row v = Row{1} << f;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (work[r] & (Row{1} << f)) v |= Row{1} << pivots[r];
    }
    k.basis.push_back(v);
  }
  return k;
}

}  // namespace bruhat::gf2
