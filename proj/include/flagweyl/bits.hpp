#ifndef FLAGWEYL_BITS_HPP
#define FLAGWEYL_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace flagweyl {

// Row sets are bitmasks over [n]; bit (i-1) encodes row i.
using RowSet = std::uint64_t;

inline int popcount(RowSet s) { return std::popcount(s); }

inline bool contains(RowSet s, int row) { return (s >> (row - 1)) & 1u; }

inline RowSet with(RowSet s, int row) { return s | (RowSet{1} << (row - 1)); }

inline RowSet without(RowSet s, int row) { return s & ~(RowSet{1} << (row - 1)); }

// [m] as a mask, i.e. rows 1..m. interval(0) is empty.
inline RowSet interval(int m) { return m <= 0 ? 0 : (m >= 64 ? ~RowSet{0} : (RowSet{1} << m) - 1); }

inline RowSet complement(RowSet s, int n) { return ~s & interval(n); }

// Ascending list of 1-based rows in s.
inline std::vector<int> rows_of(RowSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline RowSet mask_of(const std::vector<int>& rows) {
  RowSet s = 0;
  for (int r : rows) s = with(s, r);
  return s;
}

// k-th smallest row of s, 1-based k. Precondition: k <= popcount(s).
inline int kth_row(RowSet s, int k) {
  while (--k) s &= s - 1;
  return std::countr_zero(s) + 1;
}

inline int min_row(RowSet s) { return std::countr_zero(s) + 1; }

inline int max_row(RowSet s) { return 64 - std::countl_zero(s); }

}  // namespace flagweyl

#endif
