#pragma once

#include <cstdint>
#include <vector>

namespace muforge {

// Set of priorities as a bitmask; priorities stay well below 32.
using PrioritySet = std::uint32_t;

inline PrioritySet priority_singleton(int p) { return PrioritySet{1} << p; }

// All values >= the least element of s (empty for empty s).  Used by the
// max-combine below: max(x, y) == z iff z is in one operand and the other
// has an element <= z.
PrioritySet at_least_min(PrioritySet s);

// { max(x, y) : x in a, y in b }
PrioritySet max_combine(PrioritySet a, PrioritySet b);

// cell(f, h) holds every achievable value of "highest priority seen" over
// threads from slot f on one side to slot h on the other.  Identity is the
// diagonal {0}: 0 is neutral for max.
struct TraceMatrix {
  int rows = 0, cols = 0;
  std::vector<PrioritySet> cells;

  TraceMatrix() = default;
  TraceMatrix(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, 0) {}

  PrioritySet& at(int r, int c) { return cells[static_cast<std::size_t>(r) * cols + c]; }
  PrioritySet at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const TraceMatrix& o) const {
    return rows == o.rows && cols == o.cols && cells == o.cells;
  }
  bool operator<(const TraceMatrix& o) const;
};

TraceMatrix identity_matrix(int n);
TraceMatrix compose(const TraceMatrix& a, const TraceMatrix& b);

} // namespace muforge
