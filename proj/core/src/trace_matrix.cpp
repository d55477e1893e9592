#include "muforge/trace_matrix.hpp"

#include <tuple>

#include "muforge/diagnostics.hpp"

namespace muforge {

PrioritySet at_least_min(PrioritySet s) {
  if (s == 0) return 0;
  PrioritySet low = s & (~s + 1);
  return ~(low - 1);
}

PrioritySet max_combine(PrioritySet a, PrioritySet b) {
  if (a == 0 || b == 0) return 0;
  return (a & at_least_min(b)) | (b & at_least_min(a));
}

bool TraceMatrix::operator<(const TraceMatrix& o) const {
  return std::tie(rows, cols, cells) < std::tie(o.rows, o.cols, o.cells);
}

TraceMatrix identity_matrix(int n) {
  TraceMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = priority_singleton(0);
  return m;
}

TraceMatrix compose(const TraceMatrix& a, const TraceMatrix& b) {
  if (a.cols != b.rows) throw ValidationError("trace matrix shape mismatch");
  TraceMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      PrioritySet x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) |= max_combine(x, b.at(k, j));
    }
  return r;
}

} // namespace muforge
