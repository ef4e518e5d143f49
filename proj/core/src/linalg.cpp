#include "polyface/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace polyface::linalg {

Rat dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(MatQ& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(MatQ m) { return static_cast<int>(rref(m).size()); }

MatQ kernel_basis(MatQ m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  MatQ basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<VecQ>& points) {
  if (points.empty()) return -1;
  MatQ diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    VecQ d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

int stacked_rank(const MatQ& a, const MatQ& b) {
  MatQ m = a;
  m.insert(m.end(), b.begin(), b.end());
  return rank(std::move(m));
}

}  // namespace polyface::linalg
