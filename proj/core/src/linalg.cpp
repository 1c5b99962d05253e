#include "ccdet/linalg.hpp"

#include <stdexcept>

namespace ccdet {

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rational inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  if (a.empty()) return QVector{};
  const int cols = static_cast<int>(a[0].size());
  QMatrix aug = a;
  for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt; // 0 = 1 row
  QVector x(cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::vector<QVector> nullspace(const QMatrix& a) {
  std::vector<QVector> basis;
  if (a.empty()) return basis;
  const int cols = static_cast<int>(a[0].size());
  QMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace ccdet
