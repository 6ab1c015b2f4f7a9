#include "saitoforge/linsolve.hpp"

#include "saitoforge/errors.hpp"

namespace sf {

LinSolution linsolve(const Matrix<CycNum>& a, const std::vector<CycNum>& b) {
  int m = a.rows();
  int n = a.cols();
  if (static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("linsolve: right-hand side has wrong length");
  }
  // Augmented rows, reduced to row echelon form in place.
  std::vector<std::vector<CycNum>> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    r.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < n; ++j) r.push_back(a(i, j));
    r.push_back(b[static_cast<std::size_t>(i)]);
  }
  std::vector<int> pivot_col;
  int prow = 0;
  for (int col = 0; col < n && prow < m; ++col) {
    int sel = -1;
    for (int i = prow; i < m; ++i) {
      if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[static_cast<std::size_t>(prow)], rows[static_cast<std::size_t>(sel)]);
    auto& pr = rows[static_cast<std::size_t>(prow)];
    CycNum inv = pr[static_cast<std::size_t>(col)].inv();
    for (int j = col; j <= n; ++j) pr[static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == prow) continue;
      auto& r = rows[static_cast<std::size_t>(i)];
      CycNum f = r[static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = col; j <= n; ++j) {
        const CycNum& p = pr[static_cast<std::size_t>(j)];
        if (!p.is_zero()) r[static_cast<std::size_t>(j)] -= f * p;
      }
    }
    pivot_col.push_back(col);
    ++prow;
  }
  for (int i = prow; i < m; ++i) {
    if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].is_zero()) {
      throw Inconsistent("linear system has no solution");
    }
  }
  LinSolution sol;
  sol.particular.assign(static_cast<std::size_t>(n), CycNum());
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    is_pivot[static_cast<std::size_t>(pivot_col[k])] = true;
    sol.particular[static_cast<std::size_t>(pivot_col[k])] = rows[k][static_cast<std::size_t>(n)];
  }
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<CycNum> v(static_cast<std::size_t>(n), CycNum());
    v[static_cast<std::size_t>(f)] = CycNum(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      v[static_cast<std::size_t>(pivot_col[k])] = -rows[k][static_cast<std::size_t>(f)];
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

Matrix<RatFn> inverse(const Matrix<RatFn>& m) {
  RatFn d = det(m);
  if (d.is_zero()) throw DivisionByZero("singular matrix");
  RatFn dinv = d.inv();
  Matrix<RatFn> adj = adjugate(m);
  return dinv * adj;
}

}  // namespace sf
