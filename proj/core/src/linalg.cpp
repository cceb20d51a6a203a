#include "toric/linalg.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& a, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < a.size(); ++col) {
    size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const Rat inv = Rat(1) / a[row][col];
    for (Rat& x : a[row]) x *= inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank_of(QMat a) {
  if (a.empty()) return 0;
  return rref(a, a[0].size()).size();
}

Rat determinant(QMat a) {
  const size_t n = a.size();
  for (const QRow& r : a)
    if (r.size() != n) throw ValidationError("determinant: non-square matrix");
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rat inv = Rat(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rat f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::optional<QRow> solve_unique(QMat a, QRow b) {
  const size_t rows = a.size();
  if (rows != b.size()) throw ValidationError("solve: size mismatch");
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  const std::vector<size_t> pivots = rref(a, cols);
  for (size_t r = 0; r < rows; ++r) {
    bool zero_lhs = true;
    for (size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0) {
        zero_lhs = false;
        break;
      }
    if (zero_lhs && a[r][cols] != 0) return std::nullopt;  // inconsistent
  }
  if (pivots.size() < cols) throw Error("solve: underdetermined system");
  QRow x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::optional<QRow> solve_any(QMat a, QRow b) {
  const size_t rows = a.size();
  if (rows != b.size()) throw ValidationError("solve: size mismatch");
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  const std::vector<size_t> pivots = rref(a, cols);
  for (size_t r = 0; r < rows; ++r) {
    bool zero_lhs = true;
    for (size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0) {
        zero_lhs = false;
        break;
      }
    if (zero_lhs && a[r][cols] != 0) return std::nullopt;
  }
  QRow x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

QMat kernel_basis(const QMat& a, size_t cols) {
  QMat m = a;
  const std::vector<size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  QMat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QRow v(cols, Rat(0));
    v[free] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t affine_rank(const QMat& points) {
  if (points.size() <= 1) return 0;
  QMat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    QRow d(points[i].size());
    for (size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank_of(std::move(diffs));
}

bool nonnegative_solution_exists(const QMat& a, const QRow& b) {
  const size_t m = b.size();
  const size_t n = a.empty() ? 0 : a[0].size();
  if (a.size() != m) throw ValidationError("feasibility: size mismatch");
  if (m == 0) return true;

  // Tableau for: minimize sum of artificials s, subject to A x + s = b, all
  // variables >= 0 (rows flipped so b >= 0).
  const size_t total = n + m;
  QMat t(m, QRow(total + 1, Rat(0)));
  std::vector<size_t> basis(m);
  for (size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (size_t c = 0; c < n; ++c) t[r][c] = flip ? -a[r][c] : a[r][c];
    t[r][n + r] = Rat(1);
    t[r][total] = flip ? -b[r] : b[r];
    basis[r] = n + r;
  }
  // Objective row: reduced costs of sum(artificials).
  QRow obj(total + 1, Rat(0));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c <= total; ++c)
      if (c < n || c == total) obj[c] += t[r][c];

  while (true) {
    // Bland: smallest-index entering column with positive reduced cost.
    size_t enter = total;
    for (size_t c = 0; c < n; ++c)
      if (obj[c] > 0) {
        enter = c;
        break;
      }
    if (enter == total) break;
    size_t leave = m;
    Rat best;
    for (size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rat ratio = t[r][total] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) break;  // unbounded improvement cannot happen here
    const Rat inv = Rat(1) / t[leave][enter];
    for (Rat& x : t[leave]) x *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rat f = t[r][enter];
      for (size_t c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    const Rat f = obj[enter];
    if (f != 0)
      for (size_t c = 0; c <= total; ++c) obj[c] -= f * t[leave][c];
    basis[leave] = enter;
  }
  return obj[total] == 0;
}

void hermite_form(IMat a, IMat& h, IMat& u) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  u.assign(rows, IRow(rows, Int(0)));
  for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // Euclidean elimination in this column below `row`.
    while (true) {
      size_t piv = rows;
      for (size_t r = row; r < rows; ++r)
        if (a[r][col] != 0 && (piv == rows || abs(a[r][col]) < abs(a[piv][col]))) piv = r;
      if (piv == rows) break;
      std::swap(a[piv], a[row]);
      std::swap(u[piv], u[row]);
      bool done = true;
      for (size_t r = row + 1; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        const Int q = a[r][col] / a[row][col];  // truncated; loop converges anyway
        for (size_t c = 0; c < cols; ++c) a[r][c] -= q * a[row][c];
        for (size_t c = 0; c < rows; ++c) u[r][c] -= q * u[row][c];
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (Int& x : a[row]) x = -x;
      for (Int& x : u[row]) x = -x;
    }
    ++row;
  }
  h = std::move(a);
}

IMat integer_kernel(const IMat& a, size_t cols) {
  // Kernel of x -> x * A^T: HNF of A^T exposes the left kernel rows of A^T.
  IMat at(cols, IRow(a.size(), Int(0)));
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < cols; ++c) at[c][r] = a[r][c];
  IMat h, u;
  hermite_form(std::move(at), h, u);
  IMat basis;
  for (size_t r = 0; r < h.size(); ++r) {
    bool zero = true;
    for (const Int& x : h[r])
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(u[r]);
  }
  return basis;
}

IMat quotient_projection(const IMat& lattice_vectors, size_t cols) {
  // Saturated basis of the orthogonal complement lattice, i.e. the rows of a
  // matrix whose kernel is exactly span(lattice_vectors).
  IMat ortho = integer_kernel(lattice_vectors, cols);
  // Rows of P must span a saturated lattice so that P is surjective; the
  // integer kernel construction already guarantees this.
  return ortho;
}

}  // namespace toric
