#include "wreathmac/linalg.hpp"

#include "wreathmac/errors.hpp"

namespace wreathmac {

namespace {

Poly2 lcm(const Poly2& a, const Poly2& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return a.divexact(gcd(a, b)) * b;
}

}  // namespace

PolyMatrix clear_row_denominators(const QTMatrix& A) {
  PolyMatrix out;
  out.reserve(A.size());
  for (const auto& row : A) {
    Poly2 L(1);
    for (const auto& x : row)
      if (!x.is_zero()) L = lcm(L, x.den());
    std::vector<Poly2> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.is_zero() ? Poly2() : x.num() * L.divexact(x.den()));
    out.push_back(std::move(r));
  }
  return out;
}

Echelon bareiss(PolyMatrix A) {
  Echelon E;
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  Poly2 prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i)
      if (!A[i][c].is_zero() && (best == m || A[i][c].size() < A[best][c].size())) best = i;
    if (best == m) continue;
    if (best != r) {
      std::swap(A[best], A[r]);
      ++E.swaps;
    }
    const Poly2& p = A[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const Poly2 a = A[i][c];
      for (std::size_t j = c + 1; j < n; ++j) {
        Poly2 v = p * A[i][j];
        if (!a.is_zero() && !A[r][j].is_zero()) v -= a * A[r][j];
        A[i][j] = prev.is_one() ? std::move(v) : v.divexact(prev);
      }
      A[i][c] = Poly2();
    }
    // rows above r are left alone; rows below got the same scale
    prev = A[r][c];
    E.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  E.R = std::move(A);
  return E;
}

QTMatrix identity(std::size_t n) {
  QTMatrix I(n, QTVector(n));
  for (std::size_t k = 0; k < n; ++k) I[k][k] = 1;
  return I;
}

QTMatrix operator*(const QTMatrix& a, const QTMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
  QTMatrix c(n, QTVector(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QTAccumulator acc;
      for (std::size_t k = 0; k < l; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) acc.add(a[i][k] * b[k][j]);
      c[i][j] = acc.result();
    }
  return c;
}

QTVector operator*(const QTMatrix& a, const QTVector& v) {
  QTVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    QTAccumulator acc;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!a[i][k].is_zero() && !v[k].is_zero()) acc.add(a[i][k] * v[k]);
    out[i] = acc.result();
  }
  return out;
}

QTMatrix operator-(const QTMatrix& a, const QTMatrix& b) {
  QTMatrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

QTMatrix scaled(const QTMatrix& a, const QTScalar& s) {
  QTMatrix c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

int rank(const QTMatrix& A) { return static_cast<int>(bareiss(clear_row_denominators(A)).pivots.size()); }

QTScalar determinant(const QTMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  for (const auto& row : A)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  // row scales are undone at the end
  QTScalar scale(1);
  for (const auto& row : A) {
    Poly2 L(1);
    for (const auto& x : row)
      if (!x.is_zero()) L = lcm(L, x.den());
    scale *= QTScalar(L);
  }
  Echelon E = bareiss(clear_row_denominators(A));
  if (E.pivots.size() < n) return {};
  QTScalar d(E.R[n - 1][n - 1]);
  if (E.swaps % 2) d = -d;
  return d / scale;
}

namespace {

// back substitution on an echelon form with n unknown columns; free columns preset in `fixed`
QTVector back_substitute(const Echelon& E, std::size_t n, const QTVector& fixed) {
  QTVector x = fixed;
  for (std::size_t k = E.pivots.size(); k-- > 0;) {
    const std::size_t p = E.pivots[k];
    QTAccumulator acc;
    for (std::size_t j = p + 1; j < n; ++j)
      if (!E.R[k][j].is_zero() && !x[j].is_zero()) acc.add(QTScalar(E.R[k][j]) * x[j]);
    if (n < E.R[k].size() && !E.R[k][n].is_zero()) acc.add(-QTScalar(E.R[k][n]));
    x[p] = -acc.result() / QTScalar(E.R[k][p]);
  }
  return x;
}

}  // namespace

std::vector<QTVector> kernel_basis(const QTMatrix& A) {
  if (A.empty()) return {};
  const std::size_t n = A[0].size();
  Echelon E = bareiss(clear_row_denominators(A));
  std::vector<bool> is_pivot(n, false);
  for (int p : E.pivots) is_pivot[p] = true;
  std::vector<QTVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QTVector x(n);
    x[f] = 1;
    basis.push_back(back_substitute(E, n, x));
  }
  return basis;
}

QTVector solve_unique(const QTMatrix& A, const QTVector& b) {
  if (A.size() != b.size()) throw DomainError("right-hand side has wrong length");
  const std::size_t n = A.empty() ? 0 : A[0].size();
  QTMatrix aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon E = bareiss(clear_row_denominators(aug));
  if (!E.pivots.empty() && E.pivots.back() == static_cast<int>(n)) throw SolveError("linear system is inconsistent", -1);
  if (E.pivots.size() < n)
    throw SolveError("solution space has dimension " + std::to_string(n - E.pivots.size()),
                     static_cast<int>(n - E.pivots.size()));
  return back_substitute(E, n, QTVector(n));
}

}  // namespace wreathmac
