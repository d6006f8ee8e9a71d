#ifndef WREATHMAC_LINALG_HPP
#define WREATHMAC_LINALG_HPP

#include <vector>

#include "wreathmac/poly2.hpp"
#include "wreathmac/qtscalar.hpp"

namespace wreathmac {

using QTVector = std::vector<QTScalar>;
using QTMatrix = std::vector<QTVector>;
using PolyMatrix = std::vector<std::vector<Poly2>>;

// Multiplies each row by the lcm of its denominators.
PolyMatrix clear_row_denominators(const QTMatrix& A);

struct Echelon {
  PolyMatrix R;             // row echelon form, fraction free
  std::vector<int> pivots;  // pivot column of row k
  int swaps = 0;
};

// Bareiss elimination over Z[q,t]; the pivot in each column is the nonzero
// candidate with the fewest terms.
Echelon bareiss(PolyMatrix A);

QTMatrix identity(std::size_t n);
QTMatrix operator*(const QTMatrix& a, const QTMatrix& b);
QTVector operator*(const QTMatrix& a, const QTVector& v);
QTMatrix operator-(const QTMatrix& a, const QTMatrix& b);
QTMatrix scaled(const QTMatrix& a, const QTScalar& c);

int rank(const QTMatrix& A);
QTScalar determinant(const QTMatrix& A);
// basis of {x : A x = 0}; vector k has a 1 in the k-th free column
std::vector<QTVector> kernel_basis(const QTMatrix& A);
// unique solution of A x = b (A may have more rows than columns);
// SolveError reports the solution-space dimension (0 when inconsistent: -1)
QTVector solve_unique(const QTMatrix& A, const QTVector& b);

}  // namespace wreathmac

#endif
