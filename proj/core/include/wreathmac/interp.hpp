#ifndef WREATHMAC_INTERP_HPP
#define WREATHMAC_INTERP_HPP

#include <cstdint>
#include <vector>

#include "wreathmac/linalg.hpp"
#include "wreathmac/operators.hpp"

namespace wreathmac {

// Operator matrices by evaluation: x is set to integer points, q and t stay
// symbolic, and the image of each m_c is recovered from its values through
// the inverse of the evaluation matrix [m_b(point)]. This presumes the image
// lies in the symmetric polynomials of the same degree; extra points
// (one of them a transposed copy) are checked against the interpolant and a
// mismatch raises CertificationError.
class InterpolatedOperator {
 public:
  InterpolatedOperator(std::vector<OperatorTerm> terms, DimVector N, std::uint64_t seed = 20240917);

  const DimVector& dims() const { return N_; }
  // column c holds the monomial coordinates of the image of key c
  // (keys in monomial_basis_keys order)
  QTMatrix matrix(int degree, int check_points = 2) const;

 private:
  std::vector<OperatorTerm> terms_;
  DimVector N_;
  std::uint64_t seed_;
};

}  // namespace wreathmac

#endif
