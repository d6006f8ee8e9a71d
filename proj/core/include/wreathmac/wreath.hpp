#ifndef WREATHMAC_WREATH_HPP
#define WREATHMAC_WREATH_HPP

#include <map>

#include "wreathmac/partition.hpp"
#include "wreathmac/symfunc.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

// Which keys may carry nonzero Schur coefficients after each twist.
// Frozen at the certified choice: the q-twist keeps lambda and everything
// strictly above it in dominance, the t^{-1}-twist lambda and everything below.
enum class Direction { Certified, Swapped };

// Modified wreath function from the two triangularity conditions and the
// normalization <H, s_(n) at vertex 0> = 1. Schur basis, keys reversed
// quotients of the fiber. SolveError when the system is not uniquely solvable.
TensorSymFunc compute_Hhat(const Partition& lambda, int r, Direction dir = Direction::Certified);

// twist of Hhat by t^{-1}, rescaled so the Schur coefficient at
// reversed_quotient(lambda) is 1
TensorSymFunc compute_P(const Partition& lambda, int r, Direction dir = Direction::Certified);

// q -> 1/q on compute_P, projected to N variables; N must be compatible with
// kappa_cl(lambda) and every N_i at least the quotient size
MultiSymPoly compute_P_finite(const Partition& lambda, int r, const DimVector& N);

// throws DomainError unless N is compatible and large enough for lambda
void check_dimension_vector(const Partition& lambda, int r, const DimVector& N);

}  // namespace wreathmac

#endif
