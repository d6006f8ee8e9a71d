#ifndef WREATHMAC_APPLY_HPP
#define WREATHMAC_APPLY_HPP

#include <memory>
#include <vector>

#include "wreathmac/operators.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

// Symbolic application of sum_terms sign * A * T. All terms are brought over
// one common denominator (a product of linear forms and scalar binomials),
// and the forms are divided out exactly; a failed division or an asymmetric
// result raises CertificationError. Limited to 14 variables.
class SymbolicOperator {
 public:
  SymbolicOperator(std::vector<OperatorTerm> terms, DimVector N);
  ~SymbolicOperator();
  SymbolicOperator(const SymbolicOperator&) = delete;
  SymbolicOperator& operator=(const SymbolicOperator&) = delete;

  const DimVector& dims() const { return N_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  // number of distinct linear forms in the common denominator
  std::size_t denominator_forms() const;

  // image of the monomial symmetric polynomial m_mu (certified)
  XPoly image_of_monomial(const MultiPartition& mu) const;
  // p must be symmetric; DomainError names the offending transposition otherwise
  XPoly apply(const XPoly& p) const;

 private:
  struct Impl;
  std::vector<OperatorTerm> terms_;
  DimVector N_;
  std::unique_ptr<Impl> impl_;
};

// memoized per (kind, i, N); thread safe
std::shared_ptr<const SymbolicOperator> symbolic_operator(OperatorKind kind, int i, const DimVector& N);

// By default apply_M is rescaled by eigen_normalization(r) so that its
// eigenvalues are exactly e^(i); as_printed skips the rescaling.
XPoly apply_M(int i, const DimVector& N, const XPoly& p, bool as_printed = false);
XPoly apply_classic_M(int n, const XPoly& p);
XPoly apply_shoji_S(const DimVector& N, const XPoly& p);

}  // namespace wreathmac

#endif
