#ifndef WREATHMAC_EIGEN_HPP
#define WREATHMAC_EIGEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "wreathmac/linalg.hpp"
#include "wreathmac/operators.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

// Symbolic: exact division over the common denominator (small N).
// Interpolation: evaluation at integer points (any N). Auto picks Symbolic up
// to 6 variables.
enum class Engine { Auto, Symbolic, Interpolation };
std::string engine_name(Engine e);
Engine parse_engine(const std::string& s);
Engine resolve_engine(Engine e, const DimVector& N);

// Matrix of the operator on the degree slice of the monomial basis; column c
// is the image of monomial_basis_keys(N, degree)[c]. Wreath matrices carry
// eigen_normalization(r) unless as_printed. Classic uses N = (n). Memoized.
QTMatrix operator_matrix(OperatorKind kind, int i, const DimVector& N, int degree, Engine engine = Engine::Auto,
                         bool as_printed = false);

// The operator applied through operator_matrix, degree by degree; p must be
// symmetric (DomainError names a violating transposition otherwise).
XPoly apply_operator(OperatorKind kind, int i, const XPoly& p, Engine engine = Engine::Auto, bool as_printed = false);

struct EigenSolution {
  MultiSymPoly P;
  int kernel_dimension;  // of the first operator tried (the joint kernel is 1)
  std::vector<QTScalar> eigenvalues;
};

// Joint eigenvector of the M^(i) on the degree-n slice with eigenvalues
// e^(i)_lambda, normalized so the coefficient of the projected Schur
// function at reversed_quotient(lambda) is 1. SolveError carries the joint
// kernel dimension (0, or >= 2 for a collision).
EigenSolution solve_P_by_eigen(const Partition& lambda, int r, const DimVector& N, Engine engine = Engine::Auto);

struct VerificationReport {
  int r = 1;
  Partition core;
  Partition lambda;
  DimVector N;
  int i = 0;
  bool pass = false;
  std::string eigenvalue;
  std::string residual;  // "0" on pass
  std::string error;     // set when the case could not be evaluated
};

struct VerifyOptions {
  int r = 1;
  Partition core;
  int max_boxes = 0;
  std::optional<DimVector> N;  // otherwise minimal compatible with floor max(N_floor, n)
  int N_floor = 0;
  int jobs = 1;
  Engine engine = Engine::Auto;
};

// Every lambda with the given core and up to max_boxes quotient boxes, every
// vertex i: q^{-1}-inverted definition-route P is checked against
// M^(i) P = e^(i) P exactly. Reports ordered by (n, lambda in fiber order, i).
std::vector<VerificationReport> verify_theorem(const VerifyOptions& opt);

DimVector auto_dimension_vector(const Partition& lambda, int r, int floor = 0);

}  // namespace wreathmac

#endif
