#ifndef WREATHMAC_OPERATORS_HPP
#define WREATHMAC_OPERATORS_HPP

#include <string>
#include <vector>

#include "wreathmac/factored.hpp"
#include "wreathmac/partition.hpp"
#include "wreathmac/qtscalar.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

// A nonempty vertex set J with one selected slot per vertex of J.
struct Selection {
  std::vector<int> J;  // ascending
  std::vector<int> k;  // per vertex: 0-based slot, -1 off J
  bool contains(int j) const { return k[j] >= 0; }
  bool operator==(const Selection&) const = default;
  std::string str() const;  // "J={0,1} k=(1,1)", slots printed 1-based
};

// selections with i-1 in J
std::vector<Selection> enumerate_selections(const DimVector& N, int i);
// selections with J = I
std::vector<Selection> full_selections(const DimVector& N);

// X^(j) = q^m * x^(vertex)_slot
struct XSource {
  int vertex;
  int slot;  // 0-based
  int m;
  bool operator==(const XSource&) const = default;
};
using PropagatedX = std::vector<XSource>;

PropagatedX propagate_X(const Selection& sel, int r);
std::string propagated_str(const PropagatedX& X);  // "X0 = x_0_1, X1 = x_1_1, X2 = q*x_0_1"

// Symbolic atom as it appears in the displayed formulas: sign * q^qa t^tb * (X^(vertex) or x^(vertex)_slot)
struct SymAtom {
  int sign = 1;
  int qa = 0, tb = 0;
  bool is_X = true;
  int vertex = 0;
  int slot = 0;  // 0-based, only for plain variables
};
// num/den are sums of atoms; an empty sum is 1
struct DisplayFactor {
  std::vector<SymAtom> num, den;
  std::string str() const;
};

struct ACoefficient {
  int sign = 1;
  std::vector<DisplayFactor> factors;  // in display order
  XRational literal;                   // the same product with X substituted
  std::string str() const;
};

// A^(i) for a selection with i-1 in J
ACoefficient coefficient_A(const Selection& sel, int i, const DimVector& N);
// the specialized form for J = I
ACoefficient coefficient_A_full_support(const Selection& sel, int i, const DimVector& N);

// x_from -> q^qpow * x_to (flat indices)
struct Substitution {
  int from, to, qpow;
};
std::vector<Substitution> shift_substitutions(const Selection& sel, const DimVector& N);
XPoly shift_T(const std::vector<Substitution>& subs, const XPoly& p);
XPoly shift_T(const Selection& sel, const XPoly& p);
// "x_0_1 -> q*x_1_1, x_1_1 -> q^2*x_0_1"
std::string substitutions_str(const std::vector<Substitution>& subs, const DimVector& N);
// "f(q*x_1_1, x_0_2 | q^2*x_0_1, x_1_2 | x_2_1, x_2_2)"
std::string shifted_arguments_str(const std::vector<Substitution>& subs, const DimVector& N);

struct OperatorTerm {
  Selection sel;
  PropagatedX X;
  int sign = 1;  // (-1)^|J| for M^(i)
  ACoefficient A;
  std::vector<Substitution> shift;
};

enum class OperatorKind { Wreath, Classic, Shoji };

std::vector<OperatorTerm> wreath_terms(int i, const DimVector& N);
// r = 1 textbook operator, N = (n)
std::vector<OperatorTerm> classic_terms(int n);
std::vector<OperatorTerm> shoji_terms(const DimVector& N);
// dispatch on kind; Classic requires r = 1
std::vector<OperatorTerm> operator_terms(OperatorKind kind, int i, const DimVector& N);

// M^(i) as printed satisfies M P = (q/(q-t))^(r-1) e P; this is the inverse factor.
QTScalar eigen_normalization(int r);

// sum_k q^lambda_k t^(N-k) chi^(k - lambda_k), N = total of N
CharRingElem eigen_character(const Partition& lambda, const DimVector& N);
QTScalar eigenvalue(const Partition& lambda, int i, const DimVector& N, int r);

}  // namespace wreathmac

#endif
