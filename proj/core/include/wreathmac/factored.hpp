#ifndef WREATHMAC_FACTORED_HPP
#define WREATHMAC_FACTORED_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wreathmac/partition.hpp"
#include "wreathmac/poly2.hpp"
#include "wreathmac/qtscalar.hpp"

namespace wreathmac {

// c * q^qa * t^tb * x_var (flat index)
struct XAtom {
  long c;
  int qa, tb;
  int var;
};
// sum of XAtoms; empty means 1
using LinearExpr = std::vector<XAtom>;

// Rational function in the x-variables stored as a literal list of linear factors.
struct XRational {
  int sign = 1;
  std::vector<LinearExpr> num, den;
  std::string str(const DimVector& N) const;
};

// x_u + sigma * q^qa t^tb * x_v with u < v
struct XForm {
  int u, v;
  int sigma;
  int qa, tb;
  auto operator<=>(const XForm&) const = default;
  std::string str(const DimVector& N) const;
};

struct Poly2Less {
  bool operator()(const Poly2& a, const Poly2& b) const;
};

// Unique factorization of a product of linear factors:
// coef * q^qa t^tb * x^xexp * prod scalars^m * prod forms^m. Scalars are
// polynomials in q,t without monomial content, primitive, positive leading
// coefficient. Multiplicities are signed, negative in the denominator.
class Factored {
 public:
  explicit Factored(int nvars) : xexp_(nvars, 0) {}

  void multiply(const LinearExpr& e, int power);
  void multiply_scalar(const Poly2& p, int power);
  Factored& operator*=(const Factored& o);

  bool is_zero() const { return coef_ == 0; }
  const BigRat& coef() const { return coef_; }
  int qa() const { return qa_; }
  int tb() const { return tb_; }
  const std::vector<int>& xexp() const { return xexp_; }
  const std::map<Poly2, int, Poly2Less>& scalars() const { return scalars_; }
  const std::map<XForm, int>& forms() const { return forms_; }

  bool operator==(const Factored& o) const;
  // value at x = point (integers), as an element of Q(q,t); throws on a vanishing denominator
  QTScalar evaluate(const std::vector<long>& point) const;
  std::string str(const DimVector& N) const;

 private:
  void bump_scalar(const Poly2& p, int power);

  BigRat coef_ = 1;
  int qa_ = 0, tb_ = 0;
  std::vector<int> xexp_;
  std::map<Poly2, int, Poly2Less> scalars_;
  std::map<XForm, int> forms_;
};

Factored factor(const XRational& a, int nvars);

// Splits c1 q^a1 t^b1 + c2 q^a2 t^b2 (Laurent) into unit * q^qa t^tb * prim,
// prim canonical as in Factored. Returns false when the sum is zero.
struct ScalarSplit {
  BigRat unit;
  int qa, tb;
  Poly2 prim;  // 1 when the sum is a monomial
};
bool split_binomial(const BigInt& c1, int a1, int b1, const BigInt& c2, int a2, int b2, ScalarSplit& out);

}  // namespace wreathmac

#endif
