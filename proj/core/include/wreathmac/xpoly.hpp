#ifndef WREATHMAC_XPOLY_HPP
#define WREATHMAC_XPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreathmac/partition.hpp"
#include "wreathmac/qtscalar.hpp"

namespace wreathmac {

// Exponent vector over the flattened variables x^(0)_1..x^(0)_{N_0}, x^(1)_1, ...
using XMonomial = std::vector<int>;

// Monomial order: higher total degree first, then lexicographically larger
// exponent vector first (so x_0_1 is the largest variable).
struct XMonomialOrder {
  bool operator()(const XMonomial& a, const XMonomial& b) const;
};

// Polynomial in the x-variables of Pol_N over Q(q,t).
class XPoly {
 public:
  using TermMap = std::map<XMonomial, QTScalar, XMonomialOrder>;

  explicit XPoly(DimVector N);
  static XPoly constant(const DimVector& N, const QTScalar& c);
  static XPoly variable(const DimVector& N, int vertex, int slot);  // slot is 1-based
  static XPoly parse(std::string_view text, const DimVector& N);

  const DimVector& dims() const { return N_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  QTScalar coeff(const XMonomial& m) const;
  void add_term(const XMonomial& m, const QTScalar& c);
  int degree() const;  // -1 for zero
  bool is_homogeneous(int d) const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly scaled(const QTScalar& c) const;
  XPoly map_coefficients(const std::function<QTScalar(const QTScalar&)>& f) const;
  XPoly swapped(int flat_a, int flat_b) const;

  bool operator==(const XPoly& o) const;
  std::string str() const;

 private:
  DimVector N_;
  TermMap terms_;
};

using MultiSymPoly = XPoly;

std::string variable_name(const DimVector& N, int flat);

bool is_symmetric(const XPoly& p);
// (flat_a, flat_b) of the first adjacent same-vertex transposition that moves p
std::optional<std::pair<int, int>> asymmetry_witness(const XPoly& p);

// Multipartitions of `degree` with at most N_i rows in component i.
const std::vector<MultiPartition>& monomial_basis_keys(const DimVector& N, int degree);
XPoly monomial_symmetric(const DimVector& N, const MultiPartition& mu);
std::vector<XPoly> monomial_basis(const DimVector& N, int degree);
// All exponent vectors of the monomials of m_mu (memoized per (N, mu)).
const std::vector<XMonomial>& monomial_support(const DimVector& N, const MultiPartition& mu);
// the exponent vector with mu^(i) written on the first slots of vertex i
XMonomial leading_exponents(const DimVector& N, const MultiPartition& mu);

std::vector<QTScalar> expand_in_basis(const XPoly& p, int degree);
XPoly from_basis_coordinates(const DimVector& N, int degree, const std::vector<QTScalar>& c);

}  // namespace wreathmac

#endif
