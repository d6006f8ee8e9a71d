#ifndef WREATHMAC_SYMFUNC_HPP
#define WREATHMAC_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "wreathmac/partition.hpp"
#include "wreathmac/qtscalar.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

enum class Basis { Power, Monomial, Schur };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

// Element of the r-fold tensor power of the ring of symmetric functions.
class TensorSymFunc {
 public:
  using TermMap = std::map<MultiPartition, QTScalar>;

  TensorSymFunc(int r, Basis basis) : r_(r), basis_(basis) {}
  static TensorSymFunc unit(int r, Basis basis, const MultiPartition& key);

  int r() const { return r_; }
  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  QTScalar coeff(const MultiPartition& key) const;
  void add_term(const MultiPartition& key, const QTScalar& c);
  bool is_zero() const { return terms_.empty(); }

  TensorSymFunc operator-() const;
  TensorSymFunc& operator+=(const TensorSymFunc& o);
  friend TensorSymFunc operator+(TensorSymFunc a, const TensorSymFunc& b) { return a += b; }
  friend TensorSymFunc operator-(TensorSymFunc a, const TensorSymFunc& b) { return a += -b; }
  friend TensorSymFunc operator*(const TensorSymFunc& a, const TensorSymFunc& b);  // in a's basis
  TensorSymFunc scaled(const QTScalar& c) const;
  TensorSymFunc map_coefficients(QTScalar (*f)(const QTScalar&)) const;
  bool operator==(const TensorSymFunc& o) const;

 private:
  int r_;
  Basis basis_;
  TermMap terms_;
};

// --- single alphabet tables (memoized per degree) ---
long long character(const Partition& lambda, const Partition& rho);  // Murnaghan-Nakayama
BigInt z_factor(const Partition& rho);
long long kostka(const Partition& lambda, const Partition& mu);

TensorSymFunc convert_basis(const TensorSymFunc& f, Basis target);
TensorSymFunc plethystic_twist(const TensorSymFunc& f, const QTScalar& a);
TensorSymFunc plethystic_twist_inverse(const TensorSymFunc& f, const QTScalar& a);
QTScalar hall_pairing(const TensorSymFunc& f, const TensorSymFunc& g);
MultiSymPoly project(const TensorSymFunc& f, const DimVector& N);

}  // namespace wreathmac

#endif
