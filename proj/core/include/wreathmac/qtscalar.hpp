#ifndef WREATHMAC_QTSCALAR_HPP
#define WREATHMAC_QTSCALAR_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreathmac/poly2.hpp"

namespace wreathmac {

// Element of Q(q,t) as num/den with gcd(num, den) = 1 in Z[q,t] and the
// grlex-leading coefficient of den positive. Zero is 0/1.
class QTScalar {
 public:
  QTScalar() : den_(1) {}
  QTScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QTScalar(const BigInt& c) : num_(c), den_(1) {}
  explicit QTScalar(const BigRat& c);
  explicit QTScalar(Poly2 num) : num_(std::move(num)), den_(1) {}
  QTScalar(Poly2 num, Poly2 den);  // canonicalizes; zero den throws DomainError

  static QTScalar q() { return QTScalar(Poly2::q()); }
  static QTScalar t() { return QTScalar(Poly2::t()); }
  // q^a t^b for any integers a, b
  static QTScalar monomial(const BigInt& c, int a, int b);
  static QTScalar parse(std::string_view text);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QTScalar operator-() const;
  QTScalar inverse() const;
  QTScalar pow(int k) const;
  QTScalar invert_q() const;  // q -> 1/q
  QTScalar scaled(const BigRat& c) const;

  friend QTScalar operator+(const QTScalar& a, const QTScalar& b);
  friend QTScalar operator-(const QTScalar& a, const QTScalar& b) { return a + (-b); }
  friend QTScalar operator*(const QTScalar& a, const QTScalar& b);
  friend QTScalar operator/(const QTScalar& a, const QTScalar& b);
  QTScalar& operator+=(const QTScalar& o) { return *this = *this + o; }
  QTScalar& operator-=(const QTScalar& o) { return *this = *this - o; }
  QTScalar& operator*=(const QTScalar& o) { return *this = *this * o; }
  QTScalar& operator/=(const QTScalar& o) { return *this = *this / o; }

  bool operator==(const QTScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  std::string str() const;

 private:
  struct Raw {};
  QTScalar(Raw, Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly2 num_;
  Poly2 den_;
};

inline QTScalar qt_add(const QTScalar& a, const QTScalar& b) { return a + b; }
inline QTScalar qt_mul(const QTScalar& a, const QTScalar& b) { return a * b; }
inline QTScalar qt_div(const QTScalar& a, const QTScalar& b) { return a / b; }
inline QTScalar qt_invert_q(const QTScalar& a) { return a.invert_q(); }

// Sums many scalars with few gcds: terms sharing a denominator are merged
// before any canonicalization.
class QTAccumulator {
 public:
  void add(const QTScalar& x);
  void add(const QTScalar& x, const BigRat& c);
  void add_fraction(const Poly2& num, const Poly2& den);  // den need not be canonical
  QTScalar result() const;
  bool empty() const { return groups_.empty(); }

 private:
  struct Group {
    Poly2 den;
    Poly2 num;  // numerator over (scale * den)
    BigInt scale = 1;
  };
  std::vector<Group> groups_;
  std::map<std::size_t, std::vector<std::size_t>> index_;
};

// Laurent polynomial in q, t with integer coefficients.
class LaurentQT {
 public:
  LaurentQT() = default;
  static LaurentQT monomial(const BigInt& c, int a, int b);
  LaurentQT& operator+=(const LaurentQT& o);
  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  QTScalar to_scalar() const;
  bool operator==(const LaurentQT&) const = default;
  std::string str() const;

 private:
  std::map<std::pair<int, int>, BigInt> terms_;
};

// Element of Z[q^+-1, t^+-1, chi]/(chi^r - 1); component i is the chi^i part.
class CharRingElem {
 public:
  explicit CharRingElem(int r);
  int r() const { return static_cast<int>(comp_.size()); }
  const LaurentQT& component(int i) const;  // i taken modulo r
  CharRingElem& operator+=(const CharRingElem& o);
  // chi -> 1
  QTScalar specialize_chi_one() const;
  bool operator==(const CharRingElem&) const = default;
  std::string str() const;

 private:
  friend CharRingElem char_reduce(int, int, int, int);
  std::vector<LaurentQT> comp_;
};

int cyclic_mod(long a, int r);
CharRingElem char_reduce(int exponent_q, int exponent_t, int exponent_chi, int r);

}  // namespace wreathmac

#endif
