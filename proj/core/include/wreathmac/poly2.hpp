#ifndef WREATHMAC_POLY2_HPP
#define WREATHMAC_POLY2_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wreathmac {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct Exp2 {
  int q = 0;
  int t = 0;
  int degree() const { return q + t; }
  bool operator==(const Exp2&) const = default;
};

// Printing / canonical order: graded, then larger q exponent first.
inline bool grlex_before(Exp2 a, Exp2 b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.q > b.q;
}

// Sparse polynomial in Z[q,t]. Terms are kept sorted by grlex_before, no zero
// coefficients, unique exponents.
class Poly2 {
 public:
  struct Term {
    Exp2 e;
    BigInt c;
  };

  Poly2() = default;
  Poly2(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly2(const BigInt& c);

  static Poly2 monomial(const BigInt& c, int qe, int te);
  static Poly2 q() { return monomial(1, 1, 0); }
  static Poly2 t() { return monomial(1, 0, 1); }
  // Arbitrary order, duplicates allowed; merged here.
  static Poly2 from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree_q() const;
  int degree_t() const;
  int total_degree() const;
  Exp2 min_exponents() const;
  BigInt content() const;  // nonnegative
  int sign() const;        // of the leading coefficient
  Poly2 primitive_part() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);

  Poly2 scaled(const BigInt& c) const;
  Poly2 div_scalar_exact(const BigInt& c) const;
  Poly2 shifted(int dq, int dt) const;  // times q^dq t^dt
  Poly2 pow(unsigned k) const;
  // Quotient when d divides *this exactly in Z[q,t].
  std::optional<Poly2> divide_exact(const Poly2& d) const;
  Poly2 divexact(const Poly2& d) const;  // throws CertificationError otherwise
  // q^deg * p(1/q, t); deg must be >= degree_q().
  Poly2 reverse_q(int deg) const;
  // p(c, t) as a polynomial in t only.
  Poly2 eval_q(const BigInt& c) const;
  BigInt eval(const BigInt& qv, const BigInt& tv) const;

  bool operator==(const Poly2& o) const;
  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<Term> terms_;
  friend class Poly2Builder;
};

// gcd normalized with positive leading coefficient; gcd(0, 0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

struct Poly2Hash {
  std::size_t operator()(const Poly2& p) const { return p.hash(); }
};

}  // namespace wreathmac

#endif
