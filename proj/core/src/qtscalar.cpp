#include "wreathmac/qtscalar.hpp"

#include <algorithm>

#include "wreathmac/detail/expr_parser.hpp"
#include "wreathmac/errors.hpp"

namespace wreathmac {

namespace {

struct ScalarOps {
  QTScalar from_int(const BigInt& v) { return QTScalar(v); }
  QTScalar ident(std::string_view name, std::size_t pos) {
    if (name == "q") return QTScalar::q();
    if (name == "t") return QTScalar::t();
    throw ParseError("unknown symbol '" + std::string(name) + "'", pos);
  }
  QTScalar divide(const QTScalar& a, const QTScalar& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }
  QTScalar power(const QTScalar& a, long k, std::size_t pos) {
    if (k < 0 && a.is_zero()) throw ParseError("zero to a negative power", pos);
    return a.pow(static_cast<int>(k));
  }
};

// Remove common factors; sign so that den's leading coefficient is positive.
void canonicalize(Poly2& num, Poly2& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) {
    den = 1;
    return;
  }
  if (!den.is_one()) {
    Poly2 g = gcd(num, den);
    if (!g.is_one()) {
      num = num.divexact(g);
      den = den.divexact(g);
    }
  }
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

QTScalar::QTScalar(const BigRat& c) : num_(c.get_num()), den_(c.get_den()) {}

QTScalar::QTScalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(num_, den_);
}

QTScalar QTScalar::monomial(const BigInt& c, int a, int b) {
  Poly2 num = Poly2::monomial(c, std::max(a, 0), std::max(b, 0));
  Poly2 den = Poly2::monomial(1, std::max(-a, 0), std::max(-b, 0));
  if (c < 0 || c == 0) return QTScalar(num, den);
  return QTScalar(Raw{}, std::move(num), std::move(den));
}

QTScalar QTScalar::parse(std::string_view text) {
  ScalarOps ops;
  return detail::ExprParser<QTScalar, ScalarOps>(text, ops).parse();
}

QTScalar QTScalar::operator-() const { return QTScalar(Raw{}, -num_, den_); }

QTScalar QTScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(q,t)");
  if (num_.sign() < 0) return QTScalar(Raw{}, -den_, -num_);
  return QTScalar(Raw{}, den_, num_);
}

QTScalar QTScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return QTScalar(Raw{}, num_.pow(k), den_.pow(k));
}

QTScalar QTScalar::invert_q() const {
  int d = std::max(num_.degree_q(), den_.degree_q());
  return QTScalar(num_.reverse_q(d), den_.reverse_q(d));
}

QTScalar QTScalar::scaled(const BigRat& c) const {
  if (c == 0) return {};
  return QTScalar(num_.scaled(c.get_num()), den_.scaled(c.get_den()));
}

QTScalar operator+(const QTScalar& a, const QTScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return QTScalar(QTScalar::Raw{}, a.num_ + b.num_, a.den_);
  if (a.den_ == b.den_) return QTScalar(a.num_ + b.num_, a.den_);
  // gcd(g, ..) is the only possible common factor left, see Henrici.
  Poly2 g = gcd(a.den_, b.den_);
  Poly2 ad = a.den_.divexact(g), bd = b.den_.divexact(g);
  Poly2 num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  Poly2 h = gcd(num, g);
  if (!h.is_one()) {
    num = num.divexact(h);
    g = g.divexact(h);
  }
  Poly2 den = ad * bd * g;
  if (den.sign() < 0) return QTScalar(QTScalar::Raw{}, -num, -den);
  return QTScalar(QTScalar::Raw{}, std::move(num), std::move(den));
}

QTScalar operator*(const QTScalar& a, const QTScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly2 g1 = a.den_.is_one() || b.num_.is_constant() ? Poly2(1) : gcd(b.num_, a.den_);
  Poly2 g2 = b.den_.is_one() || a.num_.is_constant() ? Poly2(1) : gcd(a.num_, b.den_);
  Poly2 an = g2.is_one() ? a.num_ : a.num_.divexact(g2);
  Poly2 bd = g2.is_one() ? b.den_ : b.den_.divexact(g2);
  Poly2 bn = g1.is_one() ? b.num_ : b.num_.divexact(g1);
  Poly2 ad = g1.is_one() ? a.den_ : a.den_.divexact(g1);
  Poly2 num = an * bn, den = ad * bd;
  // integer contents are not seen by the cross gcds when a factor is constant
  BigInt cn = num.content(), cd = den.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    num = num.div_scalar_exact(c);
    den = den.div_scalar_exact(c);
  }
  if (den.sign() < 0) return QTScalar(QTScalar::Raw{}, -num, -den);
  return QTScalar(QTScalar::Raw{}, std::move(num), std::move(den));
}

QTScalar operator/(const QTScalar& a, const QTScalar& b) { return a * b.inverse(); }

std::string QTScalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------

void QTAccumulator::add_fraction(const Poly2& num, const Poly2& den) {
  if (num.is_zero()) return;
  std::size_t h = den.hash();
  auto& bucket = index_[h];
  for (std::size_t k : bucket) {
    if (groups_[k].den == den) {
      groups_[k].num += num.scaled(groups_[k].scale);
      return;
    }
  }
  bucket.push_back(groups_.size());
  groups_.push_back({den, num, 1});
}

void QTAccumulator::add(const QTScalar& x) { add_fraction(x.num(), x.den()); }

void QTAccumulator::add(const QTScalar& x, const BigRat& c) {
  if (c == 0 || x.is_zero()) return;
  std::size_t h = x.den().hash();
  auto& bucket = index_[h];
  for (std::size_t k : bucket) {
    Group& g = groups_[k];
    if (g.den == x.den()) {
      // num/(scale*den) + c.num*x.num/(c.den*den)
      BigInt l;
      mpz_lcm(l.get_mpz_t(), g.scale.get_mpz_t(), c.get_den().get_mpz_t());
      g.num = g.num.scaled(l / g.scale) + x.num().scaled(c.get_num() * (l / c.get_den()));
      g.scale = l;
      return;
    }
  }
  bucket.push_back(groups_.size());
  groups_.push_back({x.den(), x.num().scaled(c.get_num()), c.get_den()});
}

QTScalar QTAccumulator::result() const {
  QTScalar total;
  for (const auto& g : groups_) total += QTScalar(g.num, g.den.scaled(g.scale));
  return total;
}

// ---------------------------------------------------------------------------

LaurentQT LaurentQT::monomial(const BigInt& c, int a, int b) {
  LaurentQT p;
  if (c != 0) p.terms_[{a, b}] = c;
  return p;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

QTScalar LaurentQT::to_scalar() const {
  QTScalar s;
  for (const auto& [e, c] : terms_) s += QTScalar::monomial(c, e.first, e.second);
  return s;
}

std::string LaurentQT::str() const { return to_scalar().str(); }

int cyclic_mod(long a, int r) {
  long m = a % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

CharRingElem::CharRingElem(int r) : comp_(r) {
  if (r < 1) throw DomainError("r must be positive");
}

const LaurentQT& CharRingElem::component(int i) const { return comp_[cyclic_mod(i, r())]; }

CharRingElem& CharRingElem::operator+=(const CharRingElem& o) {
  if (o.r() != r()) throw DomainError("mismatched r in character ring");
  for (int i = 0; i < r(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

QTScalar CharRingElem::specialize_chi_one() const {
  LaurentQT s;
  for (const auto& c : comp_) s += c;
  return s.to_scalar();
}

std::string CharRingElem::str() const {
  std::string s;
  for (int i = 0; i < r(); ++i) {
    if (comp_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + comp_[i].str() + ")";
    if (i > 0) s += i == 1 ? "*chi" : "*chi^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

CharRingElem char_reduce(int exponent_q, int exponent_t, int exponent_chi, int r) {
  CharRingElem e(r);
  e.comp_[cyclic_mod(exponent_chi, r)] = LaurentQT::monomial(1, exponent_q, exponent_t);
  return e;
}

}  // namespace wreathmac
