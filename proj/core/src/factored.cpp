#include "wreathmac/factored.hpp"

#include <algorithm>
#include <cstdlib>

#include "wreathmac/detail/format.hpp"
#include "wreathmac/errors.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

using detail::atom_body_str;
using detail::join_signed;
using detail::SignedPiece;

namespace {

std::string expr_str(const LinearExpr& e, const DimVector& N) {
  std::vector<SignedPiece> parts;
  for (const auto& a : e) parts.push_back({a.c < 0, atom_body_str(a.c, a.qa, a.tb, variable_name(N, a.var))});
  return e.empty() ? "1" : join_signed(parts);
}

std::string product_str(const std::vector<LinearExpr>& es, const DimVector& N) {
  if (es.empty()) return "1";
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += "*";
    s += e.size() > 1 ? "(" + expr_str(e, N) + ")" : expr_str(e, N);
  }
  return s;
}

BigRat rat_pow(const BigRat& c, int power) {
  BigRat r = 1;
  BigRat b = power < 0 ? BigRat(1) / c : c;
  for (int k = 0; k < std::abs(power); ++k) r *= b;
  return r;
}

}  // namespace

std::string XRational::str(const DimVector& N) const {
  std::string s = sign < 0 ? "-" : "";
  s += product_str(num, N);
  if (!den.empty()) s += "/(" + product_str(den, N) + ")";
  return s;
}

std::string XForm::str(const DimVector& N) const {
  return join_signed({{false, variable_name(N, u)}, {sigma < 0, atom_body_str(1, qa, tb, variable_name(N, v))}});
}

bool Poly2Less::operator()(const Poly2& a, const Poly2& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].e.q != y[k].e.q) return x[k].e.q < y[k].e.q;
    if (x[k].e.t != y[k].e.t) return x[k].e.t < y[k].e.t;
    if (x[k].c != y[k].c) return x[k].c < y[k].c;
  }
  return false;
}

bool split_binomial(const BigInt& c1, int a1, int b1, const BigInt& c2, int a2, int b2, ScalarSplit& out) {
  if (a1 == a2 && b1 == b2) {
    BigInt c = c1 + c2;
    if (c == 0) return false;
    out = {BigRat(c), a1, b1, Poly2(1)};
    return true;
  }
  if (c1 == 0 || c2 == 0) {
    const BigInt& c = c1 == 0 ? c2 : c1;
    if (c == 0) return false;
    out = c1 == 0 ? ScalarSplit{BigRat(c), a2, b2, Poly2(1)} : ScalarSplit{BigRat(c), a1, b1, Poly2(1)};
    return true;
  }
  int mq = std::min(a1, a2), mt = std::min(b1, b2);
  Poly2 p = Poly2::monomial(c1, a1 - mq, b1 - mt) + Poly2::monomial(c2, a2 - mq, b2 - mt);
  BigInt g = p.content() * p.sign();
  out = {BigRat(g), mq, mt, p.div_scalar_exact(g)};
  return true;
}

void Factored::bump_scalar(const Poly2& p, int power) {
  if (p.is_one() || power == 0) return;
  auto [it, fresh] = scalars_.try_emplace(p, power);
  if (!fresh) {
    it->second += power;
    if (it->second == 0) scalars_.erase(it);
  }
}

void Factored::multiply_scalar(const Poly2& p, int power) {
  if (p.is_zero()) {
    if (power < 0) throw DomainError("division by zero");
    coef_ = 0;
    return;
  }
  Exp2 m = p.min_exponents();
  Poly2 s = p.shifted(-m.q, -m.t);
  BigInt g = s.content() * s.sign();
  coef_ *= rat_pow(BigRat(g), power);
  qa_ += power * m.q;
  tb_ += power * m.t;
  bump_scalar(s.div_scalar_exact(g), power);
}

void Factored::multiply(const LinearExpr& e, int power) {
  if (e.empty() || power == 0) return;
  if (e.size() == 1) {
    const XAtom& a = e[0];
    if (a.c == 0) {
      if (power < 0) throw DomainError("vanishing denominator");
      coef_ = 0;
      return;
    }
    coef_ *= rat_pow(BigRat(a.c), power);
    qa_ += power * a.qa;
    tb_ += power * a.tb;
    xexp_.at(a.var) += power;
    return;
  }
  if (e.size() != 2) throw DomainError("linear factor with more than two atoms");
  XAtom a = e[0], b = e[1];
  if (a.var == b.var) {
    ScalarSplit s;
    if (!split_binomial(BigInt(a.c), a.qa, a.tb, BigInt(b.c), b.qa, b.tb, s)) {
      if (power < 0) throw DomainError("vanishing denominator");
      coef_ = 0;
      return;
    }
    coef_ *= rat_pow(s.unit, power);
    qa_ += power * s.qa;
    tb_ += power * s.tb;
    xexp_.at(a.var) += power;
    bump_scalar(s.prim, power);
    return;
  }
  if (a.var > b.var) std::swap(a, b);
  if (a.c == 0 || b.c == 0) {
    multiply({a.c == 0 ? b : a}, power);
    return;
  }
  if (std::labs(a.c) != std::labs(b.c)) throw DomainError("unsupported linear factor");
  coef_ *= rat_pow(BigRat(a.c), power);
  qa_ += power * a.qa;
  tb_ += power * a.tb;
  XForm f{a.var, b.var, (a.c < 0) == (b.c < 0) ? 1 : -1, b.qa - a.qa, b.tb - a.tb};
  auto [it, fresh] = forms_.try_emplace(f, power);
  if (!fresh) {
    it->second += power;
    if (it->second == 0) forms_.erase(it);
  }
}

Factored& Factored::operator*=(const Factored& o) {
  coef_ *= o.coef_;
  qa_ += o.qa_;
  tb_ += o.tb_;
  for (std::size_t k = 0; k < xexp_.size(); ++k) xexp_[k] += o.xexp_.at(k);
  for (const auto& [p, m] : o.scalars_) bump_scalar(p, m);
  for (const auto& [f, m] : o.forms_) {
    auto [it, fresh] = forms_.try_emplace(f, m);
    if (!fresh) {
      it->second += m;
      if (it->second == 0) forms_.erase(it);
    }
  }
  return *this;
}

namespace {

QTScalar scalar_part(const Factored& f) {
  QTScalar v = QTScalar(f.coef()) * QTScalar::monomial(1, f.qa(), f.tb());
  for (const auto& [p, m] : f.scalars()) v *= QTScalar(p).pow(m);
  return v;
}

}  // namespace

bool Factored::operator==(const Factored& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return xexp_ == o.xexp_ && forms_ == o.forms_ && scalar_part(*this) == scalar_part(o);
}

QTScalar Factored::evaluate(const std::vector<long>& point) const {
  if (is_zero()) return {};
  QTScalar v = scalar_part(*this);
  for (std::size_t k = 0; k < xexp_.size(); ++k)
    if (xexp_[k] != 0) v *= QTScalar(point.at(k)).pow(xexp_[k]);
  for (const auto& [f, m] : forms_) {
    ScalarSplit s;
    if (!split_binomial(BigInt(point.at(f.u)), 0, 0, BigInt(f.sigma * point.at(f.v)), f.qa, f.tb, s)) {
      if (m < 0) throw DomainError("vanishing denominator at evaluation point");
      return {};
    }
    v *= (QTScalar(s.unit) * QTScalar::monomial(1, s.qa, s.tb) * QTScalar(s.prim)).pow(m);
  }
  return v;
}

std::string Factored::str(const DimVector& N) const {
  if (is_zero()) return "0";
  std::vector<std::string> num, den;
  std::string c = coef_.get_str();
  if (c != "1") num.push_back(c == "-1" ? "-1" : c);
  std::string m = detail::qt_monomial_str(qa_, tb_);
  if (!m.empty()) num.push_back(m);
  for (std::size_t k = 0; k < xexp_.size(); ++k) {
    if (xexp_[k] == 0) continue;
    std::string v = variable_name(N, static_cast<int>(k));
    int e = std::abs(xexp_[k]);
    (xexp_[k] > 0 ? num : den).push_back(e == 1 ? v : v + "^" + std::to_string(e));
  }
  for (const auto& [p, e] : scalars_) {
    std::string s = "(" + p.str() + ")";
    (e > 0 ? num : den).push_back(std::abs(e) == 1 ? s : s + "^" + std::to_string(std::abs(e)));
  }
  for (const auto& [f, e] : forms_) {
    std::string s = "(" + f.str(N) + ")";
    (e > 0 ? num : den).push_back(std::abs(e) == 1 ? s : s + "^" + std::to_string(std::abs(e)));
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "*") + x;
    return s.empty() ? std::string("1") : s;
  };
  return den.empty() ? join(num) : join(num) + "/(" + join(den) + ")";
}

Factored factor(const XRational& a, int nvars) {
  Factored f(nvars);
  if (a.sign < 0) f.multiply_scalar(Poly2(-1), 1);
  for (const auto& e : a.num) f.multiply(e, 1);
  for (const auto& e : a.den) f.multiply(e, -1);
  return f;
}

}  // namespace wreathmac
