#include "wreathmac/operators.hpp"

#include <map>

#include "wreathmac/detail/format.hpp"
#include "wreathmac/errors.hpp"

namespace wreathmac {

using detail::atom_body_str;
using detail::join_signed;
using detail::SignedPiece;

std::string Selection::str() const {
  std::string s = "J={";
  for (std::size_t a = 0; a < J.size(); ++a) s += (a ? "," : "") + std::to_string(J[a]);
  s += "} k=(";
  for (std::size_t a = 0; a < J.size(); ++a) s += (a ? "," : "") + std::to_string(k[J[a]] + 1);
  return s + ")";
}

namespace {

void selections_for_mask(const DimVector& N, unsigned mask, std::vector<Selection>& out) {
  const int r = N.r();
  Selection base;
  base.k.assign(r, -1);
  for (int j = 0; j < r; ++j)
    if (mask >> j & 1u) base.J.push_back(j);
  for (int j : base.J)
    if (N[j] == 0) return;
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == base.J.size()) {
      out.push_back(base);
      return;
    }
    int j = base.J[a];
    for (int s = 0; s < N[j]; ++s) {
      base.k[j] = s;
      self(self, a + 1);
    }
    base.k[j] = -1;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Selection> enumerate_selections(const DimVector& N, int i) {
  const int r = N.r();
  if (r < 1 || r > 20) throw DomainError("unsupported number of vertices");
  const int need = cyclic_mod(i - 1, r);
  std::vector<Selection> out;
  for (unsigned mask = 1; mask < (1u << r); ++mask)
    if (mask >> need & 1u) selections_for_mask(N, mask, out);
  return out;
}

std::vector<Selection> full_selections(const DimVector& N) {
  std::vector<Selection> out;
  selections_for_mask(N, (1u << N.r()) - 1, out);
  return out;
}

PropagatedX propagate_X(const Selection& sel, int r) {
  if (sel.J.empty()) throw DomainError("empty selection");
  PropagatedX X(r);
  for (int j = 0; j < r; ++j) {
    int m = 0;
    while (!sel.contains((j + m) % r)) ++m;
    int v = (j + m) % r;
    X[j] = {v, sel.k[v], m};
  }
  return X;
}

namespace {

std::string var_str(int vertex, int slot) { return "x_" + std::to_string(vertex) + "_" + std::to_string(slot + 1); }

std::string sum_str(const std::vector<SymAtom>& atoms) {
  std::vector<SignedPiece> parts;
  for (const auto& a : atoms)
    parts.push_back({a.sign < 0, atom_body_str(1, a.qa, a.tb, a.is_X ? "X" + std::to_string(a.vertex) : var_str(a.vertex, a.slot))});
  return join_signed(parts);
}

}  // namespace

std::string propagated_str(const PropagatedX& X) {
  std::string s;
  for (std::size_t j = 0; j < X.size(); ++j) {
    if (j) s += ", ";
    s += "X" + std::to_string(j) + " = " + atom_body_str(1, X[j].m, 0, var_str(X[j].vertex, X[j].slot));
  }
  return s;
}

std::string DisplayFactor::str() const {
  std::string n = num.empty() ? "1" : sum_str(num);
  if (num.size() > 1) n = "(" + n + ")";
  if (den.empty()) return n;
  std::string d = sum_str(den);
  if (den.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string ACoefficient::str() const {
  std::string s = sign < 0 ? "-" : "";
  for (std::size_t a = 0; a < factors.size(); ++a) s += (a ? " * " : "") + factors[a].str();
  return factors.empty() ? (sign < 0 ? "-1" : "1") : s;
}

namespace {

SymAtom X_(int j, int sign = 1, int qa = 0, int tb = 0) { return {sign, qa, tb, true, j, 0}; }
SymAtom x_(int j, int l, int sign = 1) { return {sign, 0, 0, false, j, l}; }

LinearExpr substitute(const std::vector<SymAtom>& atoms, const PropagatedX& X, const DimVector& N) {
  LinearExpr e;
  for (const auto& a : atoms) {
    if (a.is_X) {
      const XSource& s = X.at(a.vertex);
      e.push_back({a.sign, a.qa + s.m, a.tb, N.flat(s.vertex, s.slot)});
    } else {
      e.push_back({a.sign, a.qa, a.tb, N.flat(a.vertex, a.slot)});
    }
  }
  return e;
}

void fill_literal(ACoefficient& A, const PropagatedX& X, const DimVector& N) {
  A.literal.sign = A.sign;
  for (const auto& f : A.factors) {
    if (!f.num.empty()) A.literal.num.push_back(substitute(f.num, X, N));
    if (!f.den.empty()) A.literal.den.push_back(substitute(f.den, X, N));
  }
}

// pairs numerators with denominators in order; leftovers stand alone
void pair_up(std::vector<std::vector<SymAtom>> nums, std::vector<std::vector<SymAtom>> dens,
             std::vector<DisplayFactor>& out) {
  std::size_t n = std::max(nums.size(), dens.size());
  for (std::size_t l = 0; l < n; ++l) {
    DisplayFactor f;
    if (l < nums.size()) f.num = nums[l];
    if (l < dens.size()) f.den = dens[l];
    out.push_back(f);
  }
}

}  // namespace

ACoefficient coefficient_A(const Selection& sel, int i, const DimVector& N) {
  const int r = N.r();
  const int im1 = cyclic_mod(i - 1, r);
  if (!sel.contains(im1)) throw DomainError("selection does not contain i-1");
  PropagatedX X = propagate_X(sel, r);
  ACoefficient A;
  A.factors.push_back({{X_(cyclic_mod(i, r))}, {X_(0)}});
  for (int j = 0; j < r; ++j) {
    int jm = cyclic_mod(j - 1, r);
    A.factors.push_back({{X_(jm)}, {X_(jm), X_(j, -1, 0, 1)}});
  }
  for (int j : sel.J) {
    if (j == im1) continue;
    int jp = cyclic_mod(j + 1, r);
    A.factors.push_back({{X_(jp)}, {X_(jp), X_(j, -1, -1, 0)}});
  }
  auto vertex_block = [&](int j) {
    int jm = cyclic_mod(j - 1, r);
    std::vector<std::vector<SymAtom>> nums, dens;
    for (int l = 0; l < N[jm]; ++l) nums.push_back({X_(j, 1, 0, 1), x_(jm, l, -1)});
    for (int l = 0; l < N[j]; ++l) {
      if (sel.contains(j) && l == sel.k[j])
        dens.push_back({X_(j)});
      else
        dens.push_back({X_(j), x_(j, l, -1)});
    }
    pair_up(nums, dens, A.factors);
  };
  for (int j = 0; j < r; ++j)
    if (!sel.contains(j)) vertex_block(j);
  for (int j : sel.J) vertex_block(j);
  fill_literal(A, X, N);
  return A;
}

ACoefficient coefficient_A_full_support(const Selection& sel, int i, const DimVector& N) {
  const int r = N.r();
  if (static_cast<int>(sel.J.size()) != r) throw DomainError("selection must contain every vertex");
  const int im1 = cyclic_mod(i - 1, r);
  PropagatedX X = propagate_X(sel, r);
  ACoefficient A;
  A.sign = r % 2 ? -1 : 1;
  A.factors.push_back({{X_(cyclic_mod(i, r))}, {X_(0)}});
  for (int j = 0; j < r; ++j) {
    if (j == im1) continue;
    int jp = cyclic_mod(j + 1, r);
    A.factors.push_back({{X_(jp)}, {X_(jp), X_(j, -1, -1, 0)}});
  }
  for (int j = 0; j < r; ++j)
    for (int l = 0; l < N[j]; ++l) {
      if (l == sel.k[j]) continue;
      A.factors.push_back({{X_(cyclic_mod(j + 1, r), 1, 0, 1), x_(j, l, -1)}, {X_(j), x_(j, l, -1)}});
    }
  fill_literal(A, X, N);
  return A;
}

std::vector<Substitution> shift_substitutions(const Selection& sel, const DimVector& N) {
  const int r = N.r();
  PropagatedX X = propagate_X(sel, r);
  std::vector<Substitution> subs;
  for (int j : sel.J) {
    const XSource& s = X[(j + 1) % r];
    subs.push_back({N.flat(j, sel.k[j]), N.flat(s.vertex, s.slot), s.m + 1});
  }
  return subs;
}

XPoly shift_T(const std::vector<Substitution>& subs, const XPoly& p) {
  XPoly out(p.dims());
  for (const auto& [m, c] : p.terms()) {
    XMonomial e = m;
    for (const auto& s : subs) e[s.from] = 0;
    int qe = 0;
    for (const auto& s : subs) {
      e[s.to] += m[s.from];
      qe += s.qpow * m[s.from];
    }
    out.add_term(e, qe == 0 ? c : c * QTScalar::monomial(1, qe, 0));
  }
  return out;
}

XPoly shift_T(const Selection& sel, const XPoly& p) { return shift_T(shift_substitutions(sel, p.dims()), p); }

std::string substitutions_str(const std::vector<Substitution>& subs, const DimVector& N) {
  std::string s;
  for (const auto& x : subs) {
    if (!s.empty()) s += ", ";
    s += variable_name(N, x.from) + " -> " + atom_body_str(1, x.qpow, 0, variable_name(N, x.to));
  }
  return s;
}

std::string shifted_arguments_str(const std::vector<Substitution>& subs, const DimVector& N) {
  std::map<int, const Substitution*> by_from;
  for (const auto& x : subs) by_from[x.from] = &x;
  std::string s = "f(";
  for (int j = 0; j < N.r(); ++j) {
    if (j) s += " | ";
    for (int l = 0; l < N[j]; ++l) {
      if (l) s += ", ";
      int v = N.flat(j, l);
      auto it = by_from.find(v);
      s += it == by_from.end() ? variable_name(N, v) : atom_body_str(1, it->second->qpow, 0, variable_name(N, it->second->to));
    }
  }
  return s + ")";
}

std::vector<OperatorTerm> wreath_terms(int i, const DimVector& N) {
  std::vector<OperatorTerm> out;
  for (auto& sel : enumerate_selections(N, i)) {
    OperatorTerm t;
    t.X = propagate_X(sel, N.r());
    t.sign = sel.J.size() % 2 ? -1 : 1;
    t.A = coefficient_A(sel, i, N);
    t.shift = shift_substitutions(sel, N);
    t.sel = std::move(sel);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<OperatorTerm> classic_terms(int n) {
  DimVector N{n};
  std::vector<OperatorTerm> out;
  for (auto& sel : full_selections(N)) {
    OperatorTerm t;
    t.X = propagate_X(sel, 1);
    int k = sel.k[0];
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      SymAtom txk{1, 0, 1, false, 0, k};
      SymAtom xk{1, 0, 0, false, 0, k};
      t.A.factors.push_back({{txk, x_(0, l, -1)}, {xk, x_(0, l, -1)}});
    }
    fill_literal(t.A, t.X, N);
    t.shift = {{N.flat(0, k), N.flat(0, k), 1}};
    t.sel = std::move(sel);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<OperatorTerm> shoji_terms(const DimVector& N) {
  const int r = N.r();
  std::vector<OperatorTerm> out;
  for (auto& sel : full_selections(N)) {
    OperatorTerm t;
    t.X = propagate_X(sel, r);
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < N[j]; ++l) {
        if (l == sel.k[j]) continue;
        t.A.factors.push_back({{X_(cyclic_mod(j + 1, r), 1, 0, 1), x_(j, l, -1)}, {X_(j), x_(j, l, -1)}});
      }
    fill_literal(t.A, t.X, N);
    t.shift = shift_substitutions(sel, N);
    t.sel = std::move(sel);
    out.push_back(std::move(t));
  }
  return out;
}

QTScalar eigen_normalization(int r) {
  return ((QTScalar::q() - QTScalar::t()) / QTScalar::q()).pow(r - 1);
}

CharRingElem eigen_character(const Partition& lambda, const DimVector& N) {
  const int r = N.r();
  const int total = N.total();
  if (lambda.length() > total) throw DomainError("partition has more parts than variables");
  CharRingElem e(r);
  for (int k = 1; k <= total; ++k) {
    int lk = lambda[k - 1];
    e += char_reduce(lk, total - k, k - lk, r);
  }
  return e;
}

QTScalar eigenvalue(const Partition& lambda, int i, const DimVector& N, int r) {
  if (N.r() != r) throw DomainError("dimension vector has wrong length");
  return eigen_character(lambda, N).component(i).to_scalar();
}

std::vector<OperatorTerm> operator_terms(OperatorKind kind, int i, const DimVector& N) {
  switch (kind) {
    case OperatorKind::Wreath:
      return wreath_terms(i, N);
    case OperatorKind::Classic:
      if (N.r() != 1) throw DomainError("the classic operator needs r = 1");
      return classic_terms(N[0]);
    case OperatorKind::Shoji:
      break;
  }
  return shoji_terms(N);
}

}  // namespace wreathmac
