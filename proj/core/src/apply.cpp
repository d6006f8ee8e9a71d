#include "wreathmac/apply.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <unordered_map>

#include "wreathmac/errors.hpp"
#include "wreathmac/factored.hpp"

namespace wreathmac {

namespace {

constexpr int kMaxVars = 14;

// exponents of q, t, x_0, x_1, ...
struct Mono {
  std::array<int16_t, 16> e{};
  bool operator==(const Mono& o) const { return e == o.e; }
  Mono operator+(const Mono& o) const {
    Mono m;
    for (int k = 0; k < 16; ++k) m.e[k] = static_cast<int16_t>(e[k] + o.e[k]);
    return m;
  }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    uint64_t w[4];
    std::memcpy(w, m.e.data(), sizeof w);
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct Overflow {};

inline void mul_add(int64_t& dst, int64_t a, int64_t b) {
  int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(dst, p, &dst)) throw Overflow{};
}
inline void mul_add(BigInt& dst, const BigInt& a, const BigInt& b) { dst += a * b; }
inline bool is_zero(int64_t c) { return c == 0; }
inline bool is_zero(const BigInt& c) { return c == 0; }

template <class C>
using LPoly = std::unordered_map<Mono, C, MonoHash>;

template <class C>
void compact(LPoly<C>& p) {
  for (auto it = p.begin(); it != p.end();) it = is_zero(it->second) ? p.erase(it) : std::next(it);
}

template <class C>
LPoly<C> multiply(const LPoly<C>& a, const std::vector<std::pair<Mono, C>>& b) {
  LPoly<C> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) mul_add(out[ma + mb], ca, cb);
  compact(out);
  return out;
}

Mono x_mono(int var) {
  Mono m;
  m.e[2 + var] = 1;
  return m;
}

Mono qt_mono(int qa, int tb) {
  Mono m;
  m.e[0] = static_cast<int16_t>(qa);
  m.e[1] = static_cast<int16_t>(tb);
  return m;
}

std::vector<std::pair<Mono, BigInt>> form_terms(const XForm& f) {
  Mono b = qt_mono(f.qa, f.tb) + x_mono(f.v);
  return {{x_mono(f.u), BigInt(1)}, {b, BigInt(f.sigma)}};
}

std::vector<std::pair<Mono, BigInt>> scalar_terms(const Poly2& s) {
  std::vector<std::pair<Mono, BigInt>> v;
  for (const auto& tm : s.terms()) v.push_back({qt_mono(tm.e.q, tm.e.t), tm.c});
  return v;
}

// G / (x_u + sigma q^qa t^tb x_v), synthetic division in x_u; false if inexact
template <class C>
bool divide_form(LPoly<C>& G, const XForm& f) {
  const int slot = 2 + f.u;
  int D = -1;
  for (const auto& [m, c] : G) D = std::max<int>(D, m.e[slot]);
  if (D < 0) return true;  // G = 0
  for (const auto& [m, c] : G)
    if (m.e[slot] < 0) return false;
  std::vector<LPoly<C>> g(D + 1);
  for (const auto& [m, c] : G) {
    Mono k = m;
    int d = k.e[slot];
    k.e[slot] = 0;
    g[d].emplace(k, c);
  }
  // x_u - alpha, alpha = -sigma q^qa t^tb x_v
  const Mono alpha = qt_mono(f.qa, f.tb) + x_mono(f.v);
  const C alpha_c = C(-f.sigma);
  std::vector<LPoly<C>> h(D);
  if (D == 0) return G.empty();
  h[D - 1] = std::move(g[D]);
  for (int k = D - 1; k >= 1; --k) {
    LPoly<C> next = std::move(g[k]);
    for (const auto& [m, c] : h[k]) mul_add(next[m + alpha], c, alpha_c);
    compact(next);
    h[k - 1] = std::move(next);
  }
  LPoly<C> rem = std::move(g[0]);
  for (const auto& [m, c] : h[0]) mul_add(rem[m + alpha], c, alpha_c);
  compact(rem);
  if (!rem.empty()) return false;
  LPoly<C> out;
  for (int k = 0; k < D; ++k)
    for (auto& [m, c] : h[k]) {
      Mono key = m;
      key.e[slot] = static_cast<int16_t>(k);
      out.emplace(key, std::move(c));
    }
  G = std::move(out);
  return true;
}

}  // namespace

struct SymbolicOperator::Impl {
  int nv = 0;
  std::map<XForm, int> forms;            // common denominator
  std::map<Poly2, int, Poly2Less> scal;  // scalar part of it
  QTScalar scalar_den_inverse;           // 1 / (Z * prod scal)
  std::vector<LPoly<BigInt>> cof;        // per term numerator over the common denominator
  std::vector<std::vector<std::pair<Mono, int64_t>>> cof_small;  // same, when they fit
  bool small_ok = true;
  std::vector<std::size_t> term_index;  // which OperatorTerm each cofactor belongs to

  template <class C>
  XPoly image(const std::vector<OperatorTerm>& terms, const DimVector& N, const MultiPartition& mu) const;
};

SymbolicOperator::SymbolicOperator(std::vector<OperatorTerm> terms, DimVector N)
    : terms_(std::move(terms)), N_(std::move(N)), impl_(std::make_unique<Impl>()) {
  Impl& I = *impl_;
  I.nv = N_.total();
  if (I.nv > kMaxVars) throw DomainError("symbolic engine supports at most 14 variables");
  std::vector<Factored> fs;
  BigInt Z = 1;
  for (std::size_t a = 0; a < terms_.size(); ++a) {
    Factored f = factor(terms_[a].A.literal, I.nv);
    if (terms_[a].sign < 0) f.multiply_scalar(Poly2(-1), 1);
    if (f.is_zero()) continue;
    for (const auto& [x, m] : f.forms())
      if (m < 0) I.forms[x] = std::max(I.forms[x], -m);
    for (const auto& [s, m] : f.scalars())
      if (m < 0) I.scal[s] = std::max(I.scal[s], -m);
    mpz_lcm(Z.get_mpz_t(), Z.get_mpz_t(), f.coef().get_den_mpz_t());
    fs.push_back(std::move(f));
    I.term_index.push_back(a);
  }
  Poly2 sden(Z);
  for (const auto& [s, m] : I.scal) sden *= s.pow(m);
  I.scalar_den_inverse = QTScalar(1) / QTScalar(sden);

  for (const Factored& f : fs) {
    Mono base = qt_mono(f.qa(), f.tb());
    for (int v = 0; v < I.nv; ++v) base.e[2 + v] = static_cast<int16_t>(f.xexp()[v]);
    BigRat c = f.coef() * Z;
    LPoly<BigInt> p;
    p.emplace(base, BigInt(c.get_num()));
    for (const auto& [s, m] : I.scal) {
      auto it = f.scalars().find(s);
      int pw = m + (it == f.scalars().end() ? 0 : it->second);
      for (int k = 0; k < pw; ++k) p = multiply(p, scalar_terms(s));
    }
    for (const auto& [s, m] : f.scalars())
      if (m > 0 && !I.scal.count(s))
        for (int k = 0; k < m; ++k) p = multiply(p, scalar_terms(s));
    for (const auto& [x, m] : I.forms) {
      auto it = f.forms().find(x);
      int pw = m + (it == f.forms().end() ? 0 : it->second);
      for (int k = 0; k < pw; ++k) p = multiply(p, form_terms(x));
    }
    for (const auto& [x, m] : f.forms())
      if (m > 0 && !I.forms.count(x))
        for (int k = 0; k < m; ++k) p = multiply(p, form_terms(x));
    std::vector<std::pair<Mono, int64_t>> small;
    for (const auto& [mono, cc] : p) {
      if (!cc.fits_slong_p()) {
        I.small_ok = false;
        break;
      }
      small.push_back({mono, cc.get_si()});
    }
    I.cof_small.push_back(std::move(small));
    I.cof.push_back(std::move(p));
  }
}

SymbolicOperator::~SymbolicOperator() = default;

std::size_t SymbolicOperator::denominator_forms() const {
  std::size_t n = 0;
  for (const auto& [f, m] : impl_->forms) n += m;
  return n;
}

template <class C>
XPoly SymbolicOperator::Impl::image(const std::vector<OperatorTerm>& terms, const DimVector& N,
                                    const MultiPartition& mu) const {
  const auto& support = monomial_support(N, mu);
  LPoly<C> G;
  for (std::size_t a = 0; a < cof.size(); ++a) {
    const OperatorTerm& term = terms[term_index[a]];
    std::vector<Mono> shifted;
    shifted.reserve(support.size());
    for (const auto& ex : support) {
      XMonomial e = ex;
      for (const auto& s : term.shift) e[s.from] = 0;
      int qe = 0;
      for (const auto& s : term.shift) {
        e[s.to] += ex[s.from];
        qe += s.qpow * ex[s.from];
      }
      Mono m = qt_mono(qe, 0);
      for (int v = 0; v < nv; ++v) m.e[2 + v] = static_cast<int16_t>(e[v]);
      shifted.push_back(m);
    }
    if constexpr (std::is_same_v<C, int64_t>) {
      for (const auto& [mc, cc] : cof_small[a])
        for (const Mono& ms : shifted) mul_add(G[mc + ms], cc, int64_t(1));
    } else {
      for (const auto& [mc, cc] : cof[a])
        for (const Mono& ms : shifted) G[mc + ms] += cc;
    }
  }
  compact(G);
  // make x exponents nonnegative before dividing
  std::array<int16_t, 16> shift{};
  for (const auto& [m, c] : G)
    for (int v = 0; v < nv; ++v) shift[2 + v] = std::min(shift[2 + v], m.e[2 + v]);
  if (std::any_of(shift.begin(), shift.end(), [](int16_t s) { return s != 0; })) {
    LPoly<C> moved;
    for (auto& [m, c] : G) {
      Mono k = m;
      for (int v = 0; v < nv; ++v) k.e[2 + v] = static_cast<int16_t>(k.e[2 + v] - shift[2 + v]);
      moved.emplace(k, std::move(c));
    }
    G = std::move(moved);
  }
  for (const auto& [f, m] : forms)
    for (int k = 0; k < m; ++k)
      if (!divide_form(G, f)) throw CertificationError("denominator (" + f.str(N) + ") does not clear");
  std::map<XMonomial, std::vector<Poly2::Term>, XMonomialOrder> grouped;
  std::map<XMonomial, std::pair<int, int>, XMonomialOrder> mins;
  for (const auto& [m, c] : G) {
    XMonomial e(nv);
    for (int v = 0; v < nv; ++v) {
      e[v] = m.e[2 + v] + shift[2 + v];
      if (e[v] < 0) throw CertificationError("operator output is not a polynomial");
    }
    auto [it, fresh] = mins.try_emplace(e, m.e[0], m.e[1]);
    if (!fresh) {
      it->second.first = std::min<int>(it->second.first, m.e[0]);
      it->second.second = std::min<int>(it->second.second, m.e[1]);
    }
    grouped[e].push_back({{m.e[0], m.e[1]}, BigInt(c)});
  }
  XPoly out(N);
  for (auto& [e, tms] : grouped) {
    auto [mq, mt] = mins.at(e);
    for (auto& tm : tms) {
      tm.e.q -= mq;
      tm.e.t -= mt;
    }
    QTScalar c = QTScalar(Poly2::from_terms(std::move(tms))) * QTScalar::monomial(1, mq, mt) * scalar_den_inverse;
    out.add_term(e, c);
  }
  return out;
}

XPoly SymbolicOperator::image_of_monomial(const MultiPartition& mu) const {
  XPoly out(N_);
  bool done = false;
  if (impl_->small_ok) {
    try {
      out = impl_->image<int64_t>(terms_, N_, mu);
      done = true;
    } catch (const Overflow&) {
    }
  }
  if (!done) out = impl_->image<BigInt>(terms_, N_, mu);
  if (auto w = asymmetry_witness(out))
    throw CertificationError("operator output is not symmetric under " + variable_name(N_, w->first) + " <-> " +
                             variable_name(N_, w->second));
  if (!out.is_zero() && !out.is_homogeneous(mu.size())) throw CertificationError("operator output changed degree");
  return out;
}

XPoly SymbolicOperator::apply(const XPoly& p) const {
  if (!(p.dims() == N_)) throw DomainError("polynomial lives in a different ring");
  std::map<int, XPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (int e : m) d += e;
    parts.try_emplace(d, N_).first->second.add_term(m, c);
  }
  XPoly out(N_);
  for (const auto& [d, part] : parts) {
    std::vector<QTScalar> coords = expand_in_basis(part, d);
    const auto& keys = monomial_basis_keys(N_, d);
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (!coords[k].is_zero()) out += image_of_monomial(keys[k]).scaled(coords[k]);
  }
  return out;
}

std::shared_ptr<const SymbolicOperator> symbolic_operator(OperatorKind kind, int i, const DimVector& N) {
  using Key = std::tuple<int, int, std::vector<int>>;
  static std::map<Key, std::shared_ptr<const SymbolicOperator>> cache;
  static std::mutex mtx;
  Key key{static_cast<int>(kind), kind == OperatorKind::Wreath ? cyclic_mod(i, N.r()) : 0, N.entries()};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<OperatorTerm> terms = operator_terms(kind, i, N);
  auto op = std::make_shared<const SymbolicOperator>(std::move(terms), N);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.try_emplace(key, op).first->second;
}

XPoly apply_M(int i, const DimVector& N, const XPoly& p, bool as_printed) {
  XPoly out = symbolic_operator(OperatorKind::Wreath, i, N)->apply(p);
  return as_printed ? out : out.scaled(eigen_normalization(N.r()));
}

XPoly apply_classic_M(int n, const XPoly& p) { return symbolic_operator(OperatorKind::Classic, 0, DimVector{n})->apply(p); }

XPoly apply_shoji_S(const DimVector& N, const XPoly& p) { return symbolic_operator(OperatorKind::Shoji, 0, N)->apply(p); }

}  // namespace wreathmac
