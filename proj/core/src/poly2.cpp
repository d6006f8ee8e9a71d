#include "wreathmac/poly2.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "wreathmac/errors.hpp"

namespace wreathmac {

namespace {

struct GrlexLess {
  bool operator()(Exp2 a, Exp2 b) const { return grlex_before(a, b); }
};

std::size_t bits_of(const BigInt& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

BigInt max_abs(const Poly2& p) {
  BigInt m = 0;
  for (const auto& tm : p.terms())
    if (mpz_cmpabs(tm.c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(tm.c);
  return m;
}

// ---- Kronecker packing: coefficient slot (e.q * D + e.t), `limbs` limbs wide ----

struct Packing {
  int D;
  int limbs;
};

BigInt pack(const Poly2& p, const Packing& pk) {
  if (p.is_zero()) return 0;
  std::size_t slots = static_cast<std::size_t>(p.degree_q()) * pk.D + p.degree_t() + 1;
  std::vector<mp_limb_t> pos(slots * pk.limbs, 0), neg(slots * pk.limbs, 0);
  for (const auto& tm : p.terms()) {
    std::size_t slot = static_cast<std::size_t>(tm.e.q) * pk.D + tm.e.t;
    std::size_t n = mpz_size(tm.c.get_mpz_t());
    if (n > static_cast<std::size_t>(pk.limbs)) throw CertificationError("packing slot overflow");
    auto& dst = tm.c > 0 ? pos : neg;
    for (std::size_t k = 0; k < n; ++k) dst[slot * pk.limbs + k] = mpz_getlimbn(tm.c.get_mpz_t(), k);
  }
  BigInt a, b;
  mpz_import(a.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  mpz_import(b.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
  return a - b;
}

// Balanced-digit unpacking; exact when every coefficient is below 2^(64*limbs-1).
Poly2 unpack(const BigInt& v, const Packing& pk) {
  if (v == 0) return {};
  int s = sgn(v);
  const mpz_srcptr raw = v.get_mpz_t();
  std::size_t n = mpz_size(raw);
  std::size_t slots = (n + pk.limbs - 1) / pk.limbs + 1;
  std::vector<mp_limb_t> limbs(slots * pk.limbs, 0);
  for (std::size_t k = 0; k < n; ++k) limbs[k] = mpz_getlimbn(raw, k);
  BigInt half = 1, full = 1;
  mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), 64 * pk.limbs - 1);
  mpz_mul_2exp(full.get_mpz_t(), full.get_mpz_t(), 64 * pk.limbs);
  std::vector<Poly2::Term> out;
  int carry = 0;
  BigInt d;
  for (std::size_t slot = 0; slot < slots; ++slot) {
    mpz_import(d.get_mpz_t(), pk.limbs, -1, sizeof(mp_limb_t), 0, 0, &limbs[slot * pk.limbs]);
    d += carry;
    if (d >= half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (d != 0) {
      Exp2 e{static_cast<int>(slot / pk.D), static_cast<int>(slot % pk.D)};
      out.push_back({e, s > 0 ? d : BigInt(-d)});
    }
  }
  if (carry != 0) throw CertificationError("unpacking overflow");
  return Poly2::from_terms(std::move(out));
}

int limbs_for_bits(std::size_t bits) { return static_cast<int>((bits + 2 + 63) / 64); }

Poly2 kronecker_mul(const Poly2& a, const Poly2& b) {
  std::size_t bits = bits_of(max_abs(a)) + bits_of(max_abs(b)) +
                     bits_of(BigInt(static_cast<unsigned long>(std::min(a.size(), b.size())))) + 1;
  Packing pk{a.degree_t() + b.degree_t() + 1, limbs_for_bits(bits)};
  BigInt pa = pack(a, pk), pb = pack(b, pk);
  return unpack(pa * pb, pk);
}

Poly2 naive_mul(const Poly2& a, const Poly2& b) {
  const int dq = a.degree_q() + b.degree_q();
  const int dt = a.degree_t() + b.degree_t();
  const std::size_t box = static_cast<std::size_t>(dq + 1) * (dt + 1);
  std::vector<Poly2::Term> out;
  if (box <= 16 * a.size() * b.size() + 64) {
    std::vector<BigInt> acc(box);
    std::vector<char> used(box, 0);
    for (const auto& x : a.terms())
      for (const auto& y : b.terms()) {
        std::size_t idx = static_cast<std::size_t>(x.e.q + y.e.q) * (dt + 1) + (x.e.t + y.e.t);
        mpz_addmul(acc[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
        used[idx] = 1;
      }
    for (std::size_t idx = 0; idx < box; ++idx)
      if (used[idx] && acc[idx] != 0)
        out.push_back({{static_cast<int>(idx / (dt + 1)), static_cast<int>(idx % (dt + 1))},
                       std::move(acc[idx])});
  } else {
    std::unordered_map<std::uint64_t, BigInt> acc;
    for (const auto& x : a.terms())
      for (const auto& y : b.terms()) {
        std::uint64_t key = (static_cast<std::uint64_t>(x.e.q + y.e.q) << 32) |
                            static_cast<std::uint32_t>(x.e.t + y.e.t);
        mpz_addmul(acc[key].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
      }
    for (auto& [k, c] : acc)
      if (c != 0)
        out.push_back({{static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)}, std::move(c)});
  }
  return Poly2::from_terms(std::move(out));
}

std::optional<Poly2> long_division(const Poly2& a, const Poly2& d) {
  std::map<Exp2, BigInt, GrlexLess> rem;
  for (const auto& tm : a.terms()) rem.emplace(tm.e, tm.c);
  const auto& lead = d.leading();
  std::vector<Poly2::Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exp2 e = it->first;
    if (e.q < lead.e.q || e.t < lead.e.t) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.c.get_mpz_t())) return std::nullopt;
    BigInt qc = it->second / lead.c;
    Exp2 qe{e.q - lead.e.q, e.t - lead.e.t};
    for (const auto& tm : d.terms()) {
      Exp2 pe{tm.e.q + qe.q, tm.e.t + qe.t};
      auto jt = rem.try_emplace(pe, 0).first;
      mpz_submul(jt->second.get_mpz_t(), tm.c.get_mpz_t(), qc.get_mpz_t());
      if (jt->second == 0) rem.erase(jt);
    }
    quot.push_back({qe, std::move(qc)});
  }
  return Poly2::from_terms(std::move(quot));
}

bool same_poly_via_packing(const Poly2& x, const Poly2& y, const Poly2& target) {
  // decides x*y == target exactly
  std::size_t bits = std::max(bits_of(max_abs(x)) + bits_of(max_abs(y)) +
                                  bits_of(BigInt(static_cast<unsigned long>(std::min(x.size(), y.size())))),
                              bits_of(max_abs(target))) +
                     1;
  int D = std::max(x.degree_t() + y.degree_t(), target.degree_t()) + 1;
  Packing pk{D, limbs_for_bits(bits)};
  if (x.degree_q() + y.degree_q() != target.degree_q()) return false;
  return pack(x, pk) * pack(y, pk) == pack(target, pk);
}

std::optional<Poly2> kronecker_divide(const Poly2& a, const Poly2& d) {
  if (a.degree_q() < d.degree_q() || a.degree_t() < d.degree_t()) return std::nullopt;
  const int D = a.degree_t() + 1;
  std::size_t bits = bits_of(max_abs(a)) + 64;
  for (int attempt = 0; attempt < 4; ++attempt, bits *= 2) {
    Packing pk{D, limbs_for_bits(bits)};
    BigInt pa = pack(a, pk), pd = pack(d, pk);
    if (!mpz_divisible_p(pa.get_mpz_t(), pd.get_mpz_t())) return std::nullopt;
    BigInt pq;
    mpz_divexact(pq.get_mpz_t(), pa.get_mpz_t(), pd.get_mpz_t());
    Poly2 cand;
    try {
      cand = unpack(pq, pk);
    } catch (const CertificationError&) {
      continue;
    }
    if (cand.is_zero()) continue;
    if (cand.min_exponents().q < 0) continue;
    if (same_poly_via_packing(cand, d, a)) return cand;
  }
  return long_division(a, d);
}

// ---- heuristic gcd ----

BigInt symmetric_mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// Integer -> polynomial in one variable (exponent goes to q when in_q, else t).
std::vector<Poly2::Term> xi_adic(BigInt g, const BigInt& xi, bool in_q, int other_exp) {
  std::vector<Poly2::Term> out;
  int i = 0;
  while (g != 0) {
    BigInt r = symmetric_mod(g, xi);
    if (r != 0) out.push_back({in_q ? Exp2{i, other_exp} : Exp2{other_exp, i}, r});
    g -= r;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    ++i;
  }
  return out;
}

Poly2 normalize_sign(Poly2 p) { return p.sign() < 0 ? -p : p; }

Poly2 transpose(const Poly2& p) {
  std::vector<Poly2::Term> terms;
  for (const auto& tm : p.terms()) terms.push_back({{tm.e.t, tm.e.q}, tm.c});
  return Poly2::from_terms(std::move(terms));
}

// Polynomials in t only (degree_q == 0).
std::optional<Poly2> heu_univariate(const Poly2& A, const Poly2& B) {
  BigInt xi = 2 * std::min(max_abs(A), max_abs(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt va = A.eval(0, xi), vb = B.eval(0, xi);
    BigInt h;
    mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    if (h != 0) {
      Poly2 G = Poly2::from_terms(xi_adic(h, xi, false, 0)).primitive_part();
      if (!G.is_zero() && A.divide_exact(G) && B.divide_exact(G)) return normalize_sign(G);
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

Poly2 prs_gcd(const Poly2& A, const Poly2& B);

Poly2 univariate_gcd(const Poly2& A, const Poly2& B) {
  if (A.is_zero()) return normalize_sign(B);
  if (B.is_zero()) return normalize_sign(A);
  BigInt ca = A.content(), cb = B.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly2 a = normalize_sign(A.div_scalar_exact(ca)), b = normalize_sign(B.div_scalar_exact(cb));
  if (a.is_constant() || b.is_constant()) return Poly2(c);
  if (a == b) return a.scaled(c);
  if (auto g = heu_univariate(a, b)) return g->scaled(c);
  return prs_gcd(a, b).scaled(c);
}

std::optional<Poly2> heu_bivariate(const Poly2& A, const Poly2& B) {
  BigInt xi = 2 * std::min(max_abs(A), max_abs(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly2 a = A.eval_q(xi), b = B.eval_q(xi);
    Poly2 h = univariate_gcd(a, b);
    if (!h.is_zero()) {
      std::vector<Poly2::Term> terms;
      for (const auto& tm : h.terms()) {
        auto part = xi_adic(tm.c, xi, true, tm.e.t);
        terms.insert(terms.end(), part.begin(), part.end());
      }
      Poly2 G = Poly2::from_terms(std::move(terms)).primitive_part();
      if (!G.is_zero() && A.divide_exact(G) && B.divide_exact(G)) return normalize_sign(G);
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// ---- primitive PRS over Z[q][t] (fallback) ----

using Coeffs = std::vector<Poly2>;  // index = degree in t, entries in Z[q]

Coeffs split_t(const Poly2& p) {
  Coeffs c(p.degree_t() + 1);
  std::vector<std::vector<Poly2::Term>> parts(c.size());
  for (const auto& tm : p.terms()) parts[tm.e.t].push_back({{tm.e.q, 0}, tm.c});
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = Poly2::from_terms(std::move(parts[j]));
  return c;
}

Poly2 join_t(const Coeffs& c) {
  std::vector<Poly2::Term> terms;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (const auto& tm : c[j].terms()) terms.push_back({{tm.e.q, static_cast<int>(j)}, tm.c});
  return Poly2::from_terms(std::move(terms));
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// gcd of polynomials in q alone, primitive PRS
Poly2 prs_q(const Poly2& a, const Poly2& b) { return transpose(prs_gcd(transpose(a), transpose(b))); }

Poly2 content_q(const Coeffs& c) {
  Poly2 g;
  for (const auto& x : c) {
    g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

Coeffs div_content(const Coeffs& c, const Poly2& g) {
  Coeffs out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = c[j].is_zero() ? Poly2() : c[j].divexact(g);
  return out;
}

Poly2 prs_gcd(const Poly2& A, const Poly2& B) {
  // A, B primitive over Z. Univariate-in-q inputs are handled by transposition.
  if (A.degree_t() == 0 && B.degree_t() == 0) {
    if (A.degree_q() == 0 || B.degree_q() == 0) return 1;
    return prs_q(A, B);
  }
  Coeffs a = split_t(A), b = split_t(B);
  Poly2 ca = content_q(a), cb = content_q(b);
  Poly2 c = (ca.is_zero() || cb.is_zero()) ? Poly2(1) : gcd(ca, cb);
  a = div_content(a, ca);
  b = div_content(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    // pseudo-remainder of a by b
    Coeffs r = a;
    const Poly2& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
      int dr = static_cast<int>(r.size()) - 1;
      Poly2 lr = r.back();
      for (auto& x : r) x = x * lb;
      for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b[j];
      trim(r);
    }
    if (r.empty()) break;
    if (r.size() == 1) {
      b = Coeffs{Poly2(1)};
      break;
    }
    r = div_content(r, content_q(r));
    a = std::move(b);
    b = std::move(r);
  }
  Poly2 g = normalize_sign(join_t(b));
  return normalize_sign(c * g);
}

}  // namespace

// ---------------------------------------------------------------------------

Poly2::Poly2(long c) {
  if (c != 0) terms_.push_back({{0, 0}, BigInt(c)});
}

Poly2::Poly2(const BigInt& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

Poly2 Poly2::monomial(const BigInt& c, int qe, int te) {
  if (qe < 0 || te < 0) throw DomainError("negative exponent in Poly2::monomial");
  Poly2 p;
  if (c != 0) p.terms_.push_back({{qe, te}, c});
  return p;
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_before(a.e, b.e); });
  Poly2 p;
  for (auto& tm : terms) {
    if (!p.terms_.empty() && p.terms_.back().e == tm.e) {
      p.terms_.back().c += tm.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (tm.c != 0) {
      p.terms_.push_back(std::move(tm));
    }
  }
  return p;
}

bool Poly2::is_one() const { return terms_.size() == 1 && terms_[0].e == Exp2{} && terms_[0].c == 1; }

bool Poly2::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp2{}); }

int Poly2::degree_q() const {
  int d = 0;
  for (const auto& tm : terms_) d = std::max(d, tm.e.q);
  return d;
}

int Poly2::degree_t() const {
  int d = 0;
  for (const auto& tm : terms_) d = std::max(d, tm.e.t);
  return d;
}

int Poly2::total_degree() const { return terms_.empty() ? 0 : terms_.front().e.degree(); }

Exp2 Poly2::min_exponents() const {
  if (terms_.empty()) return {};
  Exp2 m = terms_.front().e;
  for (const auto& tm : terms_) {
    m.q = std::min(m.q, tm.e.q);
    m.t = std::min(m.t, tm.e.t);
  }
  return m;
}

BigInt Poly2::content() const {
  BigInt g = 0;
  for (const auto& tm : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int Poly2::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().c); }

Poly2 Poly2::primitive_part() const {
  BigInt c = content();
  if (c == 0 || c == 1) return *this;
  return div_scalar_exact(c);
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& tm : p.terms_) tm.c = -tm.c;
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_before(terms_[i].e, o.terms_[j].e))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_before(o.terms_[j].e, terms_[i].e)) {
      out.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].c + o.terms_[j].c;
      if (c != 0) out.push_back({terms_[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2& Poly2::operator*=(const Poly2& o) { return *this = *this * o; }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.leading().e.q, a.leading().e.t).scaled(a.leading().c);
  if (b.size() == 1) return a.shifted(b.leading().e.q, b.leading().e.t).scaled(b.leading().c);
  if (a.size() * b.size() > 4096) return kronecker_mul(a, b);
  return naive_mul(a, b);
}

Poly2 Poly2::scaled(const BigInt& c) const {
  if (c == 0) return {};
  Poly2 p = *this;
  for (auto& tm : p.terms_) tm.c *= c;
  return p;
}

Poly2 Poly2::div_scalar_exact(const BigInt& c) const {
  Poly2 p = *this;
  for (auto& tm : p.terms_) {
    if (!mpz_divisible_p(tm.c.get_mpz_t(), c.get_mpz_t()))
      throw CertificationError("non-exact scalar division");
    mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

Poly2 Poly2::shifted(int dq, int dt) const {
  Poly2 p = *this;
  for (auto& tm : p.terms_) {
    tm.e.q += dq;
    tm.e.t += dt;
    if (tm.e.q < 0 || tm.e.t < 0) throw DomainError("negative exponent after shift");
  }
  return p;  // a common shift preserves grlex order
}

Poly2 Poly2::pow(unsigned k) const {
  Poly2 result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::optional<Poly2> Poly2::divide_exact(const Poly2& d) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return Poly2();
  if (d.size() == 1) {
    const auto& l = d.leading();
    Poly2 p = *this;
    for (auto& tm : p.terms_) {
      if (tm.e.q < l.e.q || tm.e.t < l.e.t) return std::nullopt;
      if (!mpz_divisible_p(tm.c.get_mpz_t(), l.c.get_mpz_t())) return std::nullopt;
      tm.e.q -= l.e.q;
      tm.e.t -= l.e.t;
      mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), l.c.get_mpz_t());
    }
    return p;
  }
  if (size() * d.size() > 4096) return kronecker_divide(*this, d);
  return long_division(*this, d);
}

Poly2 Poly2::divexact(const Poly2& d) const {
  auto r = divide_exact(d);
  if (!r) throw CertificationError("polynomial division is not exact");
  return *r;
}

Poly2 Poly2::reverse_q(int deg) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& tm : terms_) {
    if (tm.e.q > deg) throw DomainError("reverse_q degree too small");
    terms.push_back({{deg - tm.e.q, tm.e.t}, tm.c});
  }
  return from_terms(std::move(terms));
}

Poly2 Poly2::eval_q(const BigInt& c) const {
  std::vector<BigInt> acc(degree_t() + 1);
  std::vector<BigInt> pw(degree_q() + 1);
  pw[0] = 1;
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * c;
  for (const auto& tm : terms_) mpz_addmul(acc[tm.e.t].get_mpz_t(), tm.c.get_mpz_t(), pw[tm.e.q].get_mpz_t());
  std::vector<Term> terms;
  for (std::size_t j = 0; j < acc.size(); ++j)
    if (acc[j] != 0) terms.push_back({{0, static_cast<int>(j)}, acc[j]});
  return from_terms(std::move(terms));
}

BigInt Poly2::eval(const BigInt& qv, const BigInt& tv) const {
  BigInt s = 0, a, b;
  for (const auto& tm : terms_) {
    mpz_pow_ui(a.get_mpz_t(), qv.get_mpz_t(), tm.e.q);
    mpz_pow_ui(b.get_mpz_t(), tv.get_mpz_t(), tm.e.t);
    s += tm.c * a * b;
  }
  return s;
}

bool Poly2::operator==(const Poly2& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].e == o.terms_[k].e) || terms_[k].c != o.terms_[k].c) return false;
  return true;
}

std::size_t Poly2::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& tm : terms_) {
    mix(static_cast<std::size_t>(tm.e.q) * 1000003u + tm.e.t);
    mix(mpz_get_ui(tm.c.get_mpz_t()));
    mix(static_cast<std::size_t>(sgn(tm.c) + 1));
  }
  return h;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& tm : terms_) {
    BigInt c = tm.c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    std::string mono;
    if (tm.e.q > 0) mono += tm.e.q == 1 ? "q" : "q^" + std::to_string(tm.e.q);
    if (tm.e.t > 0) {
      if (!mono.empty()) mono += "*";
      mono += tm.e.t == 1 ? "t" : "t^" + std::to_string(tm.e.t);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  Exp2 ma = a.min_exponents(), mb = b.min_exponents();
  Poly2 A = a.shifted(-ma.q, -ma.t), B = b.shifted(-mb.q, -mb.t);
  BigInt ca = A.content(), cb = B.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  A = normalize_sign(A.div_scalar_exact(ca));
  B = normalize_sign(B.div_scalar_exact(cb));
  Poly2 G;
  if (A.is_constant() || B.is_constant()) {
    G = 1;
  } else if (A == B) {
    G = A;
  } else if (A.degree_q() == 0 && B.degree_q() == 0) {
    G = univariate_gcd(A, B);
  } else if (A.degree_t() == 0 && B.degree_t() == 0) {
    G = transpose(univariate_gcd(transpose(A), transpose(B)));
  } else if (auto h = heu_bivariate(A, B)) {
    G = *h;
  } else {
    G = prs_gcd(A, B);
  }
  return G.shifted(std::min(ma.q, mb.q), std::min(ma.t, mb.t)).scaled(c);
}

}  // namespace wreathmac
