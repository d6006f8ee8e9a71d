#include "wreathmac/interp.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "wreathmac/errors.hpp"
#include "wreathmac/factored.hpp"
#include "wreathmac/xpoly.hpp"

namespace wreathmac {

namespace {

struct Prepared {
  Factored A;
  int sign;
  // argument v of the shifted polynomial is q^ypow[v] * x_{ysrc[v]}
  std::vector<int> ysrc, ypow;
};

std::vector<Prepared> prepare(const std::vector<OperatorTerm>& terms, const DimVector& N) {
  const int n = N.total();
  std::vector<Prepared> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Prepared p{factor(t.A.literal, n), t.sign * t.A.sign, {}, {}};
    p.ysrc.resize(n);
    p.ypow.assign(n, 0);
    for (int v = 0; v < n; ++v) p.ysrc[v] = v;
    for (const auto& s : t.shift) {
      p.ysrc[s.from] = s.to;
      p.ypow[s.from] = s.qpow;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// m_mu at the point y_v = c_v q^{e_v}, a polynomial in q
Poly2 eval_monomial_q(const std::vector<XMonomial>& support, const std::vector<long>& c, const std::vector<int>& e) {
  std::map<int, BigInt> acc;
  for (const auto& m : support) {
    BigInt v = 1;
    int qe = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(c[k]), static_cast<unsigned long>(m[k]));
      v *= pw;
      qe += e[k] * m[k];
    }
    acc[qe] += v;
  }
  std::vector<Poly2::Term> terms;
  for (auto& [qe, v] : acc)
    if (v != 0) terms.push_back({{qe, 0}, v});
  return Poly2::from_terms(std::move(terms));
}

BigInt eval_monomial(const std::vector<XMonomial>& support, const std::vector<long>& pt) {
  BigInt s = 0;
  for (const auto& m : support) {
    BigInt v = 1;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int j = 0; j < m[k]; ++j) v *= pt[k];
    s += v;
  }
  return s;
}

struct TermValue {
  BigRat unit;
  int qa, tb;
  std::map<Poly2, int, Poly2Less> prims;
};

// false when the term vanishes at the point
bool evaluate_term(const Factored& F, const std::vector<long>& pt, TermValue& out) {
  out.unit = F.coef();
  out.qa = F.qa();
  out.tb = F.tb();
  out.prims.clear();
  for (const auto& [p, m] : F.scalars()) out.prims[p] += m;
  for (std::size_t k = 0; k < F.xexp().size(); ++k) {
    int e = F.xexp()[k];
    BigRat x(pt[k]);
    for (int j = 0; j < std::abs(e); ++j) {
      if (e > 0) out.unit *= x;
      else out.unit /= x;
    }
  }
  for (const auto& [f, m] : F.forms()) {
    ScalarSplit s;
    if (!split_binomial(BigInt(pt[f.u]), 0, 0, BigInt(f.sigma * pt[f.v]), f.qa, f.tb, s)) {
      if (m < 0) throw DomainError("vanishing denominator at evaluation point");
      return false;
    }
    for (int j = 0; j < std::abs(m); ++j) {
      if (m > 0) out.unit *= s.unit;
      else out.unit /= s.unit;
    }
    out.qa += s.qa * m;
    out.tb += s.tb * m;
    if (!s.prim.is_one()) out.prims[s.prim] += m;
  }
  for (auto it = out.prims.begin(); it != out.prims.end();) it = it->second == 0 ? out.prims.erase(it) : std::next(it);
  return true;
}

// sum_terms sign * A(pt) * m_c(shifted pt) for every key c
std::vector<QTScalar> values_at(const std::vector<Prepared>& prep, const DimVector& N, const std::vector<long>& pt,
                                const std::vector<MultiPartition>& keys) {
  std::vector<TermValue> vals(prep.size());
  std::vector<bool> live(prep.size());
  std::map<Poly2, int, Poly2Less> dmax;
  int amin = 0, bmin = 0;
  bool first = true;
  BigInt L = 1;
  for (std::size_t k = 0; k < prep.size(); ++k) {
    live[k] = evaluate_term(prep[k].A, pt, vals[k]);
    if (!live[k]) continue;
    for (const auto& [p, m] : vals[k].prims)
      if (m < 0) dmax[p] = std::max(dmax[p], -m);
    amin = first ? vals[k].qa : std::min(amin, vals[k].qa);
    bmin = first ? vals[k].tb : std::min(bmin, vals[k].tb);
    first = false;
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), vals[k].unit.get_den().get_mpz_t());
  }
  std::vector<QTScalar> out(keys.size());
  if (first) return out;

  std::vector<Poly2> cof(prep.size());
  for (std::size_t k = 0; k < prep.size(); ++k) {
    if (!live[k]) continue;
    const TermValue& v = vals[k];
    BigInt c = v.unit.get_num() * (L / v.unit.get_den()) * prep[k].sign;
    Poly2 P = Poly2::monomial(c, v.qa - amin, v.tb - bmin);
    for (const auto& [p, d] : dmax) {
      int e = d;
      auto it = v.prims.find(p);
      if (it != v.prims.end()) e += it->second;
      if (e > 0) P *= p.pow(static_cast<unsigned>(e));
    }
    for (const auto& [p, m] : v.prims)
      if (m > 0 && !dmax.count(p)) P *= p.pow(static_cast<unsigned>(m));
    cof[k] = std::move(P);
  }

  std::vector<long> c(pt.size());
  for (std::size_t key = 0; key < keys.size(); ++key) {
    const auto& support = monomial_support(N, keys[key]);
    Poly2 num;
    for (std::size_t k = 0; k < prep.size(); ++k) {
      if (!live[k]) continue;
      for (std::size_t w = 0; w < pt.size(); ++w) c[w] = pt[prep[k].ysrc[w]];
      num += cof[k] * eval_monomial_q(support, c, prep[k].ypow);
    }
    if (num.is_zero()) continue;
    // cancel the evaluated denominators before any gcd
    Poly2 den = Poly2(L);
    for (const auto& [p, d] : dmax) {
      int e = d;
      while (e > 0) {
        auto qd = num.divide_exact(p);
        if (!qd) break;
        num = std::move(*qd);
        --e;
      }
      if (e > 0) den *= p.pow(static_cast<unsigned>(e));
    }
    QTScalar v(num, den);
    out[key] = v * QTScalar::monomial(1, amin, bmin);
  }
  return out;
}

// inverse of a square rational matrix; false when singular
bool invert(std::vector<std::vector<BigRat>> a, std::vector<std::vector<BigRat>>& inv) {
  const std::size_t n = a.size();
  inv.assign(n, std::vector<BigRat>(n, 0));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    BigRat s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      BigRat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return true;
}

std::vector<long> random_point(std::mt19937_64& rng, int n) {
  // distinct absolute values keep every x_u - x_v and x_u + x_v nonzero
  std::vector<long> pool;
  for (long v = 1; v <= 3L * n + 6; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  return pool;
}

}  // namespace

InterpolatedOperator::InterpolatedOperator(std::vector<OperatorTerm> terms, DimVector N, std::uint64_t seed)
    : terms_(std::move(terms)), N_(std::move(N)), seed_(seed) {}

QTMatrix InterpolatedOperator::matrix(int degree, int check_points) const {
  const auto& keys = monomial_basis_keys(N_, degree);
  const std::size_t D = keys.size();
  const int n = N_.total();
  std::vector<Prepared> prep = prepare(terms_, N_);
  std::mt19937_64 rng(seed_ + static_cast<std::uint64_t>(degree));

  std::vector<std::vector<long>> pts;
  std::vector<std::vector<BigRat>> E, Einv;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 50) throw CertificationError("no invertible evaluation matrix found");
    pts.clear();
    E.clear();
    for (std::size_t k = 0; k < D; ++k) {
      pts.push_back(random_point(rng, n));
      std::vector<BigRat> row;
      for (const auto& b : keys) row.emplace_back(eval_monomial(monomial_support(N_, b), pts.back()));
      E.push_back(std::move(row));
    }
    if (invert(E, Einv)) break;
  }

  std::vector<std::vector<QTScalar>> vals;
  vals.reserve(D);
  for (const auto& pt : pts) vals.push_back(values_at(prep, N_, pt, keys));

  QTMatrix M(D, QTVector(D));
  for (std::size_t b = 0; b < D; ++b)
    for (std::size_t c = 0; c < D; ++c) {
      QTAccumulator acc;
      for (std::size_t p = 0; p < D; ++p) acc.add(vals[p][c], Einv[b][p]);
      M[b][c] = acc.result();
    }

  // checks: fresh points, and a point with two same-vertex entries swapped
  std::vector<std::vector<long>> checks;
  for (int k = 0; k < check_points; ++k) checks.push_back(random_point(rng, n));
  for (int j = 0; j < N_.r(); ++j)
    if (N_[j] >= 2 && !pts.empty()) {
      std::vector<long> sw = pts[0];
      std::swap(sw[N_.flat(j, 0)], sw[N_.flat(j, 1)]);
      checks.push_back(std::move(sw));
      break;
    }
  for (const auto& pt : checks) {
    std::vector<QTScalar> got = values_at(prep, N_, pt, keys);
    std::vector<BigRat> mb;
    for (const auto& b : keys) mb.emplace_back(eval_monomial(monomial_support(N_, b), pt));
    for (std::size_t c = 0; c < D; ++c) {
      QTAccumulator acc;
      for (std::size_t b = 0; b < D; ++b) acc.add(M[b][c], mb[b]);
      if (!(acc.result() == got[c]))
        throw CertificationError("interpolated image of m_" + keys[c].str() + " fails at a check point");
    }
  }
  return M;
}

}  // namespace wreathmac
