#include "wreathmac/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "wreathmac/errors.hpp"

namespace wreathmac {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Power:
      return "power";
    case Basis::Monomial:
      return "monomial";
    case Basis::Schur:
      return "schur";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "power") return Basis::Power;
  if (name == "monomial") return Basis::Monomial;
  if (name == "schur") return Basis::Schur;
  throw DomainError("unknown basis '" + name + "'");
}

// ---------------------------------------------------------------------------
// single-alphabet combinatorics

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

long long mn_rec(const Partition& lambda, const Partition& rho, std::map<std::pair<Partition, Partition>, long long>& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, rho);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = rho[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int L = lambda.length();
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lambda[i] + L - 1 - i;
  long long total = 0;
  for (int i = 0; i < L; ++i) {
    int x = b[i];
    if (x - k < 0 || std::find(b.begin(), b.end(), x - k) != b.end()) continue;
    int height = 0;
    for (int y : b)
      if (y > x - k && y < x) ++height;
    std::vector<int> nb = b;
    nb[i] = x - k;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts(L);
    for (int j = 0; j < L; ++j) parts[j] = nb[j] - (L - 1 - j);
    long long v = mn_rec(Partition(parts), rest, memo);
    total += (height % 2 ? -v : v);
  }
  memo[key] = total;
  return total;
}

long long kostka_rec(const Partition& lambda, const std::vector<int>& content,
                     std::map<std::pair<Partition, std::vector<int>>, long long>& memo) {
  if (content.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, content);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int m = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  // nu with lambda/nu a horizontal strip of size m
  long long total = 0;
  const int L = lambda.length();
  std::vector<int> nu(L);
  auto rec = [&](auto&& self, int i, int removed) -> void {
    if (i == L) {
      if (removed == m) total += kostka_rec(Partition(nu), rest, memo);
      return;
    }
    int lo = lambda[i + 1];
    for (int v = lambda[i]; v >= lo; --v) {
      int rem = removed + (lambda[i] - v);
      if (rem > m) break;
      nu[i] = v;
      self(self, i + 1, rem);
    }
  };
  rec(rec, 0, 0);
  memo[key] = total;
  return total;
}

using RatMatrix = std::vector<std::vector<BigRat>>;

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size();
  RatMatrix c(n, std::vector<BigRat>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatMatrix mat_inverse(RatMatrix a) {
  std::size_t n = a.size();
  RatMatrix inv(n, std::vector<BigRat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw CertificationError("singular transition matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    BigRat piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
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
  return inv;
}

struct Row {
  std::vector<std::pair<Partition, BigRat>> entries;
};

struct DegreeTable {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  // rows[from][to][k]: expansion of basis element k of `from` in basis `to`
  std::vector<Row> rows[3][3];
};

std::map<std::pair<Partition, Partition>, long long>& mn_memo() {
  static std::map<std::pair<Partition, Partition>, long long> m;
  return m;
}

std::map<std::pair<Partition, std::vector<int>>, long long>& kostka_memo() {
  static std::map<std::pair<Partition, std::vector<int>>, long long> m;
  return m;
}

const DegreeTable& degree_table(int d) {
  static std::map<int, std::unique_ptr<DegreeTable>> cache;
  std::lock_guard<std::mutex> lock(table_mutex());
  auto& slot = cache[d];
  if (slot) return *slot;
  auto tab = std::make_unique<DegreeTable>();
  tab->parts = partitions_of(d);
  const std::size_t n = tab->parts.size();
  for (std::size_t k = 0; k < n; ++k) tab->index[tab->parts[k]] = static_cast<int>(k);
  RatMatrix s2p(n, std::vector<BigRat>(n)), p2s(n, std::vector<BigRat>(n)), s2m(n, std::vector<BigRat>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Partition& lam = tab->parts[a];
      const Partition& rho = tab->parts[b];
      long long chi = mn_rec(lam, rho, mn_memo());
      BigInt z = 1;
      {
        std::map<int, int> mult;
        for (int p : rho.parts()) ++mult[p];
        for (auto [p, m] : mult) {
          for (int j = 0; j < m; ++j) z *= p;
          for (int j = 2; j <= m; ++j) z *= j;
        }
      }
      s2p[a][b] = BigRat(BigInt(static_cast<long>(chi)), z);
      p2s[b][a] = BigRat(static_cast<long>(chi));
      s2m[a][b] = BigRat(static_cast<long>(kostka_rec(lam, rho.parts(), kostka_memo())));
    }
  RatMatrix m2s = mat_inverse(s2m);
  RatMatrix mats[3][3];
  const int P = 0, M = 1, S = 2;
  for (int x = 0; x < 3; ++x) {
    mats[x][x] = RatMatrix(n, std::vector<BigRat>(n, 0));
    for (std::size_t k = 0; k < n; ++k) mats[x][x][k][k] = 1;
  }
  mats[S][P] = s2p;
  mats[P][S] = p2s;
  mats[S][M] = s2m;
  mats[M][S] = m2s;
  mats[P][M] = mat_mul(p2s, s2m);
  mats[M][P] = mat_mul(m2s, s2p);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      tab->rows[x][y].resize(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (mats[x][y][a][b] != 0) tab->rows[x][y][a].entries.emplace_back(tab->parts[b], mats[x][y][a][b]);
    }
  slot = std::move(tab);
  return *slot;
}

int basis_slot(Basis b) { return b == Basis::Power ? 0 : (b == Basis::Monomial ? 1 : 2); }

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.rbegin(), v.rend());
  return Partition(std::move(v));
}

}  // namespace

long long character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw DomainError("character needs partitions of equal size");
  const DegreeTable& tab = degree_table(lambda.size());
  (void)tab;
  std::lock_guard<std::mutex> lock(table_mutex());
  return mn_rec(lambda, rho, mn_memo());
}

BigInt z_factor(const Partition& rho) {
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  BigInt z = 1;
  for (auto [p, m] : mult) {
    for (int j = 0; j < m; ++j) z *= p;
    for (int j = 2; j <= m; ++j) z *= j;
  }
  return z;
}

long long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  std::lock_guard<std::mutex> lock(table_mutex());
  return kostka_rec(lambda, mu.parts(), kostka_memo());
}

// ---------------------------------------------------------------------------

TensorSymFunc TensorSymFunc::unit(int r, Basis basis, const MultiPartition& key) {
  TensorSymFunc f(r, basis);
  f.add_term(key, 1);
  return f;
}

QTScalar TensorSymFunc::coeff(const MultiPartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QTScalar() : it->second;
}

void TensorSymFunc::add_term(const MultiPartition& key, const QTScalar& c) {
  if (key.r() != r_) throw DomainError("key has wrong number of components");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSymFunc TensorSymFunc::operator-() const {
  TensorSymFunc f(r_, basis_);
  for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
  return f;
}

TensorSymFunc& TensorSymFunc::operator+=(const TensorSymFunc& o) {
  if (o.r_ != r_) throw DomainError("mismatched r");
  TensorSymFunc g = o.basis_ == basis_ ? o : convert_basis(o, basis_);
  for (const auto& [k, c] : g.terms_) add_term(k, c);
  return *this;
}

TensorSymFunc operator*(const TensorSymFunc& a, const TensorSymFunc& b) {
  if (a.r_ != b.r_) throw DomainError("mismatched r");
  TensorSymFunc pa = convert_basis(a, Basis::Power), pb = convert_basis(b, Basis::Power);
  std::map<MultiPartition, QTAccumulator> acc;
  for (const auto& [ka, ca] : pa.terms_)
    for (const auto& [kb, cb] : pb.terms_) {
      MultiPartition k(a.r_);
      for (int i = 0; i < a.r_; ++i) k[i] = merged(ka[i], kb[i]);
      acc[k].add(ca * cb);
    }
  TensorSymFunc out(a.r_, Basis::Power);
  for (auto& [k, s] : acc) out.add_term(k, s.result());
  return convert_basis(out, a.basis_);
}

TensorSymFunc TensorSymFunc::scaled(const QTScalar& c) const {
  TensorSymFunc f(r_, basis_);
  if (c.is_zero()) return f;
  for (const auto& [k, v] : terms_) f.terms_.emplace(k, v * c);
  return f;
}

TensorSymFunc TensorSymFunc::map_coefficients(QTScalar (*fn)(const QTScalar&)) const {
  TensorSymFunc f(r_, basis_);
  for (const auto& [k, v] : terms_) f.add_term(k, fn(v));
  return f;
}

bool TensorSymFunc::operator==(const TensorSymFunc& o) const {
  if (r_ != o.r_) return false;
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return terms_ == convert_basis(o, basis_).terms_;
}

TensorSymFunc convert_basis(const TensorSymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const int from = basis_slot(f.basis()), to = basis_slot(target);
  const int r = f.r();
  std::map<MultiPartition, QTAccumulator> acc;
  for (const auto& [key, c] : f.terms()) {
    std::vector<const Row*> rows(r);
    for (int i = 0; i < r; ++i) {
      const DegreeTable& tab = degree_table(key[i].size());
      rows[i] = &tab.rows[from][to][tab.index.at(key[i])];
    }
    MultiPartition cur(r);
    auto rec = [&](auto&& self, int i, const BigRat& w) -> void {
      if (i == r) {
        acc[cur].add(c, w);
        return;
      }
      for (const auto& [p, v] : rows[i]->entries) {
        cur[i] = p;
        self(self, i + 1, w * v);
      }
    };
    rec(rec, 0, BigRat(1));
  }
  TensorSymFunc out(r, target);
  for (auto& [k, s] : acc) out.add_term(k, s.result());
  return out;
}

namespace {

// Image of p_rho under the twist (or its inverse) as polynomials in a.
using APoly = std::map<int, BigInt>;  // exponent of a -> coefficient
using TwistImage = std::map<MultiPartition, APoly>;

TwistImage twist_image(const MultiPartition& rho, bool inverse) {
  const int r = rho.r();
  std::vector<std::pair<int, int>> gens;  // (vertex, d)
  for (int i = 0; i < r; ++i)
    for (int d : rho[i].parts()) gens.emplace_back(i, d);
  TwistImage out;
  std::vector<std::vector<int>> cur(r);
  auto rec = [&](auto&& self, std::size_t g, int exp, int sign) -> void {
    if (g == gens.size()) {
      MultiPartition k(r);
      for (int i = 0; i < r; ++i) {
        std::vector<int> v = cur[i];
        std::sort(v.rbegin(), v.rend());
        k[i] = Partition(std::move(v));
      }
      out[k][exp] += sign;
      return;
    }
    auto [i, d] = gens[g];
    if (!inverse) {
      // p_d[X^i] - a^d p_d[X^(i-1)]
      cur[i].push_back(d);
      self(self, g + 1, exp, sign);
      cur[i].pop_back();
      int j = cyclic_mod(i - 1, r);
      cur[j].push_back(d);
      self(self, g + 1, exp + d, -sign);
      cur[j].pop_back();
    } else {
      // (sum_s a^(ds) p_d[X^(i-s)]) / (1 - a^(dr)); the denominator is applied later
      for (int s = 0; s < r; ++s) {
        int j = cyclic_mod(i - s, r);
        cur[j].push_back(d);
        self(self, g + 1, exp + d * s, sign);
        cur[j].pop_back();
      }
    }
  };
  rec(rec, 0, 0, 1);
  for (auto it = out.begin(); it != out.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

const TwistImage& cached_twist_image(const MultiPartition& rho, bool inverse) {
  static std::map<std::pair<MultiPartition, bool>, std::unique_ptr<TwistImage>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({rho, inverse});
    if (it != cache.end()) return *it->second;
  }
  auto img = std::make_unique<TwistImage>(twist_image(rho, inverse));
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[{rho, inverse}];
  if (!slot) slot = std::move(img);
  return *slot;
}

QTScalar eval_apoly(const APoly& p, const QTScalar& a) {
  if (p.empty()) return {};
  // sum c_e an^e ad^(E-e) / ad^E, with E the top exponent; exponents are >= 0
  const int E = p.rbegin()->first;
  std::vector<Poly2> an(E + 1), ad(E + 1);
  an[0] = ad[0] = 1;
  for (int e = 1; e <= E; ++e) {
    an[e] = an[e - 1] * a.num();
    ad[e] = ad[e - 1] * a.den();
  }
  Poly2 num;
  for (const auto& [e, c] : p) num += (an[e] * ad[E - e]).scaled(c);
  return QTScalar(num, ad[E]);
}

TensorSymFunc twist_impl(const TensorSymFunc& f, const QTScalar& a, bool inverse) {
  TensorSymFunc pf = convert_basis(f, Basis::Power);
  const int r = f.r();
  std::map<MultiPartition, QTAccumulator> acc;
  for (const auto& [rho, c] : pf.terms()) {
    QTScalar scale = c;
    if (inverse) {
      for (int i = 0; i < r; ++i)
        for (int d : rho[i].parts()) {
          QTScalar den = QTScalar(1) - a.pow(d * r);
          if (den.is_zero()) throw DomainError("twist is not invertible at this parameter");
          scale /= den;
        }
    }
    for (const auto& [k, poly] : cached_twist_image(rho, inverse)) acc[k].add(scale * eval_apoly(poly, a));
  }
  TensorSymFunc out(r, Basis::Power);
  for (auto& [k, s] : acc) out.add_term(k, s.result());
  return convert_basis(out, f.basis());
}

}  // namespace

TensorSymFunc plethystic_twist(const TensorSymFunc& f, const QTScalar& a) { return twist_impl(f, a, false); }

TensorSymFunc plethystic_twist_inverse(const TensorSymFunc& f, const QTScalar& a) { return twist_impl(f, a, true); }

QTScalar hall_pairing(const TensorSymFunc& f, const TensorSymFunc& g) {
  if (f.r() != g.r()) throw DomainError("mismatched r");
  TensorSymFunc sf = convert_basis(f, Basis::Schur), sg = convert_basis(g, Basis::Schur);
  QTAccumulator acc;
  for (const auto& [k, c] : sf.terms()) {
    auto it = sg.terms().find(k);
    if (it != sg.terms().end()) acc.add(c * it->second);
  }
  return acc.result();
}

MultiSymPoly project(const TensorSymFunc& f, const DimVector& N) {
  if (N.r() != f.r()) throw DomainError("dimension vector has wrong length");
  TensorSymFunc mf = convert_basis(f, Basis::Monomial);
  XPoly p(N);
  for (const auto& [k, c] : mf.terms()) {
    bool fits = true;
    for (int i = 0; i < f.r(); ++i) fits = fits && k[i].length() <= N[i];
    if (!fits) continue;
    for (const auto& m : monomial_support(N, k)) p.add_term(m, c);
  }
  return p;
}

}  // namespace wreathmac
