#include "wreathmac/xpoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "wreathmac/detail/expr_parser.hpp"
#include "wreathmac/errors.hpp"

namespace wreathmac {

bool XMonomialOrder::operator()(const XMonomial& a, const XMonomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

XPoly::XPoly(DimVector N) : N_(std::move(N)) {}

XPoly XPoly::constant(const DimVector& N, const QTScalar& c) {
  XPoly p(N);
  p.add_term(XMonomial(N.total(), 0), c);
  return p;
}

XPoly XPoly::variable(const DimVector& N, int vertex, int slot) {
  if (vertex < 0 || vertex >= N.r() || slot < 1 || slot > N[vertex])
    throw DomainError("variable index out of range");
  XMonomial m(N.total(), 0);
  m[N.flat(vertex, slot - 1)] = 1;
  XPoly p(N);
  p.add_term(m, 1);
  return p;
}

QTScalar XPoly::coeff(const XMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QTScalar() : it->second;
}

void XPoly::add_term(const XMonomial& m, const QTScalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.size()) != N_.total()) throw DomainError("monomial has wrong number of variables");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int XPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

bool XPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  return true;
}

XPoly XPoly::operator-() const {
  XPoly p(N_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (!(o.N_ == N_)) throw DomainError("mismatched dimension vectors");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (!(a.N_ == b.N_)) throw DomainError("mismatched dimension vectors");
  std::map<XMonomial, QTAccumulator, XMonomialOrder> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      XMonomial m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      acc[m].add(ca * cb);
    }
  XPoly p(a.N_);
  for (auto& [m, s] : acc) {
    QTScalar c = s.result();
    if (!c.is_zero()) p.terms_.emplace(m, c);
  }
  return p;
}

XPoly XPoly::scaled(const QTScalar& c) const {
  XPoly p(N_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

XPoly XPoly::map_coefficients(const std::function<QTScalar(const QTScalar&)>& f) const {
  XPoly p(N_);
  for (const auto& [m, v] : terms_) p.add_term(m, f(v));
  return p;
}

XPoly XPoly::swapped(int a, int b) const {
  XPoly p(N_);
  for (const auto& [m, v] : terms_) {
    XMonomial s = m;
    std::swap(s[a], s[b]);
    p.terms_.emplace(std::move(s), v);
  }
  return p;
}

bool XPoly::operator==(const XPoly& o) const { return N_ == o.N_ && terms_ == o.terms_; }

std::string variable_name(const DimVector& N, int flat) {
  for (int i = 0; i < N.r(); ++i)
    if (flat < N.flat(i, 0) + N[i]) return "x_" + std::to_string(i) + "_" + std::to_string(flat - N.flat(i, 0) + 1);
  throw DomainError("flat variable index out of range");
}

namespace {

std::string monomial_str(const DimVector& N, const XMonomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(N, static_cast<int>(k));
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

bool negative(const QTScalar& c) { return c.num().sign() < 0; }

std::string coeff_str(const QTScalar& c, bool with_monomial) {
  if (!with_monomial) return c.is_polynomial() && c.num().size() > 1 ? "(" + c.str() + ")" : c.str();
  if (c.is_one()) return "";
  if (c.is_polynomial() && c.num().size() == 1) return c.str() + "*";
  if (c.is_polynomial()) return "(" + c.str() + ")*";
  return c.str() + "*";
}

struct XPolyOps {
  const DimVector& N;
  XPoly from_int(const BigInt& v) { return XPoly::constant(N, QTScalar(v)); }
  XPoly ident(std::string_view name, std::size_t pos) {
    if (name == "q") return XPoly::constant(N, QTScalar::q());
    if (name == "t") return XPoly::constant(N, QTScalar::t());
    if (name.size() >= 5 && name[0] == 'x' && name[1] == '_') {
      std::size_t sep = name.find('_', 2);
      if (sep != std::string_view::npos) {
        std::string a(name.substr(2, sep - 2)), b(name.substr(sep + 1));
        bool digits = !a.empty() && !b.empty() && a.size() < 6 && b.size() < 6 &&
                      std::all_of(a.begin(), a.end(), ::isdigit) && std::all_of(b.begin(), b.end(), ::isdigit);
        if (digits) {
          int i = std::stoi(a), k = std::stoi(b);
          if (i >= N.r() || k < 1 || k > N[i])
            throw ParseError("variable '" + std::string(name) + "' outside N=(" + N.str() + ")", pos);
          return XPoly::variable(N, i, k);
        }
      }
    }
    throw ParseError("unknown symbol '" + std::string(name) + "'", pos);
  }
  static bool scalar_of(const XPoly& p, QTScalar& out) {
    if (p.is_zero()) {
      out = QTScalar();
      return true;
    }
    if (p.size() != 1 || p.degree() != 0) return false;
    out = p.terms().begin()->second;
    return true;
  }
  XPoly divide(const XPoly& a, const XPoly& b, std::size_t pos) {
    QTScalar s;
    if (!scalar_of(b, s)) throw ParseError("division by a non-constant polynomial", pos);
    if (s.is_zero()) throw ParseError("division by zero", pos);
    return a.scaled(s.inverse());
  }
  XPoly power(const XPoly& a, long k, std::size_t pos) {
    QTScalar s;
    if (k < 0) {
      if (!scalar_of(a, s) || s.is_zero()) throw ParseError("negative power of a non-constant polynomial", pos);
      return XPoly::constant(N, s.pow(static_cast<int>(k)));
    }
    XPoly r = XPoly::constant(N, 1);
    for (long j = 0; j < k; ++j) r = r * a;
    return r;
  }
};

}  // namespace

std::string XPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = negative(c);
    QTScalar a = neg ? -c : c;
    std::string mono = monomial_str(N_, m);
    std::string body = mono.empty() ? coeff_str(a, false) : coeff_str(a, true) + mono;
    if (first) {
      s += neg ? "-" + body : body;
    } else {
      s += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return s;
}

XPoly XPoly::parse(std::string_view text, const DimVector& N) {
  XPolyOps ops{N};
  return detail::ExprParser<XPoly, XPolyOps>(text, ops).parse();
}

std::optional<std::pair<int, int>> asymmetry_witness(const XPoly& p) {
  const DimVector& N = p.dims();
  for (int i = 0; i < N.r(); ++i)
    for (int k = 0; k + 1 < N[i]; ++k) {
      int a = N.flat(i, k), b = N.flat(i, k + 1);
      for (const auto& [m, c] : p.terms()) {
        if (m[a] == m[b]) continue;
        XMonomial s = m;
        std::swap(s[a], s[b]);
        auto it = p.terms().find(s);
        if (it == p.terms().end() || !(it->second == c)) return std::make_pair(a, b);
      }
    }
  return std::nullopt;
}

bool is_symmetric(const XPoly& p) { return !asymmetry_witness(p).has_value(); }

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<MultiPartition>& monomial_basis_keys(const DimVector& N, int degree) {
  static std::map<std::pair<std::vector<int>, int>, std::unique_ptr<std::vector<MultiPartition>>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{N.entries(), degree}];
  if (!slot) slot = std::make_unique<std::vector<MultiPartition>>(multipartitions_of(degree, N));
  return *slot;
}

XMonomial leading_exponents(const DimVector& N, const MultiPartition& mu) {
  XMonomial m(N.total(), 0);
  for (int i = 0; i < N.r(); ++i) {
    if (mu[i].length() > N[i]) throw DomainError("partition has more rows than variables");
    for (int k = 0; k < mu[i].length(); ++k) m[N.flat(i, k)] = mu[i][k];
  }
  return m;
}

const std::vector<XMonomial>& monomial_support(const DimVector& N, const MultiPartition& mu) {
  static std::map<std::pair<std::vector<int>, MultiPartition>, std::unique_ptr<std::vector<XMonomial>>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({N.entries(), mu});
    if (it != cache.end()) return *it->second;
  }
  // per vertex: distinct permutations of the padded part list
  std::vector<std::vector<std::vector<int>>> per_vertex(N.r());
  for (int i = 0; i < N.r(); ++i) {
    if (mu[i].length() > N[i]) throw DomainError("partition has more rows than variables");
    std::vector<int> v(N[i], 0);
    for (int k = 0; k < mu[i].length(); ++k) v[k] = mu[i][k];
    std::sort(v.begin(), v.end());
    do {
      per_vertex[i].push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  auto out = std::make_unique<std::vector<XMonomial>>();
  XMonomial cur(N.total(), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == N.r()) {
      out->push_back(cur);
      return;
    }
    for (const auto& v : per_vertex[i]) {
      std::copy(v.begin(), v.end(), cur.begin() + N.flat(i, 0));
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{N.entries(), mu}];
  if (!slot) slot = std::move(out);
  return *slot;
}

XPoly monomial_symmetric(const DimVector& N, const MultiPartition& mu) {
  XPoly p(N);
  for (const auto& m : monomial_support(N, mu)) p.add_term(m, 1);
  return p;
}

std::vector<XPoly> monomial_basis(const DimVector& N, int degree) {
  std::vector<XPoly> out;
  for (const auto& mu : monomial_basis_keys(N, degree)) out.push_back(monomial_symmetric(N, mu));
  return out;
}

std::vector<QTScalar> expand_in_basis(const XPoly& p, int degree) {
  const DimVector& N = p.dims();
  if (auto w = asymmetry_witness(p))
    throw DomainError("polynomial is not symmetric under " + variable_name(N, w->first) + " <-> " +
                      variable_name(N, w->second));
  if (!p.is_homogeneous(degree)) throw DomainError("polynomial is not homogeneous of degree " + std::to_string(degree));
  const auto& keys = monomial_basis_keys(N, degree);
  std::vector<QTScalar> c;
  c.reserve(keys.size());
  for (const auto& mu : keys) c.push_back(p.coeff(leading_exponents(N, mu)));
  if (!(from_basis_coordinates(N, degree, c) == p)) throw DomainError("polynomial is not in the monomial span");
  return c;
}

XPoly from_basis_coordinates(const DimVector& N, int degree, const std::vector<QTScalar>& c) {
  const auto& keys = monomial_basis_keys(N, degree);
  if (c.size() != keys.size()) throw DomainError("coordinate vector has wrong length");
  XPoly p(N);
  for (std::size_t b = 0; b < keys.size(); ++b) {
    if (c[b].is_zero()) continue;
    for (const auto& m : monomial_support(N, keys[b])) p.add_term(m, c[b]);
  }
  return p;
}

}  // namespace wreathmac
