#include "wreathmac/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wreathmac/errors.hpp"
#include "wreathmac/qtscalar.hpp"

namespace wreathmac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s;
}

namespace {

Partition parse_partition_at(std::string_view text, std::size_t base) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) return {};
  while (true) {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected a positive integer part", base + i);
    if (i - start > 9) throw ParseError("part too large", base + start);
    int v = std::stoi(std::string(text.substr(start, i - start)));
    if (v == 0) throw ParseError("partition parts must be positive", base + start);
    if (!parts.empty() && v > parts.back()) throw ParseError("parts must be weakly decreasing", base + start);
    parts.push_back(v);
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(std::string("unexpected '") + text[i] + "'", base + i);
    ++i;
  }
  return Partition(std::move(parts));
}

// Beta-set with m beads, m the least multiple of r that is >= length.
std::vector<int> beta_numbers(const Partition& lambda, int r, int extra_rounds = 0) {
  int m = (lambda.length() + r - 1) / r * r + extra_rounds * r;
  std::vector<int> b(m);
  for (int k = 0; k < m; ++k) b[k] = lambda[k] + m - 1 - k;
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int m = static_cast<int>(b.size());
  std::vector<int> parts(m);
  for (int k = 0; k < m; ++k) parts[k] = b[k] - (m - 1 - k);
  return Partition(std::move(parts));
}

// Positions on each runner, descending.
std::vector<std::vector<int>> runners(const Partition& lambda, int r) {
  std::vector<std::vector<int>> run(r);
  for (int x : beta_numbers(lambda, r)) run[x % r].push_back(x / r);
  for (auto& v : run) std::sort(v.rbegin(), v.rend());
  return run;
}

}  // namespace

Partition Partition::parse(std::string_view text) { return parse_partition_at(text, 0); }

int MultiPartition::size() const {
  int s = 0;
  for (const auto& p : comps_) s += p.size();
  return s;
}

MultiPartition MultiPartition::reversed() const {
  std::vector<Partition> c(comps_.rbegin(), comps_.rend());
  return MultiPartition(std::move(c));
}

std::string MultiPartition::str() const {
  std::string s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ";";
    s += comps_[i].str();
  }
  return s;
}

MultiPartition MultiPartition::parse(std::string_view text, int r) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    comps.push_back(parse_partition_at(piece, start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (r >= 0 && static_cast<int>(comps.size()) != r)
    throw ParseError("expected " + std::to_string(r) + " components, got " + std::to_string(comps.size()),
                     text.size());
  return MultiPartition(std::move(comps));
}

std::string RootElem::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coeffs[k]);
  }
  return s + "]";
}

DimVector::DimVector(std::vector<int> entries) : n_(std::move(entries)) {
  if (n_.empty()) throw DomainError("dimension vector needs at least one entry");
  offset_.resize(n_.size());
  int acc = 0;
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (n_[i] < 0) throw DomainError("dimension vector entries must be nonnegative");
    offset_[i] = acc;
    acc += n_[i];
  }
}

int DimVector::operator[](long i) const { return n_[cyclic_mod(i, r())]; }

int DimVector::total() const { return std::accumulate(n_.begin(), n_.end(), 0); }

int DimVector::min() const { return *std::min_element(n_.begin(), n_.end()); }

std::string DimVector::str() const {
  std::string s;
  for (std::size_t k = 0; k < n_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(n_[k]);
  }
  return s;
}

DimVector DimVector::parse(std::string_view text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected a nonnegative integer", i);
    if (i - start > 6) throw ParseError("entry too large", start);
    v.push_back(std::stoi(std::string(text.substr(start, i - start))));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(std::string("unexpected '") + text[i] + "'", i);
    ++i;
  }
  return DimVector(std::move(v));
}

// ---------------------------------------------------------------------------

std::vector<Partition> partitions_of(int n, int max_part) {
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int cap) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rem, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  if (n < 0) return out;
  rec(rec, n, max_part);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, const DimVector& bounds) {
  const int r = bounds.r();
  std::vector<MultiPartition> out;
  std::vector<Partition> cur(r);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == r - 1) {
      for (auto& p : partitions_of(rem))
        if (p.length() <= bounds[i]) {
          cur[i] = p;
          out.emplace_back(cur);
        }
      return;
    }
    for (int k = rem; k >= 0; --k)
      for (auto& p : partitions_of(k)) {
        if (p.length() > bounds[i]) continue;
        cur[i] = p;
        self(self, i + 1, rem - k);
      }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
  return multipartitions_of(n, DimVector(std::vector<int>(r, n)));
}

Partition r_core(const Partition& lambda, int r) {
  if (r < 1) throw DomainError("r must be positive");
  std::vector<int> b;
  auto run = runners(lambda, r);
  for (int i = 0; i < r; ++i)
    for (int p = 0; p < static_cast<int>(run[i].size()); ++p) b.push_back(p * r + i);
  return from_beta(std::move(b));
}

MultiPartition r_quotient(const Partition& lambda, int r) {
  if (r < 1) throw DomainError("r must be positive");
  auto run = runners(lambda, r);
  MultiPartition quot(r);
  for (int i = 0; i < r; ++i) {
    const int L = static_cast<int>(run[i].size());
    std::vector<int> parts(L);
    for (int k = 0; k < L; ++k) parts[k] = run[i][k] - (L - 1 - k);
    quot[i] = Partition(std::move(parts));
  }
  return quot;
}

MultiPartition reversed_quotient(const Partition& lambda, int r) { return r_quotient(lambda, r).reversed(); }

bool is_r_core(const Partition& lambda, int r) { return r_core(lambda, r) == lambda; }

int quotient_size(const Partition& lambda, int r) { return (lambda.size() - r_core(lambda, r).size()) / r; }

Partition from_core_and_quotient(const Partition& core, const MultiPartition& quot, int r) {
  if (r < 1) throw DomainError("r must be positive");
  if (quot.r() != r) throw DomainError("quotient must have r components");
  if (!is_r_core(core, r)) throw DomainError("first argument '" + core.str() + "' is not an r-core");
  int extra = 0;
  for (const auto& p : quot.components()) extra = std::max(extra, p.length());
  std::vector<int> b = beta_numbers(core, r, extra);
  std::vector<int> count(r, 0);
  for (int x : b) ++count[x % r];
  std::vector<int> out;
  for (int i = 0; i < r; ++i) {
    const int L = count[i];
    for (int k = 0; k < L; ++k) out.push_back((quot[i][k] + (L - 1 - k)) * r + i);
  }
  return from_beta(std::move(out));
}

std::vector<Partition> fiber(const Partition& core, int r, int n) {
  std::vector<Partition> out;
  for (const auto& mp : multipartitions_of(n, r)) out.push_back(from_core_and_quotient(core, mp, r));
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<long> kappa(const Partition& lambda, int r) {
  std::vector<long> c(r, 0);
  for (int b = 0; b < lambda.length(); ++b)
    for (int a = 0; a < lambda[b]; ++a) ++c[cyclic_mod(b - a, r)];
  return c;
}

RootElem kappa_cl(const Partition& lambda, int r) {
  if (r < 1) throw DomainError("r must be positive");
  auto c = kappa(lambda, r);
  RootElem g;
  for (int i = 1; i < r; ++i) g.coeffs.push_back(c[i] - c[0]);
  return g;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  long a = 0, b = 0;
  for (int k = 0; k < std::max(mu.length(), lambda.length()); ++k) {
    a += mu[k];
    b += lambda[k];
    if (a > b) return false;
  }
  return true;
}

bool wreath_comparable(const Partition& mu, const Partition& lambda, int r) {
  if (mu.size() != lambda.size()) return false;
  if (r_core(mu, r) != r_core(lambda, r)) return false;
  return dominance_leq(mu, lambda) || dominance_leq(lambda, mu);
}

long coroot_pairing(int i, const RootElem& gamma, int r) {
  if (static_cast<int>(gamma.coeffs.size()) != r - 1) throw DomainError("root element has wrong rank");
  if (r == 1) return 0;
  i = cyclic_mod(i, r);
  if (i == 0) {
    long s = 0;
    for (int k = 1; k < r; ++k) s += coroot_pairing(k, gamma, r);
    return -s;
  }
  long s = 0;
  for (int j = 1; j < r; ++j) {
    long cij = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    s += cij * gamma.coeffs[j - 1];
  }
  return s;
}

bool is_compatible(const DimVector& N, const RootElem& gamma, int r) {
  if (N.r() != r) return false;
  for (int i = 0; i < r; ++i)
    if (N[i] - N[i - 1] != -coroot_pairing(i, gamma, r)) return false;
  return true;
}

DimVector minimal_compatible(const RootElem& gamma, int r, int floor) {
  if (floor < 0) throw DomainError("floor must be nonnegative");
  std::vector<long> n(r, 0);
  for (int i = 1; i < r; ++i) n[i] = n[i - 1] - coroot_pairing(i, gamma, r);
  long mn = *std::min_element(n.begin(), n.end());
  std::vector<int> out(r);
  for (int i = 0; i < r; ++i) out[i] = static_cast<int>(n[i] - mn + floor);
  return DimVector(std::move(out));
}

}  // namespace wreathmac
