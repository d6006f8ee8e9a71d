#include "wreathmac/wreath.hpp"

#include <mutex>
#include <tuple>

#include "wreathmac/errors.hpp"
#include "wreathmac/linalg.hpp"

namespace wreathmac {

namespace {

MultiPartition one_row_key(int n, int r) {
  MultiPartition k(r);
  if (n > 0) k[0] = Partition{n};
  return k;
}

bool strictly_below(const Partition& a, const Partition& b) { return a != b && dominance_leq(a, b); }

}  // namespace

TensorSymFunc compute_Hhat(const Partition& lambda, int r, Direction dir) {
  const Partition core = r_core(lambda, r);
  const int n = quotient_size(lambda, r);
  const std::vector<Partition> F = fiber(core, r, n);
  const std::size_t D = F.size();
  std::vector<MultiPartition> keys;
  std::map<MultiPartition, std::size_t> pos;
  for (const auto& mu : F) {
    pos[reversed_quotient(mu, r)] = keys.size();
    keys.push_back(reversed_quotient(mu, r));
  }

  // column mu: Schur coordinates of the twisted basis element
  auto twisted_columns = [&](const QTScalar& a) {
    QTMatrix T(D, QTVector(D));
    for (std::size_t c = 0; c < D; ++c) {
      TensorSymFunc img = convert_basis(plethystic_twist(TensorSymFunc::unit(r, Basis::Schur, keys[c]), a), Basis::Schur);
      for (const auto& [k, v] : img.terms()) {
        auto it = pos.find(k);
        if (it == pos.end()) throw CertificationError("twist left the fiber slice at key " + k.str());
        T[it->second][c] = v;
      }
    }
    return T;
  };
  const QTMatrix Tq = twisted_columns(QTScalar::q());
  const QTMatrix Tt = twisted_columns(QTScalar(1) / QTScalar::t());

  const bool up_first = dir == Direction::Certified;
  QTMatrix A;
  QTVector b;
  for (std::size_t v = 0; v < D; ++v) {
    const Partition& nu = F[v];
    if (nu == lambda) continue;
    bool above = strictly_below(lambda, nu), below = strictly_below(nu, lambda);
    if (!(up_first ? above : below)) {
      A.push_back(Tq[v]);
      b.emplace_back();
    }
    if (!(up_first ? below : above)) {
      A.push_back(Tt[v]);
      b.emplace_back();
    }
  }
  auto it = pos.find(one_row_key(n, r));
  if (it == pos.end()) throw CertificationError("normalizing key missing from the slice");
  QTVector norm(D);
  norm[it->second] = 1;
  A.push_back(norm);
  b.emplace_back(1);

  QTVector c = solve_unique(A, b);
  TensorSymFunc H(r, Basis::Schur);
  for (std::size_t k = 0; k < D; ++k) H.add_term(keys[k], c[k]);
  return H;
}

TensorSymFunc compute_P(const Partition& lambda, int r, Direction dir) {
  static std::mutex mu;
  static std::map<std::tuple<Partition, int, Direction>, TensorSymFunc> cache;
  auto key = std::make_tuple(lambda, r, dir);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TensorSymFunc H = compute_Hhat(lambda, r, dir);
  TensorSymFunc J = convert_basis(plethystic_twist(H, QTScalar(1) / QTScalar::t()), Basis::Schur);
  QTScalar lead = J.coeff(reversed_quotient(lambda, r));
  if (lead.is_zero()) throw SolveError("coefficient at " + reversed_quotient(lambda, r).str() + " vanishes", 0);
  TensorSymFunc P = J.scaled(QTScalar(1) / lead);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, P);
  return P;
}

void check_dimension_vector(const Partition& lambda, int r, const DimVector& N) {
  if (N.r() != r) throw DomainError("dimension vector " + N.str() + " needs " + std::to_string(r) + " entries");
  RootElem g = kappa_cl(lambda, r);
  if (!is_compatible(N, g, r))
    throw DomainError("N=" + N.str() + " is not compatible with " + lambda.str() + "; try " +
                      minimal_compatible(g, r, quotient_size(lambda, r)).str());
  const int n = quotient_size(lambda, r);
  if (N.min() < n) throw DomainError("N=" + N.str() + " has an entry below the quotient size " + std::to_string(n));
}

MultiSymPoly compute_P_finite(const Partition& lambda, int r, const DimVector& N) {
  check_dimension_vector(lambda, r, N);
  TensorSymFunc P = compute_P(lambda, r).map_coefficients(&qt_invert_q);
  return project(P, N);
}

}  // namespace wreathmac
