#ifndef WREATHMAC_TEST_ORACLE_HPP
#define WREATHMAC_TEST_ORACLE_HPP

// Independent oracle for classic Macdonald P_lambda(q,t): Gram-Schmidt on the
// monomial basis (lexicographically increasing) for the q,t power-sum pairing
// <p_a, p_b> = delta z_a prod (1 - q^a_i)/(1 - t^a_i).

#include <map>

#include "wreathmac/symfunc.hpp"

namespace oracle {

using namespace wreathmac;

inline QTScalar qt_weight(const Partition& rho) {
  QTScalar w(BigRat(z_factor(rho)));
  for (int p : rho.parts()) w *= (QTScalar(1) - QTScalar::monomial(1, p, 0)) / (QTScalar(1) - QTScalar::monomial(1, 0, p));
  return w;
}

inline QTScalar qt_pairing(const TensorSymFunc& f, const TensorSymFunc& g) {
  TensorSymFunc a = convert_basis(f, Basis::Power), b = convert_basis(g, Basis::Power);
  QTScalar s;
  for (const auto& [k, c] : a.terms()) {
    QTScalar d = b.coeff(k);
    if (!d.is_zero()) s += c * d * qt_weight(k[0]);
  }
  return s;
}

// monomial basis, r = 1
inline std::map<Partition, TensorSymFunc> classic_P_family(int n) {
  std::vector<Partition> parts = partitions_of(n);
  std::map<Partition, TensorSymFunc> out;
  std::map<Partition, QTScalar> norms;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    TensorSymFunc m = TensorSymFunc::unit(1, Basis::Monomial, MultiPartition(std::vector<Partition>{*it}));
    TensorSymFunc P = m;
    for (const auto& [mu, Q] : out) P = P - Q.scaled(qt_pairing(m, Q) / norms.at(mu));
    norms.emplace(*it, qt_pairing(P, P));
    out.emplace(*it, P);
  }
  return out;
}

}  // namespace oracle

#endif
