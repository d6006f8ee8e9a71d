#include "wreathmac/eigen.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "wreathmac/apply.hpp"
#include "wreathmac/errors.hpp"
#include "wreathmac/interp.hpp"
#include "wreathmac/symfunc.hpp"
#include "wreathmac/wreath.hpp"

namespace wreathmac {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Symbolic:
      return "symbolic";
    case Engine::Interpolation:
      return "interpolation";
    case Engine::Auto:
      break;
  }
  return "auto";
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::Auto;
  if (s == "symbolic") return Engine::Symbolic;
  if (s == "interpolation") return Engine::Interpolation;
  throw ParseError("unknown engine '" + s + "'", 0);
}

Engine resolve_engine(Engine e, const DimVector& N) {
  if (e != Engine::Auto) return e;
  return N.total() <= 6 ? Engine::Symbolic : Engine::Interpolation;
}

QTMatrix operator_matrix(OperatorKind kind, int i, const DimVector& N, int degree, Engine engine, bool as_printed) {
  engine = resolve_engine(engine, N);
  if (kind == OperatorKind::Wreath) i = cyclic_mod(i, N.r());
  else i = 0;
  using Key = std::tuple<int, int, std::vector<int>, int, int, bool>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const QTMatrix>> cache;
  Key key{static_cast<int>(kind), i, N.entries(), degree, static_cast<int>(engine), as_printed};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  QTMatrix M;
  if (engine == Engine::Symbolic) {
    auto op = symbolic_operator(kind, i, N);
    const auto& keys = monomial_basis_keys(N, degree);
    M.assign(keys.size(), QTVector(keys.size()));
    for (std::size_t c = 0; c < keys.size(); ++c) {
      QTVector col = expand_in_basis(op->image_of_monomial(keys[c]), degree);
      for (std::size_t b = 0; b < keys.size(); ++b) M[b][c] = col[b];
    }
  } else {
    M = InterpolatedOperator(operator_terms(kind, i, N), N).matrix(degree);
  }
  if (kind == OperatorKind::Wreath && !as_printed) M = scaled(M, eigen_normalization(N.r()));
  std::lock_guard<std::mutex> lock(mu);
  cache.try_emplace(key, std::make_shared<const QTMatrix>(M));
  return M;
}

XPoly apply_operator(OperatorKind kind, int i, const XPoly& p, Engine engine, bool as_printed) {
  const DimVector& N = p.dims();
  std::map<int, XPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (int e : m) d += e;
    parts.try_emplace(d, N).first->second.add_term(m, c);
  }
  XPoly out(N);
  for (const auto& [d, part] : parts) {
    QTVector v = expand_in_basis(part, d);
    out += from_basis_coordinates(N, d, operator_matrix(kind, i, N, d, engine, as_printed) * v);
  }
  return out;
}

namespace {

bool is_zero_vector(const QTVector& v) {
  return std::all_of(v.begin(), v.end(), [](const QTScalar& x) { return x.is_zero(); });
}

QTVector eigen_residual(const QTMatrix& M, const QTVector& v, const QTScalar& e) {
  QTVector r = M * v;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= e * v[k];
  return r;
}

}  // namespace

EigenSolution solve_P_by_eigen(const Partition& lambda, int r, const DimVector& N, Engine engine) {
  check_dimension_vector(lambda, r, N);
  const int n = quotient_size(lambda, r);
  const auto& keys = monomial_basis_keys(N, n);
  const std::size_t D = keys.size();

  EigenSolution out{XPoly(N), 0, {}};
  for (int i = 0; i < r; ++i) out.eigenvalues.push_back(eigenvalue(lambda, i, N, r));
  for (const auto& mu : fiber(r_core(lambda, r), r, n)) {
    if (mu == lambda) continue;
    bool same = true;
    for (int i = 0; i < r && same; ++i) same = eigenvalue(mu, i, N, r) == out.eigenvalues[i];
    if (same) throw SolveError("eigenvalues of " + lambda.str() + " and " + mu.str() + " coincide at N=" + N.str(), 2);
  }

  std::vector<QTMatrix> Ms;
  for (int i = 0; i < r; ++i) Ms.push_back(operator_matrix(OperatorKind::Wreath, i, N, n, engine));
  const QTMatrix I = identity(D);
  std::vector<QTVector> K = kernel_basis(Ms[0] - scaled(I, out.eigenvalues[0]));
  out.kernel_dimension = static_cast<int>(K.size());
  QTVector v;
  if (K.size() == 1) {
    v = K[0];
    for (int i = 1; i < r; ++i)
      if (!is_zero_vector(eigen_residual(Ms[i], v, out.eigenvalues[i])))
        throw SolveError("joint kernel is zero: M^(" + std::to_string(i) + ") moves the M^(0) eigenvector", 0);
  } else if (K.empty()) {
    throw SolveError("kernel of M^(0) - e^(0) is zero", 0);
  } else {
    QTMatrix stacked;
    for (int i = 0; i < r; ++i) {
      QTMatrix A = Ms[i] - scaled(I, out.eigenvalues[i]);
      stacked.insert(stacked.end(), A.begin(), A.end());
    }
    K = kernel_basis(stacked);
    if (K.size() != 1)
      throw SolveError("joint kernel has dimension " + std::to_string(K.size()), static_cast<int>(K.size()));
    v = K[0];
  }

  TensorSymFunc m(r, Basis::Monomial);
  for (std::size_t c = 0; c < D; ++c) m.add_term(keys[c], v[c]);
  QTScalar lead = convert_basis(m, Basis::Schur).coeff(reversed_quotient(lambda, r));
  if (lead.is_zero()) throw SolveError("eigenvector has no component at " + reversed_quotient(lambda, r).str(), 0);
  QTScalar inv = QTScalar(1) / lead;
  for (auto& x : v) x *= inv;
  out.P = from_basis_coordinates(N, n, v);
  return out;
}

DimVector auto_dimension_vector(const Partition& lambda, int r, int floor) {
  return minimal_compatible(kappa_cl(lambda, r), r, std::max(floor, quotient_size(lambda, r)));
}

std::vector<VerificationReport> verify_theorem(const VerifyOptions& opt) {
  if (!is_r_core(opt.core, opt.r)) throw DomainError(opt.core.str() + " is not a " + std::to_string(opt.r) + "-core");
  std::vector<VerificationReport> cases;
  for (int n = 0; n <= opt.max_boxes; ++n)
    for (const auto& lam : fiber(opt.core, opt.r, n)) {
      DimVector N = opt.N ? *opt.N : auto_dimension_vector(lam, opt.r, std::max(opt.N_floor, n));
      for (int i = 0; i < opt.r; ++i) {
        VerificationReport rep;
        rep.r = opt.r;
        rep.core = opt.core;
        rep.lambda = lam;
        rep.N = N;
        rep.i = i;
        cases.push_back(std::move(rep));
      }
    }

  auto run = [&](VerificationReport& rep) {
    try {
      const int n = quotient_size(rep.lambda, rep.r);
      MultiSymPoly P = compute_P_finite(rep.lambda, rep.r, rep.N);
      QTScalar e = eigenvalue(rep.lambda, rep.i, rep.N, rep.r);
      rep.eigenvalue = e.str();
      QTVector v = expand_in_basis(P, n);
      QTMatrix M = operator_matrix(OperatorKind::Wreath, rep.i, rep.N, n, opt.engine);
      XPoly res = from_basis_coordinates(rep.N, n, eigen_residual(M, v, e));
      rep.pass = res.is_zero();
      rep.residual = res.str();
    } catch (const std::exception& ex) {
      rep.pass = false;
      rep.error = ex.what();
    }
  };

  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(cases.size())));
  if (jobs == 1) {
    for (auto& c : cases) run(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next++) < cases.size();) run(cases[k]);
      });
    for (auto& th : pool) th.join();
  }
  return cases;
}

}  // namespace wreathmac
