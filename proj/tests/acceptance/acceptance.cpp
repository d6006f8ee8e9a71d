// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "../support/oracle.hpp"
#include "wreathmac/apply.hpp"
#include "wreathmac/eigen.hpp"
#include "wreathmac/errors.hpp"
#include "wreathmac/json_io.hpp"
#include "wreathmac/operators.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Grid {
  int r;
  Partition core;
  int max_boxes;
};

const std::vector<Grid> kMainGrid = {{2, {}, 3}, {2, {1}, 3}, {3, {}, 2}, {3, {1}, 2}};

template <class F>
void each_main_case(F&& f) {
  for (const auto& g : kMainGrid)
    for (int n = 0; n <= g.max_boxes; ++n)
      for (const auto& lam : fiber(g.core, g.r, n)) f(g.r, lam, auto_dimension_vector(lam, g.r, n));
}

Outcome criterion1() {
  Outcome o;
  int cases = 0, failed = 0;
  for (const auto& g : kMainGrid) {
    VerifyOptions opt;
    opt.r = g.r;
    opt.core = g.core;
    opt.max_boxes = g.max_boxes;
    for (const auto& rep : verify_theorem(opt)) {
      ++cases;
      if (!rep.pass) {
        ++failed;
        if (o.detail.empty()) o.detail = "first failure " + to_json(rep) + "; ";
      }
    }
  }
  o.pass = failed == 0;
  o.detail += std::to_string(cases - failed) + "/" + std::to_string(cases) + " (lambda, i) cases satisfy M^(i) P = e^(i) P exactly";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int matrices = 0, functions = 0;
  for (int Nn = 1; Nn <= 4; ++Nn)
    for (int d = 0; d <= 4; ++d) {
      DimVector N{Nn};
      if (!(operator_matrix(OperatorKind::Wreath, 0, N, d) == operator_matrix(OperatorKind::Classic, 0, N, d))) {
        o.pass = false;
        o.detail += "matrix mismatch N=" + N.str() + " degree " + std::to_string(d) + "; ";
      }
      ++matrices;
    }
  for (int n = 0; n <= 4; ++n) {
    auto family = oracle::classic_P_family(n);
    for (int Nn = 1; Nn <= 4; ++Nn) {
      DimVector N{Nn};
      for (const auto& [lam, P] : family) {
        if (lam.length() > Nn) continue;
        XPoly expect = project(P, N);
        XPoly got(N);
        if (Nn >= n) {
          got = solve_P_by_eigen(lam, 1, N).P;
        } else {
          // fewer variables than boxes: kernel on the truncated slice, m_lambda coefficient 1
          QTMatrix M = operator_matrix(OperatorKind::Wreath, 0, N, n);
          auto K = kernel_basis(M - scaled(identity(M.size()), eigenvalue(lam, 0, N, 1)));
          if (K.size() != 1) {
            o.pass = false;
            o.detail += "kernel dimension " + std::to_string(K.size()) + " for " + lam.str() + "; ";
            continue;
          }
          const auto& keys = monomial_basis_keys(N, n);
          std::size_t at = 0;
          while (keys[at][0] != lam) ++at;
          QTScalar inv = QTScalar(1) / K[0][at];
          for (auto& x : K[0]) x *= inv;
          got = from_basis_coordinates(N, n, K[0]);
        }
        if (!(got == expect)) {
          o.pass = false;
          o.detail += "eigenfunction mismatch " + lam.str() + " N=" + N.str() + "; ";
        }
        ++functions;
      }
    }
  }
  o.detail += std::to_string(matrices) + " slice matrices equal the classic operator; " + std::to_string(functions) +
              " eigenfunctions equal the Gram-Schmidt oracle";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int cases = 0;
  each_main_case([&](int r, const Partition& lam, const DimVector& N) {
    ++cases;
    try {
      EigenSolution E = solve_P_by_eigen(lam, r, N);
      if (!(E.P == compute_P_finite(lam, r, N))) {
        o.pass = false;
        o.detail += "routes differ for " + lam.str() + " r=" + std::to_string(r) + "; ";
      }
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += lam.str() + ": " + e.what() + "; ";
    }
  });
  o.detail += std::to_string(cases) + " fibers members, eigen route equals definition route";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int cases = 0;
  each_main_case([&](int r, const Partition& lam, const DimVector& N) {
    QTScalar sum, classic;
    for (int i = 0; i < r; ++i) sum += eigenvalue(lam, i, N, r);
    for (int k = 1; k <= N.total(); ++k) classic += QTScalar::monomial(1, lam[k - 1], N.total() - k);
    ++cases;
    if (!(sum == classic) || !(eigen_character(lam, N).specialize_chi_one() == classic)) {
      o.pass = false;
      o.detail += lam.str() + " N=" + N.str() + "; ";
    }
  });
  o.detail += std::to_string(cases) + " cases: sum_i e^(i) at chi=1 is sum_k q^lambda_k t^(N-k)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  auto random_scalar = [&] {
    QTScalar num, den(1);
    for (int k = 0; k < 3; ++k) num += QTScalar::monomial(coef(rng), expo(rng), expo(rng));
    if (coef(rng) > 0) den = QTScalar(1) - QTScalar::monomial(1, 1 + expo(rng), expo(rng));
    return num / den;
  };
  const std::vector<DimVector> dims = {{1, 1}, {2, 1}, {2, 2}, {1, 3}, {1, 1, 1}, {2, 1, 1}, {1, 2, 2}};
  int inputs = 0, applications = 0;
  for (const auto& N : dims)
    for (int trial = 0; trial < 3; ++trial) {
      XPoly p(N);
      for (int d = 0; d <= 3; ++d)
        for (const auto& mu : monomial_basis_keys(N, d))
          if (coef(rng) > 0) p += monomial_symmetric(N, mu).scaled(random_scalar());
      ++inputs;
      for (int i = 0; i < N.r(); ++i) {
        try {
          XPoly out = apply_M(i, N, p);  // certifies exact division and symmetry internally
          bool ok = is_symmetric(out);
          for (int d = 0; d <= 3 && ok; ++d) {
            XPoly part(N), image(N);
            for (const auto& [m, c] : p.terms()) {
              int deg = 0;
              for (int e : m) deg += e;
              if (deg == d) part.add_term(m, c);
            }
            image = apply_M(i, N, part);
            ok = image.is_homogeneous(d) || image.is_zero();
          }
          if (!ok) {
            o.pass = false;
            o.detail += "asymmetric or inhomogeneous output at N=" + N.str() + "; ";
          }
        } catch (const std::exception& e) {
          o.pass = false;
          o.detail += "N=" + N.str() + ": " + e.what() + "; ";
        }
        ++applications;
      }
    }
  o.detail += std::to_string(applications) + " applications to " + std::to_string(inputs) +
              " random symmetric inputs of degree <= 3 clear denominators exactly and stay symmetric";
  return o;
}

Outcome criterion6() {
  Outcome o;
  long checks = 0;
  auto fail = [&](const std::string& s) {
    if (o.pass) o.detail += s + "; ";
    o.pass = false;
  };
  for (int r = 1; r <= 4; ++r) {
    std::set<std::pair<Partition, MultiPartition>> seen;
    for (int size = 0; size <= 12; ++size) {
      std::vector<Partition> all = partitions_of(size);
      std::map<Partition, std::vector<Partition>> by_core;
      for (const auto& lam : all) {
        Partition c = r_core(lam, r);
        MultiPartition qt = r_quotient(lam, r);
        if (!is_r_core(c, r)) fail("core of " + lam.str() + " is not a core");
        if (c.size() + r * qt.size() != size) fail("size identity fails for " + lam.str());
        if (from_core_and_quotient(c, qt, r) != lam) fail("round trip fails for " + lam.str());
        if (!seen.insert({c, qt}).second) fail("two partitions share core and quotient at " + lam.str());
        by_core[c].push_back(lam);
        checks += 4;
      }
      // surjectivity: every core of this size residue and every quotient is hit
      for (const auto& [c, members] : by_core) {
        int n = (size - c.size()) / r;
        if (members.size() != multipartitions_of(n, r).size()) fail("fiber of " + c.str() + " has the wrong size");
        RootElem g = kappa_cl(members.front(), r);
        for (const auto& lam : members)
          if (!(kappa_cl(lam, r) == g)) fail("kappa varies on the fiber of " + c.str());
        checks += 1 + static_cast<long>(members.size());
      }
      // poset axioms of the wreath order on all partitions of this size
      const std::size_t m = all.size();
      std::vector<std::vector<char>> le(m, std::vector<char>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          bool comp = wreath_comparable(all[a], all[b], r);
          bool expect = r_core(all[a], r) == r_core(all[b], r) &&
                        (dominance_leq(all[a], all[b]) || dominance_leq(all[b], all[a]));
          if (comp != expect) fail("wreath comparability disagrees with its definition");
          le[a][b] = comp && dominance_leq(all[a], all[b]);
        }
      for (std::size_t a = 0; a < m; ++a) {
        if (!le[a][a]) fail("reflexivity");
        for (std::size_t b = 0; b < m; ++b) {
          if (a != b && le[a][b] && le[b][a]) fail("antisymmetry");
          if (!le[a][b]) continue;
          for (std::size_t c = 0; c < m; ++c)
            if (le[b][c] && !le[a][c]) fail("transitivity");
        }
      }
      checks += static_cast<long>(m * m);
    }
  }
  o.detail += std::to_string(checks) + " checks over |lambda| <= 12, r <= 4";
  return o;
}

Outcome criterion7() {
  Outcome o;
  DimVector N{2, 2, 2};
  Selection sel;
  sel.J = {0, 1};
  sel.k = {0, 0, -1};
  const OperatorTerm* term = nullptr;
  auto terms = wreath_terms(1, N);
  for (const auto& t : terms)
    if (t.sel == sel) term = &t;
  if (!term) return {false, "selection J={0,1} k=(1,1) missing from M^(1)"};
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) {
      o.pass = false;
      o.detail += what + " is '" + got + "'; ";
    }
  };
  expect("X", propagated_str(term->X), "X0 = x_0_1, X1 = x_1_1, X2 = q*x_0_1");
  expect("T", substitutions_str(term->shift, N), "x_0_1 -> q*x_1_1, x_1_1 -> q^2*x_0_1");
  expect("T(f)", shifted_arguments_str(term->shift, N), "f(q*x_1_1, x_0_2 | q^2*x_0_1, x_1_2 | x_2_1, x_2_2)");
  const std::vector<std::string> factors = {
      "X1/X0",
      "X2/(X2 - t*X0)",
      "X0/(X0 - t*X1)",
      "X1/(X1 - t*X2)",
      "X2/(X2 - q^-1*X1)",
      "(t*X2 - x_1_1)/(X2 - x_2_1)",
      "(t*X2 - x_1_2)/(X2 - x_2_2)",
      "(t*X0 - x_2_1)/X0",
      "(t*X0 - x_2_2)/(X0 - x_0_2)",
      "(t*X1 - x_0_1)/X1",
      "(t*X1 - x_0_2)/(X1 - x_1_2)",
  };
  if (term->A.factors.size() != factors.size()) {
    o.pass = false;
    o.detail += "A has " + std::to_string(term->A.factors.size()) + " factors; ";
  } else {
    for (std::size_t k = 0; k < factors.size(); ++k) expect("A factor " + std::to_string(k + 1), term->A.factors[k].str(), factors[k]);
  }
  expect("A sign", std::to_string(term->A.sign), "1");
  o.detail += "X-propagation, substitution and the 11 A factors of the r=3 example match";
  return o;
}

Outcome criterion8(const std::string& fixture_dir) {
  Outcome o;
  int compared = 0;
  for (const DimVector& N : {DimVector{1, 1}, DimVector{2, 2}, DimVector{1, 2}, DimVector{2, 1, 2}, DimVector{1, 1, 1}})
    for (int i = 0; i < N.r(); ++i)
      for (const auto& s : full_selections(N)) {
        ++compared;
        if (!(factor(coefficient_A(s, i, N).literal, N.total()) ==
              factor(coefficient_A_full_support(s, i, N).literal, N.total()))) {
          o.pass = false;
          o.detail += "J=I coefficient differs at " + s.str() + " N=" + N.str() + "; ";
        }
      }
  DimVector N{1, 1};
  XPoly f = XPoly::parse("x_0_1 + x_1_1", N);
  XPoly diff = apply_M(0, N, f, /*as_printed=*/true) - apply_shoji_S(N, f);
  if (diff.is_zero()) {
    o.pass = false;
    o.detail += "M^(0) and S agree on x_0_1 + x_1_1; ";
  }
  try {
    std::ifstream in(fixture_dir + "/shoji_diff_r2_N11.json");
    if (!in) throw std::runtime_error("cannot open " + fixture_dir + "/shoji_diff_r2_N11.json");
    nlohmann::json j = nlohmann::json::parse(in);
    XPoly stored = xpoly_from_json(j.at("difference").dump());
    if (!(stored == diff)) {
      o.pass = false;
      o.detail += "difference no longer matches the stored fixture; ";
    }
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail += std::string("fixture: ") + e.what() + "; ";
  }
  o.detail += std::to_string(compared) + " J=I coefficients match the specialized form; M^(0) - S = " + diff.str() +
              " on x_0_1 + x_1_1 at N=(1,1)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures = argc > 1 ? argv[1] : "tests/fixtures";
  std::vector<std::function<Outcome()>> crit = {criterion1, criterion2, criterion3, criterion4,
                                                criterion5, criterion6, criterion7,
                                                [&] { return criterion8(fixtures); }};
  bool all = true;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s (%.1fs)\n", k + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
