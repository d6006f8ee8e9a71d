// wreathmac: command line front end. Exit codes: 0 ok, 1 verification or
// solver failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "wreathmac/eigen.hpp"
#include "wreathmac/errors.hpp"
#include "wreathmac/json_io.hpp"
#include "wreathmac/operators.hpp"
#include "wreathmac/symfunc.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;
using nlohmann::json;

namespace {

struct Common {
  int r = 1;
  std::string N = "auto";
  std::string format = "text";
  int jobs = 1;
  bool trace = false;
  std::string engine = "auto";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string paren(const Partition& p) { return "(" + p.str() + ")"; }
std::string paren(const MultiPartition& p) { return "(" + p.str() + ")"; }

json jparse(const std::string& s) { return json::parse(s); }

DimVector resolve_N(const Common& g, const Partition* lambda) {
  if (g.N != "auto") {
    DimVector N = DimVector::parse(g.N);
    if (N.r() != g.r) throw UsageError("--N has " + std::to_string(N.r()) + " entries but -r is " + std::to_string(g.r));
    return N;
  }
  if (!lambda) throw UsageError("--N auto needs a partition to infer compatibility");
  return auto_dimension_vector(*lambda, g.r, quotient_size(*lambda, g.r));
}

void print_tensor(std::ostream& os, const TensorSymFunc& f, const std::string& indent = "  ") {
  if (f.is_zero()) os << indent << "0\n";
  for (const auto& [k, c] : f.terms()) os << indent << "s[" << k.str() << "]: " << c.str() << "\n";
}

// coefficient of the projected Schur function at key in a degree-n symmetric polynomial
QTScalar schur_coefficient(const XPoly& P, int n, int r, const MultiPartition& key) {
  const auto& keys = monomial_basis_keys(P.dims(), n);
  QTVector v = expand_in_basis(P, n);
  TensorSymFunc m(r, Basis::Monomial);
  for (std::size_t c = 0; c < keys.size(); ++c) m.add_term(keys[c], v[c]);
  return convert_basis(m, Basis::Schur).coeff(key);
}

int cmd_core(const Common& g, const std::string& text) {
  Partition lam = Partition::parse(text);
  Partition core = r_core(lam, g.r);
  MultiPartition quot = r_quotient(lam, g.r), rev = reversed_quotient(lam, g.r);
  RootElem gamma = kappa_cl(lam, g.r);
  DimVector N = auto_dimension_vector(lam, g.r, 0);
  if (g.format == "json") {
    std::cout << json{{"partition", lam.str()},      {"r", g.r},
                      {"core", core.str()},          {"quotient", quot.str()},
                      {"reversed_quotient", rev.str()}, {"quotient_size", quotient_size(lam, g.r)},
                      {"gamma", gamma.coeffs},       {"minimal_N", N.entries()}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "partition: " << paren(lam) << "\n"
            << "r: " << g.r << "\n"
            << "core: " << paren(core) << "\n"
            << "quotient: " << paren(quot) << "\n"
            << "reversed quotient: " << paren(rev) << "\n"
            << "quotient size: " << quotient_size(lam, g.r) << "\n"
            << "gamma: " << gamma.str() << "\n"
            << "minimal N: " << N.str() << "\n";
  return 0;
}

int cmd_hhat(const Common& g, const std::string& text) {
  Partition lam = Partition::parse(text);
  TensorSymFunc H = compute_Hhat(lam, g.r);
  if (g.format == "json") {
    std::cout << to_json(H) << "\n";
    return 0;
  }
  std::cout << "Hhat for " << paren(lam) << ", r=" << g.r << " (Schur basis)\n";
  print_tensor(std::cout, H);
  return 0;
}

int cmd_pgamma(const Common& g, const std::string& text, const std::string& route, bool schur) {
  Partition lam = Partition::parse(text);
  DimVector N = resolve_N(g, &lam);
  check_dimension_vector(lam, g.r, N);
  const int n = quotient_size(lam, g.r);
  const Engine engine = parse_engine(g.engine);
  std::optional<XPoly> by_eigen, by_def;
  int kdim = -1;
  if (route == "eigen" || route == "both") {
    EigenSolution E = solve_P_by_eigen(lam, g.r, N, engine);
    kdim = E.kernel_dimension;
    by_eigen = E.P;
  }
  if (route == "definition" || route == "both") by_def = compute_P_finite(lam, g.r, N);
  const XPoly& P = by_eigen ? *by_eigen : *by_def;
  const MultiPartition key = reversed_quotient(lam, g.r);
  QTScalar lead = schur_coefficient(P, n, g.r, key);
  bool agree = !(by_eigen && by_def) || *by_eigen == *by_def;

  if (g.format == "json") {
    json j{{"lambda", lam.str()}, {"r", g.r}, {"N", N.entries()}, {"route", route},
           {"P", jparse(to_json(P))}, {"leading_key", key.str()}, {"leading_coefficient", lead.str()}};
    if (by_eigen && by_def) j["routes_agree"] = agree;
    if (schur) j["P_schur"] = jparse(to_json(compute_P(lam, g.r)));
    if (g.trace) j["engine"] = engine_name(resolve_engine(engine, N));
    if (kdim >= 0 && g.trace) j["kernel_dimension_M0"] = kdim;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "lambda: " << paren(lam) << "  r: " << g.r << "  N: " << N.str() << "\n";
    if (g.trace) {
      std::cout << "engine: " << engine_name(resolve_engine(engine, N)) << "\n";
      if (kdim >= 0) std::cout << "kernel dimension of M^(0) - e^(0): " << kdim << "\n";
    }
    std::cout << "P = " << P.str() << "\n";
    std::cout << "leading Schur coefficient at " << paren(key) << ": " << lead.str() << "\n";
    if (by_eigen && by_def) {
      std::cout << "routes agree: " << (agree ? "true" : "false") << "\n";
      if (!agree) std::cout << "eigen - definition = " << (*by_eigen - *by_def).str() << "\n";
    }
    if (schur) {
      std::cout << "P in the Schur basis (before q -> 1/q):\n";
      print_tensor(std::cout, compute_P(lam, g.r));
    }
  }
  return agree ? 0 : 1;
}

int cmd_eig(const Common& g, const std::string& text, bool matrix) {
  Partition lam = Partition::parse(text);
  DimVector N = resolve_N(g, &lam);
  const int n = quotient_size(lam, g.r);
  CharRingElem ch = eigen_character(lam, N);
  std::vector<QTScalar> e;
  QTScalar sum;
  for (int i = 0; i < g.r; ++i) {
    e.push_back(eigenvalue(lam, i, N, g.r));
    sum += e.back();
  }
  QTScalar classic;
  for (int k = 1; k <= N.total(); ++k) classic += QTScalar::monomial(1, lam[k - 1], N.total() - k);
  std::vector<std::string> collide;
  for (const auto& mu : fiber(r_core(lam, g.r), g.r, n)) {
    if (mu == lam) continue;
    bool same = true;
    for (int i = 0; i < g.r && same; ++i) same = eigenvalue(mu, i, N, g.r) == e[i];
    if (same) collide.push_back(mu.str());
  }
  const Engine engine = parse_engine(g.engine);
  if (g.format == "json") {
    json j{{"lambda", lam.str()}, {"r", g.r}, {"N", N.entries()}, {"character", ch.str()}};
    json ev = json::array();
    for (const auto& x : e) ev.push_back(x.str());
    j["eigenvalues"] = ev;
    j["chi_one_sum"] = sum.str();
    j["classic_sum_matches"] = sum == classic;
    j["collisions"] = collide;
    if (matrix) {
      json ms = json::array();
      for (int i = 0; i < g.r; ++i) {
        json rows = json::array();
        for (const auto& row : operator_matrix(OperatorKind::Wreath, i, N, n, engine)) {
          json jr = json::array();
          for (const auto& x : row) jr.push_back(x.str());
          rows.push_back(jr);
        }
        ms.push_back(rows);
      }
      j["basis"] = json::array();
      for (const auto& k : monomial_basis_keys(N, n)) j["basis"].push_back(k.str());
      j["matrices"] = ms;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "lambda: " << paren(lam) << "  r: " << g.r << "  N: " << N.str() << "\n";
    std::cout << "character: " << ch.str() << "\n";
    for (int i = 0; i < g.r; ++i) std::cout << "e^(" << i << ") = " << e[i].str() << "\n";
    std::cout << "sum with chi -> 1: " << sum.str() << "\n";
    std::cout << "matches sum_k q^lambda_k t^(N-k): " << (sum == classic ? "true" : "false") << "\n";
    std::cout << "collisions in fiber: " << (collide.empty() ? "none" : "") ;
    for (std::size_t k = 0; k < collide.size(); ++k) std::cout << (k ? " " : "") << paren(Partition::parse(collide[k]));
    std::cout << "\n";
    if (matrix) {
      std::cout << "basis:";
      for (const auto& k : monomial_basis_keys(N, n)) std::cout << " m[" << k.str() << "]";
      std::cout << "\n";
      for (int i = 0; i < g.r; ++i) {
        std::cout << "M^(" << i << "):\n";
        for (const auto& row : operator_matrix(OperatorKind::Wreath, i, N, n, engine)) {
          std::cout << " ";
          for (const auto& x : row) std::cout << " [" << x.str() << "]";
          std::cout << "\n";
        }
      }
    }
  }
  return sum == classic ? 0 : 1;
}

// "0,1:1,1" -> J = {0,1}, slots 1-based
std::optional<Selection> parse_select(const std::string& s, int r) {
  if (s.empty()) return std::nullopt;
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("selection needs the form J:k, e.g. 0,1:1,1", 0);
  auto ints = [&](const std::string& part, std::size_t offset) {
    std::vector<int> v;
    std::stringstream ss(part);
    std::string tok;
    std::size_t pos = offset;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in selection", pos);
      }
      pos += tok.size() + 1;
    }
    return v;
  };
  std::vector<int> J = ints(s.substr(0, colon), 0), k = ints(s.substr(colon + 1), colon + 1);
  if (J.size() != k.size()) throw ParseError("selection has " + std::to_string(J.size()) + " vertices but " +
                                                 std::to_string(k.size()) + " slots", colon);
  Selection sel;
  sel.k.assign(r, -1);
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (J[a] < 0 || J[a] >= r) throw ParseError("vertex out of range in selection", 0);
    sel.k[J[a]] = k[a] - 1;
  }
  for (int j = 0; j < r; ++j)
    if (sel.k[j] >= 0) sel.J.push_back(j);
  return sel;
}

json term_json(const OperatorTerm& t, const DimVector& N) {
  std::vector<int> slots;
  for (int kk : t.sel.k) slots.push_back(kk < 0 ? 0 : kk + 1);
  json factors = json::array();
  for (const auto& f : t.A.factors) factors.push_back(f.str());
  return json{{"selection", t.sel.str()},
              {"J", t.sel.J},
              {"k", slots},
              {"sign", t.sign},
              {"X", propagated_str(t.X)},
              {"A_sign", t.A.sign},
              {"A", factors},
              {"T", substitutions_str(t.shift, N)},
              {"arguments", shifted_arguments_str(t.shift, N)}};
}

void print_term(std::ostream& os, const OperatorTerm& t, const DimVector& N) {
  os << "term " << t.sel.str() << "  sign " << (t.sign < 0 ? "-1" : "+1") << "\n";
  os << "  X: " << propagated_str(t.X) << "\n";
  os << "  A = " << t.A.str() << "\n";
  for (const auto& f : t.A.factors) os << "    " << f.str() << "\n";
  os << "  T: " << substitutions_str(t.shift, N) << "\n";
  os << "  T(f) = " << shifted_arguments_str(t.shift, N) << "\n";
}

int cmd_operator(const Common& g, const std::string& text, const std::string& mode, int i, bool as_printed,
                 const std::string& select) {
  if (g.N == "auto") throw UsageError("operator needs an explicit --N");
  DimVector N = resolve_N(g, nullptr);
  XPoly f = XPoly::parse(text, N);
  const Engine engine = parse_engine(g.engine);
  if (i < 0 || i >= g.r) throw UsageError("vertex -i must lie in 0.." + std::to_string(g.r - 1));
  auto sel = parse_select(select, g.r);

  OperatorKind kind = mode == "classic" ? OperatorKind::Classic : mode == "shoji" ? OperatorKind::Shoji : OperatorKind::Wreath;
  if (kind == OperatorKind::Classic && g.r != 1) throw UsageError("classic mode needs -r 1");
  // Shoji's operator carries no normalization, so the comparison uses the literal sum
  const bool literal = as_printed || mode == "diff";
  std::vector<OperatorTerm> traced;
  if (g.trace)
    for (auto& t : operator_terms(kind, i, N))
      if (!sel || t.sel == *sel) traced.push_back(std::move(t));

  XPoly out = apply_operator(kind, i, f, engine, literal);
  std::optional<XPoly> shoji;
  if (mode == "diff") shoji = apply_operator(OperatorKind::Shoji, 0, f, engine);

  if (g.format == "json") {
    json j{{"mode", mode}, {"r", g.r}, {"N", N.entries()}, {"i", i}, {"as_printed", literal},
           {"input", jparse(to_json(f))}, {"output", jparse(to_json(out))}};
    if (shoji) {
      j["shoji"] = jparse(to_json(*shoji));
      j["difference"] = jparse(to_json(out - *shoji));
    }
    if (g.trace) {
      j["terms"] = json::array();
      for (const auto& t : traced) j["terms"].push_back(term_json(t, N));
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const auto& t : traced) print_term(std::cout, t, N);
  std::string name = kind == OperatorKind::Classic ? "M" : kind == OperatorKind::Shoji ? "S" : "M^(" + std::to_string(i) + ")";
  std::cout << name << (literal && kind == OperatorKind::Wreath ? " as printed" : "") << " f = " << out.str() << "\n";
  if (shoji) {
    std::cout << "S f = " << shoji->str() << "\n";
    std::cout << "difference = " << (out - *shoji).str() << "\n";
    std::cout << "operators differ on f: " << ((out - *shoji).is_zero() ? "false" : "true") << "\n";
  }
  return 0;
}

int cmd_verify(const Common& g, bool text_output, const std::string& core, int max_boxes, int floor) {
  VerifyOptions o;
  o.r = g.r;
  o.core = Partition::parse(core);
  o.max_boxes = max_boxes;
  o.N_floor = floor;
  o.jobs = g.jobs;
  o.engine = parse_engine(g.engine);
  if (g.N != "auto") o.N = resolve_N(g, nullptr);
  auto reps = verify_theorem(o);
  int passed = 0;
  for (const auto& rep : reps) {
    passed += rep.pass;
    if (text_output) {
      std::cout << (rep.pass ? "pass" : "FAIL") << "  r=" << rep.r << " core=" << paren(rep.core)
                << " lambda=" << paren(rep.lambda) << " N=" << rep.N.str() << " i=" << rep.i;
      if (!rep.pass) std::cout << "  " << (rep.error.empty() ? "residual " + rep.residual : rep.error);
      std::cout << "\n";
    } else {
      std::cout << to_json(rep) << "\n";
    }
  }
  std::cerr << passed << "/" << reps.size() << " cases pass\n";
  return passed == static_cast<int>(reps.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wreath Macdonald polynomials and difference operators"};
  app.require_subcommand(1);
  Common g;
  auto* fmt = app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-r", g.r, "order of the cyclic group")->check(CLI::PositiveNumber);
  app.add_option("--N", g.N, "dimension vector such as 2,3, or auto");
  app.add_option("--jobs", g.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--trace", g.trace, "print operator terms and solver details");
  app.add_option("--engine", g.engine, "operator matrices: auto, symbolic or interpolation")
      ->check(CLI::IsMember({"auto", "symbolic", "interpolation"}));

  std::string part;
  auto* core = app.add_subcommand("core", "core, quotient and a compatible dimension vector")->fallthrough();
  core->add_option("partition", part, "partition such as 3,1 (empty for the empty partition)");

  auto* hhat = app.add_subcommand("hhat", "modified wreath function from the triangularity conditions")->fallthrough();
  hhat->add_option("partition", part)->required();

  std::string route = "both";
  bool schur = false;
  auto* pg = app.add_subcommand("pgamma", "P in finitely many variables with q inverted")->fallthrough();
  pg->add_option("partition", part)->required();
  pg->add_option("--route", route, "eigen, definition or both")->check(CLI::IsMember({"eigen", "definition", "both"}));
  pg->add_flag("--schur", schur, "also print the symmetric function P in the Schur basis");

  bool matrix = false;
  auto* eig = app.add_subcommand("eig", "eigenvalues and operator matrices on the fiber slice")->fallthrough();
  eig->add_option("partition", part)->required();
  eig->add_flag("--matrix", matrix, "print the operator matrices");

  std::string poly, mode = "M", select;
  int vertex = 0;
  bool as_printed = false;
  auto* op = app.add_subcommand("operator", "apply M^(i), the classic operator or Shoji's operator")->fallthrough();
  op->add_option("polynomial", poly, "symmetric polynomial in x_<vertex>_<slot>")->required();
  op->add_option("-i,--vertex", vertex, "vertex i of M^(i)");
  op->add_option("--mode", mode, "M, classic, shoji or diff")->check(CLI::IsMember({"M", "classic", "shoji", "diff"}));
  op->add_flag("--as-printed", as_printed, "skip the ((q-t)/q)^(r-1) rescaling of M^(i)");
  op->add_option("--select", select, "trace only the term J:k, e.g. 0,1:1,1 (slots 1-based)");

  std::string vcore;
  int max_boxes = 2, floor = 0;
  auto* ver = app.add_subcommand("verify", "check M^(i) P = e^(i) P over a fiber grid")->fallthrough();
  ver->add_option("--core", vcore, "r-core of the fiber");
  ver->add_option("--max-boxes", max_boxes, "largest quotient size")->check(CLI::NonNegativeNumber);
  ver->add_option("--N-floor", floor, "lower bound for auto dimension vectors")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*core) return cmd_core(g, part);
    if (*hhat) return cmd_hhat(g, part);
    if (*pg) return cmd_pgamma(g, part, route, schur);
    if (*eig) return cmd_eig(g, part, matrix);
    if (*op) return cmd_operator(g, poly, mode, vertex, as_printed, select);
    if (*ver) return cmd_verify(g, fmt->count() > 0 ? g.format == "text" : false, vcore, max_boxes, floor);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SolveError& e) {
    std::cerr << "solve error (dimension " << e.dimension() << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
