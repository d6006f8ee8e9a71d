#include "wreathmac/json_io.hpp"

#include <nlohmann/json.hpp>

#include "wreathmac/errors.hpp"

namespace wreathmac {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

template <class F>
auto field(const json& j, const char* name, F&& get) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'", 0);
  try {
    return get(j.at(name));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + name + "': " + e.what(), 0);
  }
}

json dims_json(const DimVector& N) { return N.entries(); }

DimVector dims_from(const json& j) { return DimVector(j.get<std::vector<int>>()); }

}  // namespace

std::string to_json(const TensorSymFunc& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({{"key", k.str()}, {"coeff", c.str()}});
  return json{{"r", f.r()}, {"basis", basis_name(f.basis())}, {"terms", terms}}.dump();
}

std::string to_json(const XPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m}, {"coeff", c.str()}});
  return json{{"N", dims_json(p.dims())}, {"text", p.str()}, {"terms", terms}}.dump();
}

std::string to_json(const VerificationReport& rep) {
  json j{{"r", rep.r},
         {"core", rep.core.str()},
         {"lambda", rep.lambda.str()},
         {"N", dims_json(rep.N)},
         {"i", rep.i},
         {"status", rep.pass ? "pass" : "fail"},
         {"eigenvalue", rep.eigenvalue},
         {"residual", rep.residual}};
  if (!rep.error.empty()) j["error"] = rep.error;
  return j.dump();
}

TensorSymFunc tensor_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  int r = field(j, "r", [](const json& v) { return v.get<int>(); });
  Basis b = parse_basis(field(j, "basis", [](const json& v) { return v.get<std::string>(); }));
  TensorSymFunc f(r, b);
  for (const auto& t : field(j, "terms", [](const json& v) { return v; })) {
    auto key = MultiPartition::parse(field(t, "key", [](const json& v) { return v.get<std::string>(); }), r);
    f.add_term(key, QTScalar::parse(field(t, "coeff", [](const json& v) { return v.get<std::string>(); })));
  }
  return f;
}

XPoly xpoly_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  DimVector N = field(j, "N", dims_from);
  XPoly p(N);
  for (const auto& t : field(j, "terms", [](const json& v) { return v; })) {
    auto m = field(t, "exponents", [](const json& v) { return v.get<XMonomial>(); });
    if (static_cast<int>(m.size()) != N.total()) throw ParseError("exponent vector has wrong length", 0);
    p.add_term(m, QTScalar::parse(field(t, "coeff", [](const json& v) { return v.get<std::string>(); })));
  }
  return p;
}

VerificationReport report_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  auto str = [](const json& v) { return v.get<std::string>(); };
  VerificationReport rep;
  rep.r = field(j, "r", [](const json& v) { return v.get<int>(); });
  rep.core = Partition::parse(field(j, "core", str));
  rep.lambda = Partition::parse(field(j, "lambda", str));
  rep.N = field(j, "N", dims_from);
  rep.i = field(j, "i", [](const json& v) { return v.get<int>(); });
  std::string status = field(j, "status", str);
  if (status != "pass" && status != "fail") throw ParseError("status must be pass or fail", 0);
  rep.pass = status == "pass";
  rep.eigenvalue = field(j, "eigenvalue", str);
  rep.residual = field(j, "residual", str);
  if (j.contains("error")) rep.error = field(j, "error", str);
  return rep;
}

}  // namespace wreathmac
