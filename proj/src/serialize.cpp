#include "ellsw/serialize.hpp"

#include <numeric>

#include "ellsw/errors.hpp"

namespace ellsw {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (!j.is_string()) throw InputError("expected a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
}

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const Rational& c : x.power_basis()) coeffs.push_back(c.str());
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) throw InputError("expected {order, coeffs}");
  if (!j["order"].is_number_integer() || j["order"].get<int64_t>() < 1) throw InputError("order must be >= 1");
  if (!j["coeffs"].is_array()) throw InputError("coeffs must be an array");
  int N = j["order"].get<int>();
  std::vector<Rational> c;
  for (const auto& v : j["coeffs"]) c.push_back(rational_from_json(v));
  if ((int)c.size() > euler_phi(N)) throw InputError("more coefficients than phi(order)");
  return CyclotomicNumber::from_power_basis(N, c);
}

std::string root_string(RootValue r) {
  return "zeta_" + std::to_string(r.N) + "^" + std::to_string(mod_floor(r.k, r.N));
}

std::string reduced_root_string(RootValue r) {
  int64_t k = mod_floor(r.k, r.N);
  int64_t g = std::gcd(k, (int64_t)r.N);
  int64_t d = r.N / g;
  if (d == 1) return "1";
  if (d == 2) return "-1";
  return "zeta_" + std::to_string(d) + "^" + std::to_string(k / g);
}

Json to_json(const GroupSpec& s) {
  return Json{{"family", family_name(s.family)}, {"m", s.m}, {"n", s.dihedral() ? Json(s.n) : Json(nullptr)}};
}

GroupReport group_report(const FiniteGroup& G) {
  if (!G.spec) throw InternalError("group report needs a group from build_group");
  GroupReport r;
  r.spec = *G.spec;
  r.order = (int64_t)G.order();
  r.scalar_order = (int64_t)scalar_subgroup(G).order();
  r.class_count = (int64_t)conjugacy_classes(G).size();
  r.abelianization = abelianization(G).factors;
  return r;
}

GroupReport group_report(const GroupSpec& s) { return group_report(build_group(s)); }

Json to_json(const GroupReport& r) {
  Json j = to_json(r.spec);
  j["order"] = r.order;
  j["scalar_order"] = r.scalar_order;
  j["class_count"] = r.class_count;
  j["abelianization"] = r.abelianization;
  return j;
}

Json seifert_json(const GroupSpec& s) {
  SeifertInvariant inv = normalized_invariant(s);
  Json legs = Json::array();
  for (auto [a, b] : inv.legs) legs.push_back({a, b});
  return Json{{"e", euler_number(s).str()}, {"b", inv.b}, {"legs", legs}};
}

Json character_json(const GroupSpec& s) {
  Json values = Json::array();
  for (RootValue v : rho_generator_values(s)) values.push_back(root_string(v));
  return Json{{"generators", rho_generator_names(s)}, {"values", values}};
}

Json to_json(const SWDimensionReport& r) {
  Json S = Json::object();
  for (const auto& [k, v] : r.s_breakdown) S[k] = v.str();
  return Json{{"spec", to_json(r.spec)},       {"c1E_sq", r.c1E_squared.str()},
              {"minus_K_c1E", r.minus_K_dot_c1E.str()}, {"S", S},
              {"sum_chi", r.sum_chi.str()},    {"dE", r.d_E}};
}

Json to_json(const AuditReport& r) {
  Json rhs = Json::array();
  for (const auto& t : r.rhs) rhs.push_back(Json{{"label", t.label}, {"value", t.value.str()}});
  return Json{{"lhs", r.lhs.str()}, {"rhs", rhs}, {"rhs_total", r.rhs_total.str()}, {"slack", r.slack.str()}};
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace ellsw
