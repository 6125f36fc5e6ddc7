#include "ellsw/curves.hpp"

#include <algorithm>

#include "ellsw/errors.hpp"
#include "json.hpp"

namespace ellsw {

namespace {

void check_record(const OrbifoldPointRecord& r) {
  if (r.m < 1 || r.l < 1 || r.ambient < 1) throw DomainError("orbifold point record needs m, l, ambient >= 1");
  if (r.lp && *r.lp < 1) throw DomainError("winding l' must be >= 1 when defined");
}

}  // namespace

Rational virtual_genus(const CurveClassData& c) { return (c.CC + c.KC) / Rational(2) + Rational(1); }

Rational orbifold_genus(int64_t underlying_genus, const std::vector<int64_t>& point_orders) {
  Rational g(underlying_genus);
  for (int64_t m : point_orders) {
    if (m < 1) throw DomainError("orbifold point orders must be >= 1");
    g += (Rational(1) - Rational(1, m)) / Rational(2);
  }
  return g;
}

Rational kz_min_at_p0(int64_t point_order, int64_t group_order) {
  if (point_order < 1 || group_order < 1) throw DomainError("orders must be positive");
  if (group_order % point_order != 0)
    throw DomainError("point order " + std::to_string(point_order) + " does not divide |G| = " +
                      std::to_string(group_order));
  return Rational(group_order / point_order - 1, 2 * point_order);
}

Rational kz_lower_bound(const OrbifoldPointRecord& r, int64_t n) {
  check_record(r);
  if (n < 1) throw DomainError("ambient isotropy order must be positive");
  if (!r.lp) {
    if (r.l == 1 && r.m == n) return Rational(0);
    throw DomainError("k_z bound needs l' unless l = 1 and m = n");
  }
  Rational lp(*r.lp);
  Rational v = Rational(r.l - 1) * (lp - Rational(1)) + (Rational(n, r.m) - Rational(1)) * Rational(r.l) * lp;
  return v / Rational(2 * r.m);
}

Rational kpair_lower_bound(const OrbifoldPointRecord& a, const OrbifoldPointRecord& b, int64_t n) {
  check_record(a);
  check_record(b);
  if (n < 1) throw DomainError("ambient isotropy order must be positive");
  std::optional<int64_t> x, y;  // l_a l'_b and l_b l'_a; nullopt = infinite
  if (b.lp) x = a.l * *b.lp;
  if (a.lp) y = b.l * *a.lp;
  if (!x && !y) throw DomainError("k_[z,z'] bound undefined: both windings l' are undefined");
  int64_t mn = x && y ? std::min(*x, *y) : x ? *x : *y;
  return Rational(1, n) * Rational(n, a.m) * Rational(n, b.m) * Rational(mn);
}

Rational intersection_with_c0(const std::vector<OrbifoldPointRecord>& records) {
  Rational s;
  for (auto& r : records) {
    check_record(r);
    s += Rational(r.l, r.m);
  }
  return s;
}

Rational adjunction_slack(const Rational& lhs, const std::vector<Rational>& rhs) {
  Rational s = lhs;
  for (auto& t : rhs) s -= t;
  return s;
}

int64_t fredholm_index(const Rational& c1TX, int64_t g, const std::vector<std::array<int64_t, 3>>& weights) {
  Rational d = c1TX + Rational(2 - 2 * g);
  for (auto [m, m1, m2] : weights) {
    if (m < 1) throw DomainError("weight order must be positive");
    d -= Rational(m1 + m2, m);
  }
  if (d.den() != 1) throw DomainError("d = " + d.str() + " is not an integer: inconsistent weight data");
  return 2 * d.num();
}

// ---------------------------------------------------------------------------
// Audit documents

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (!j.is_string()) bad(path, "expected a rational \"p/q\" string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(path, e.what());
  }
}

int64_t int_at(const json& obj, const char* key, const std::string& path, bool required = true, int64_t dflt = 0) {
  if (!obj.contains(key)) {
    if (required) bad(path, std::string("missing \"") + key + "\"");
    return dflt;
  }
  const json& j = obj[key];
  if (!j.is_number_integer()) bad(path + "/" + key, "expected an integer");
  return j.get<int64_t>();
}

}  // namespace

AuditReport evaluate_audit(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed audit document: ") + e.what());
  }
  if (!doc.is_object()) bad("", "audit document must be an object");
  if (!doc.contains("class") || !doc["class"].is_object()) bad("/class", "missing class object");
  const json& cls = doc["class"];
  if (!cls.contains("CC") || !cls.contains("KC")) bad("/class", "needs \"CC\" and \"KC\"");
  CurveClassData c{rational_at(cls["CC"], "/class/CC"), rational_at(cls["KC"], "/class/KC")};
  int64_t genus = int_at(doc, "genus", "", false, 0);
  if (genus < 0) bad("/genus", "must be >= 0");

  AuditReport rep;
  rep.lhs = virtual_genus(c);

  std::vector<int64_t> orders;
  std::vector<std::optional<OrbifoldPointRecord>> records;
  std::vector<AuditTerm> kterms;
  const json empty = json::array();
  const json& points = doc.contains("points") ? doc["points"] : empty;
  if (!points.is_array()) bad("/points", "expected an array");
  for (size_t i = 0; i < points.size(); ++i) {
    std::string path = "/points/" + std::to_string(i);
    const json& p = points[i];
    if (!p.is_object()) bad(path, "expected an object");
    std::string label = p.contains("label") && p["label"].is_string() ? p["label"].get<std::string>()
                                                                       : "z" + std::to_string(i);
    int64_t m = int_at(p, "order", path);
    if (m < 1) bad(path + "/order", "must be >= 1");
    orders.push_back(m);
    try {
      if (p.contains("group_order")) {
        kterms.push_back({"k_" + label + " (min at p0)", kz_min_at_p0(m, int_at(p, "group_order", path))});
        records.push_back(std::nullopt);
      } else if (p.contains("l")) {
        OrbifoldPointRecord r;
        r.m = m;
        r.l = int_at(p, "l", path);
        if (p.contains("lp") && !p["lp"].is_null()) r.lp = int_at(p, "lp", path);
        r.ambient = int_at(p, "ambient", path);
        kterms.push_back({"k_" + label, kz_lower_bound(r, r.ambient)});
        records.push_back(r);
      } else {
        records.push_back(std::nullopt);
      }
    } catch (const DomainError& e) {
      bad(path, e.what());
    }
  }
  rep.rhs.push_back({"orbifold genus", orbifold_genus(genus, orders)});
  for (auto& t : kterms) rep.rhs.push_back(t);

  const json& pairs = doc.contains("pairs") ? doc["pairs"] : empty;
  if (!pairs.is_array()) bad("/pairs", "expected an array");
  for (size_t i = 0; i < pairs.size(); ++i) {
    std::string path = "/pairs/" + std::to_string(i);
    const json& q = pairs[i];
    if (!q.is_array() || q.size() != 2 || !q[0].is_number_unsigned() || !q[1].is_number_unsigned())
      bad(path, "expected a pair of point indices");
    size_t a = q[0].get<size_t>(), b = q[1].get<size_t>();
    if (a >= records.size() || b >= records.size() || a == b) bad(path, "point index out of range");
    if (!records[a] || !records[b]) bad(path, "both points need winding data");
    if (records[a]->ambient != records[b]->ambient) bad(path, "points of a pair must share the ambient order");
    try {
      rep.rhs.push_back({"k_[" + std::to_string(a) + "," + std::to_string(b) + "]",
                         kpair_lower_bound(*records[a], *records[b], records[a]->ambient)});
    } catch (const DomainError& e) {
      bad(path, e.what());
    }
  }

  const json& terms = doc.contains("terms") ? doc["terms"] : empty;
  if (!terms.is_array()) bad("/terms", "expected an array");
  for (size_t i = 0; i < terms.size(); ++i) {
    std::string path = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object() || !t.contains("value")) bad(path, "expected {\"label\", \"value\"}");
    std::string label = t.contains("label") && t["label"].is_string() ? t["label"].get<std::string>() : "term";
    rep.rhs.push_back({label, rational_at(t["value"], path + "/value")});
  }

  std::vector<Rational> values;
  for (auto& t : rep.rhs) {
    values.push_back(t.value);
    rep.rhs_total += t.value;
  }
  rep.slack = adjunction_slack(rep.lhs, values);
  return rep;
}

}  // namespace ellsw
