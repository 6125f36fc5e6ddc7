// ellsw: command-line front end for the ellsw library.
//
//   ellsw group      --family DD --m 3 --n 2 [--json]
//   ellsw seifert    --family OO --m 5
//   ellsw swdim      --family II --m 7 | --sweep [--max-order 4000]
//   ellsw verify-rho --family DD --m 1 --n 3
//   ellsw audit      --input data/audit/member_dd_3_2.audit
//
// Exit codes: 0 ok, 1 usage or parameter error, 2 bad input document,
// 3 internal invariant violation (including closed-form mismatch or
// catalog drift).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ellsw/catalog.hpp"
#include "ellsw/curves.hpp"
#include "ellsw/errors.hpp"
#include "ellsw/serialize.hpp"

using namespace ellsw;

namespace {

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  bool json = false;
  bool sweep = false;
  int64_t max_order = 4000;
  std::string catalog;
  std::string input;
};

// Raised for failures that are reported but not thrown by the library
// (closed-form mismatch, catalog drift, a failed equivariance check).
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupSpec spec_from(const Options& o) {
  if (o.family.empty()) throw ParameterError("--family is required");
  if (o.m == 0) throw ParameterError("--m is required");
  GroupSpec s{parse_family(o.family), o.m, o.n};
  if (!s.dihedral() && o.n != 0) throw ParameterError("--n applies only to the DD and DC families");
  validate(s);
  return s;
}

void row(const std::string& k, const std::string& v) { std::printf("%-18s %s\n", k.c_str(), v.c_str()); }

std::string abelian_string(const std::vector<int64_t>& f) {
  if (f.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) s += (i ? " + Z" : "Z") + std::to_string(f[i]);
  return s;
}

void catalog_step(const Options& o, const CatalogRecord& r) {
  if (o.catalog.empty()) return;
  Catalog cat = Catalog::open(o.catalog);
  std::string detail;
  CatalogStatus st = cat.check_or_append(r, &detail);
  std::fprintf(stderr, "catalog %s: %s %s\n", o.catalog.c_str(), catalog_key(r.spec).c_str(),
               status_name(st).c_str());
  if (st == CatalogStatus::Drift) throw CheckFailed("catalog drift: " + detail);
}

int cmd_group(const Options& o) {
  GroupSpec s = spec_from(o);
  FiniteGroup G = build_group(s);
  GroupReport r = group_report(G);
  if (o.json) {
    std::cout << dump_line(to_json(r)) << '\n';
  } else {
    row("group", spec_label(s));
    row("order", std::to_string(r.order));
    row("scalar order", std::to_string(r.scalar_order));
    row("classes", std::to_string(r.class_count));
    row("abelianization", abelian_string(r.abelianization));
  }
  if (!o.catalog.empty()) catalog_step(o, compute_record(G, sw_dimension(G)));
  return 0;
}

int cmd_seifert(const Options& o) {
  GroupSpec s = spec_from(o);
  Json j = seifert_json(s);
  if (o.json) {
    std::cout << dump_line(j) << '\n';
  } else {
    SeifertInvariant inv = normalized_invariant(s);
    std::string legs;
    for (auto [a, b] : inv.legs) legs += (legs.empty() ? "" : " ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    row("spec", spec_label(s));
    row("e", euler_number(s).str());
    row("b", std::to_string(inv.b));
    row("legs", legs);
  }
  if (!o.catalog.empty()) catalog_step(o, compute_record(s));
  return 0;
}

void print_sw(const SWDimensionReport& r, int64_t closed) {
  row("spec", spec_label(r.spec));
  row("order", std::to_string(r.group_order));
  row("c1(E)^2", r.c1E_squared.str());
  row("-K.c1(E)", r.minus_K_dot_c1E.str());
  for (const auto& [k, v] : r.s_breakdown) row(k, v.str());
  row("sum chi", r.sum_chi.str());
  row("d(E)", std::to_string(r.d_E));
  row("closed form", std::to_string(closed) + (closed == r.d_E ? " PASS" : " FAIL"));
}

int cmd_swdim_single(const Options& o) {
  GroupSpec s = spec_from(o);
  FiniteGroup G = build_group(s);
  SWDimensionReport r = sw_dimension(G);
  int64_t closed = closed_form_d_E(s);
  if (o.json)
    std::cout << dump_line(to_json(r)) << '\n';
  else
    print_sw(r, closed);
  if (!o.catalog.empty()) catalog_step(o, compute_record(G, r));
  if (closed != r.d_E) throw CheckFailed("d(E) differs from the closed form for " + spec_label(s));
  return 0;
}

int cmd_swdim_sweep(const Options& o) {
  if (!o.family.empty() || o.m != 0 || o.n != 0) throw ParameterError("--sweep takes no --family/--m/--n");
  if (o.max_order < 1) throw ParameterError("--max-order must be positive");
  std::optional<Catalog> cat;
  if (!o.catalog.empty()) cat = Catalog::open(o.catalog);

  size_t count = 0, mismatches = 0, drift = 0, appended = 0, matched = 0;
  if (!o.json) std::printf("%-6s %5s %5s %7s %4s %6s %s\n", "family", "m", "n", "order", "dE", "closed", "status");
  for (const GroupSpec& s : enumerate_specs(o.max_order)) {
    FiniteGroup G = build_group(s);
    SWDimensionReport r = sw_dimension(G);
    int64_t closed = closed_form_d_E(s);
    bool pass = closed == r.d_E && r.d_E % 2 == 0 && r.d_E >= 2;
    ++count;
    if (!pass) ++mismatches;
    if (o.json) {
      Json j = to_json(r);
      j["closed_form_dE"] = closed;
      j["status"] = pass ? "PASS" : "FAIL";
      std::cout << dump_line(j) << '\n';
    } else {
      std::printf("%-6s %5d %5s %7lld %4lld %6lld %s\n", family_name(s.family).c_str(), s.m,
                  s.dihedral() ? std::to_string(s.n).c_str() : "-", (long long)r.group_order, (long long)r.d_E,
                  (long long)closed, pass ? "PASS" : "FAIL");
    }
    if (cat) {
      std::string detail;
      switch (cat->check_or_append(compute_record(G, r), &detail)) {
        case CatalogStatus::Appended: ++appended; break;
        case CatalogStatus::Matched: ++matched; break;
        case CatalogStatus::Drift:
          ++drift;
          std::fprintf(stderr, "catalog drift: %s\n", detail.c_str());
          break;
      }
    }
    std::fflush(stdout);
  }
  // the summary goes to stderr in JSON mode so stdout stays pure NDJSON
  FILE* sink = o.json ? stderr : stdout;
  std::fprintf(sink, "specs %zu, mismatches %zu\n", count, mismatches);
  if (cat) std::fprintf(stderr, "catalog %s: appended %zu, matched %zu, drift %zu\n", o.catalog.c_str(), appended, matched, drift);
  if (mismatches) throw CheckFailed(std::to_string(mismatches) + " specs disagree with the closed form");
  if (drift) throw CheckFailed(std::to_string(drift) + " catalog records drifted");
  return 0;
}

int cmd_verify_rho(const Options& o) {
  GroupSpec s = spec_from(o);
  EquivarianceReport rep = check_section_equivariance(s, {Rational(1), Rational(1)}, 2);
  if (o.json) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
      checks.push_back(Json{{"generator", c.name}, {"rho", root_string(c.rho)}, {"holds", c.holds}});
    Json vecs = Json::array();
    for (const auto& [a, b] : rep.vectors_tried) vecs.push_back({a.str(), b.str()});
    std::cout << dump_line(Json{{"spec", to_json(s)},
                                {"character", character_json(s)},
                                {"factors", rep.gamma_order},
                                {"vectors", vecs},
                                {"checks", checks},
                                {"result", rep.ok ? "PASS" : "FAIL"}})
              << '\n';
  } else {
    row("spec", spec_label(s));
    row("linear factors", std::to_string(rep.gamma_order));
    row("vectors tried", std::to_string(rep.vectors_tried.size()));
    for (size_t i = 0; i < rep.checks.size(); ++i) {
      const auto& c = rep.checks[i];
      std::string red = reduced_root_string(c.rho);
      std::string rhs = red == "1" ? "f(z)" : red == "-1" ? "-f(z)" : red + " f(z)";
      // the first generator is the scalar mu_2m I, with rho = mu_2m^|Gamma|
      std::string mu = i == 0 ? "mu_" + std::to_string(2 * s.m) + "^" + std::to_string(rep.gamma_order) + " f(z) = " : "";
      std::printf("f(%s z) = %s%s f(z) = %s  %s\n", c.name.c_str(), mu.c_str(), root_string(c.rho).c_str(),
                  rhs.c_str(), c.holds ? "holds" : "FAILS");
    }
    std::printf("%s\n", rep.ok ? "PASS" : "FAIL");
  }
  if (!rep.ok) throw CheckFailed("equivariance fails for " + spec_label(s));
  return 0;
}

int cmd_audit(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw InputError("cannot read " + o.input);
  std::stringstream ss;
  ss << in.rdbuf();
  AuditReport r;
  try {
    r = evaluate_audit(ss.str());
  } catch (const InputError& e) {
    throw InputError(o.input + ": " + e.what());
  }
  if (o.json) {
    std::cout << dump_line(to_json(r)) << '\n';
  } else {
    row("g(C)", r.lhs.str());
    for (const auto& t : r.rhs) row(t.label, t.value.str());
    row("total", r.rhs_total.str());
    row("slack", r.slack.str());
    row("verdict", r.slack < Rational(0) ? "infeasible" : "consistent");
  }
  return 0;
}

void spec_options(CLI::App* c, Options& o) {
  c->add_option("--family", o.family, "DD, DC, TT, TD, OO or II");
  c->add_option("--m", o.m, "parameter m");
  c->add_option("--n", o.n, "parameter n (DD, DC)");
  c->add_flag("--json", o.json, "machine-readable output");
}

void catalog_option(CLI::App* c, Options& o) {
  c->add_option("--catalog", o.catalog, "append-only record file")->envname("ELLSW_CATALOG");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of S^3/G for the finite free subgroups G of U(2)"};
  app.require_subcommand(1);
  Options o;

  auto* group = app.add_subcommand("group", "group order, scalars, classes, abelianization");
  spec_options(group, o);
  catalog_option(group, o);
  auto* seifert = app.add_subcommand("seifert", "normalized Seifert invariant of S^3/G");
  spec_options(seifert, o);
  catalog_option(seifert, o);
  auto* swdim = app.add_subcommand("swdim", "dimension d(E) of the Seiberg-Witten moduli space");
  spec_options(swdim, o);
  catalog_option(swdim, o);
  swdim->add_flag("--sweep", o.sweep, "every valid spec with |G| <= --max-order");
  swdim->add_option("--max-order", o.max_order, "sweep bound on |G|");
  auto* vrho = app.add_subcommand("verify-rho", "check f(gz) = rho(g) f(z) on the generators");
  spec_options(vrho, o);
  auto* audit = app.add_subcommand("audit", "adjunction audit of a curve configuration");
  audit->add_option("--input", o.input, "audit document (JSON)")->required();
  audit->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*group) return cmd_group(o);
    if (*seifert) return cmd_seifert(o);
    if (*swdim) return o.sweep ? cmd_swdim_sweep(o) : cmd_swdim_single(o);
    if (*vrho) return cmd_verify_rho(o);
    if (*audit) return cmd_audit(o);
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CheckFailed& e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 1;
}
