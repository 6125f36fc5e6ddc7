#pragma once
#include <string>
#include <vector>

#include "json.hpp"

#include "ellsw/bundle.hpp"
#include "ellsw/curves.hpp"
#include "ellsw/cyclo.hpp"
#include "ellsw/groups.hpp"
#include "ellsw/seifert.hpp"
#include "ellsw/swindex.hpp"

namespace ellsw {

// Keys keep insertion order so that dumps follow the documented schemas.
using Json = nlohmann::ordered_json;

// Rationals are always "p/q" strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // throws InputError

// { "order": N, "coeffs": ["p/q", ...] } on the power basis mod Phi_N
Json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j);  // throws InputError

// "zeta_N^k" with 0 <= k < N
std::string root_string(RootValue r);
// Same value in lowest terms: "1", "-1", or "zeta_d^j".
std::string reduced_root_string(RootValue r);

Json to_json(const GroupSpec& s);  // { "family", "m", "n" }

struct GroupReport {
  GroupSpec spec;
  int64_t order = 0;
  int64_t scalar_order = 0;
  int64_t class_count = 0;
  std::vector<int64_t> abelianization;
};
GroupReport group_report(const GroupSpec& s);
GroupReport group_report(const FiniteGroup& G);
// { "family", "m", "n", "order", "scalar_order", "class_count", "abelianization" }
Json to_json(const GroupReport& r);

// { "e": "p/q", "b": integer, "legs": [[a, b], ...] }
Json seifert_json(const GroupSpec& s);

// { "generators": [...], "values": ["zeta_N^k", ...] }, values aligned with
// the generator names of rho_generator_names.
Json character_json(const GroupSpec& s);

// { "spec", "c1E_sq", "minus_K_c1E", "S": {...}, "sum_chi", "dE" }.  The S
// keys are the breakdown labels (S0.. or Lambda1..).
Json to_json(const SWDimensionReport& r);

Json to_json(const AuditReport& r);

// Compact single-line dump used for every record and NDJSON line.
std::string dump_line(const Json& j);

}  // namespace ellsw
