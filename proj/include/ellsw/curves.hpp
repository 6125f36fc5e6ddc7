#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellsw/rational.hpp"

namespace ellsw {

// Local data of an orbifold point z_i of a curve: multiplicity order m,
// winding pair (l, l') of the local representative (w^l' ..., w^l), and the
// isotropy order n of the image point.  l' may be undefined.
struct OrbifoldPointRecord {
  int64_t m = 1;
  int64_t l = 1;
  std::optional<int64_t> lp;
  int64_t ambient = 1;
};

struct CurveClassData {
  Rational CC;  // C.C
  Rational KC;  // c1(K).C
};

// g(C) = (C.C + K.C)/2 + 1
Rational virtual_genus(const CurveClassData& c);
// g + sum (1 - 1/m_i)/2
Rational orbifold_genus(int64_t underlying_genus, const std::vector<int64_t>& point_orders);
// (|G|/m0 - 1)/(2 m0); DomainError unless m0 divides |G|
Rational kz_min_at_p0(int64_t point_order, int64_t group_order);
// ((l-1)(l'-1) + (n/m - 1) l l')/(2m).  With l' undefined only l = 1, m = n
// is allowed (value 0); anything else is a DomainError.
Rational kz_lower_bound(const OrbifoldPointRecord& r, int64_t n_ambient);
// (1/n)(n/m_i)(n/m_j) min(l_i l'_j, l_j l'_i), undefined l' counting as
// infinity; DomainError if both cross products are infinite.
Rational kpair_lower_bound(const OrbifoldPointRecord& a, const OrbifoldPointRecord& b, int64_t n_ambient);
// sum l_i/m_i
Rational intersection_with_c0(const std::vector<OrbifoldPointRecord>& records);
// lhs - sum rhs; negative means the configuration cannot exist
Rational adjunction_slack(const Rational& lhs, const std::vector<Rational>& rhs);
// 2d with d = c1(TX).[f] + 2 - 2g - sum (m_i1 + m_i2)/m_i; DomainError if d is
// not an integer.  weights are (m_i, m_i1, m_i2).
int64_t fredholm_index(const Rational& c1TX, int64_t underlying_genus,
                       const std::vector<std::array<int64_t, 3>>& weights);

// Adjunction audit of a curve configuration, read from a JSON document:
//   { "class": {"CC": "p/q", "KC": "p/q"}, "genus": 0,
//     "points": [ {"label": "z1", "order": 5, "l": 1, "lp": null, "ambient": 5},
//                 {"label": "p0", "order": 6, "group_order": 24}, ... ],
//     "pairs": [ [0, 1], ... ],
//     "terms": [ {"label": "...", "value": "1/2"} ] }
// Each point adds (1 - 1/order)/2 to the orbifold genus and, when local data
// is present, a k_z lower bound (or the p0 minimum when group_order is given).
struct AuditTerm {
  std::string label;
  Rational value;
};
struct AuditReport {
  Rational lhs;
  std::vector<AuditTerm> rhs;
  Rational rhs_total;
  Rational slack;
};
AuditReport evaluate_audit(const std::string& json_text);  // throws InputError / DomainError

}  // namespace ellsw
