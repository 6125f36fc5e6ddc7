#include "ellsw/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ellsw/errors.hpp"

namespace ellsw {

Rational SeifertInvariant::euler() const {
  Rational e(b);
  for (auto [a, bi] : legs) e += Rational(bi, a);
  return e;
}

Rational euler_number(const GroupSpec& s) {
  validate(s);
  return Rational(4 * (int64_t)s.m * s.m, group_order(s));
}

namespace {

// Relation m = lead*b + c0 + sum coef_i * b_i over legs (a_i, b_i).
struct Relation {
  int64_t lead, c0;
  std::array<int, 3> a;
  std::array<int64_t, 3> coef;
};

Relation relation_for(const GroupSpec& s) {
  switch (s.family) {
    case Family::DD:
    case Family::DC:
      // m = (b+1)n + b3 with legs (2,1), (2,1), (n, b3)
      return {s.n, s.n, {2, 2, s.n}, {0, 0, 1}};
    case Family::TT:
    case Family::TD: return {6, 3, {2, 3, 3}, {0, 2, 2}};
    case Family::OO: return {12, 6, {2, 3, 4}, {0, 4, 3}};
    case Family::II: return {30, 15, {2, 3, 5}, {0, 10, 6}};
  }
  throw ParameterError("unknown family");
}

}  // namespace

SeifertInvariant normalized_invariant(const GroupSpec& s) {
  validate(s);
  Relation r = relation_for(s);
  std::vector<SeifertInvariant> found;
  auto admissible = [](int a) {
    std::vector<int> v;
    for (int b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) v.push_back(b);
    return v;
  };
  for (int b1 : admissible(r.a[0]))
    for (int b2 : admissible(r.a[1]))
      for (int b3 : admissible(r.a[2])) {
        int64_t rest = s.m - r.c0 - r.coef[0] * b1 - r.coef[1] * b2 - r.coef[2] * b3;
        if (rest % r.lead != 0) continue;
        SeifertInvariant inv;
        inv.b = rest / r.lead;
        inv.legs = {{{r.a[0], b1}, {r.a[1], b2}, {r.a[2], b3}}};
        std::sort(inv.legs.begin(), inv.legs.end());
        if (std::find(found.begin(), found.end(), inv) == found.end()) found.push_back(inv);
      }
  if (found.size() != 1)
    throw InternalError(spec_label(s) + ": Seifert relation has " + std::to_string(found.size()) +
                        " normalized solutions");
  if (found[0].euler() != euler_number(s))
    throw InternalError(spec_label(s) + ": Seifert invariant disagrees with e = 4m^2/|G|");
  return found[0];
}

std::array<std::pair<int, int>, 3> singular_point_types(const GroupSpec& s) { return normalized_invariant(s).legs; }

}  // namespace ellsw
