#pragma once
#include <array>
#include <utility>

#include "ellsw/groups.hpp"
#include "ellsw/rational.hpp"

namespace ellsw {

struct SeifertInvariant {
  int64_t b = 0;
  std::array<std::pair<int, int>, 3> legs{};  // (a_i, b_i), 0 < b_i < a_i

  Rational euler() const;  // b + sum b_i/a_i
  friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
};

// e = 4m^2/|G|
Rational euler_number(const GroupSpec& s);

// Solves the family's linear relation for (b, b_1, b_2, b_3) by scanning the
// admissible leg grid; exactly one invariant must result.  Legs are ordered
// by a_i, then b_i.
SeifertInvariant normalized_invariant(const GroupSpec& s);

// Legs of normalized_invariant (types of the orbifold points p1, p2, p3).
std::array<std::pair<int, int>, 3> singular_point_types(const GroupSpec& s);

}  // namespace ellsw
