#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellsw/groups.hpp"

namespace ellsw {

// zeta_N^k
struct RootValue {
  int64_t k = 0;
  int N = 1;
};

// Extends generator values multiplicatively over the whole group by a
// breadth-first walk of the Cayley graph, checking every edge.  Throws
// CharacterError naming two words with different values on a conflict, or
// when the assigned elements do not generate.  `names` label the assigned
// elements in witness words (default s0, s1, ...).
Character extend_character(const FiniteGroup& G, const std::vector<std::pair<int, RootValue>>& assignments,
                           const std::vector<std::string>& names = {});

// Generator names and values of rho for a spec, aligned with spec_generators:
// DD h, x, y; DC h^2, hx, y; TT/OO/II h, x, y; TD h^3, x, hy.
std::vector<std::string> rho_generator_names(const GroupSpec& s);
std::vector<RootValue> rho_generator_values(const GroupSpec& s);

// The character of the orbifold line bundle at the cone point.
Character rho(const FiniteGroup& G);  // G from build_group
Character rho(const GroupSpec& s);

// Sparse polynomial in z1, z2 with exact cyclotomic coefficients.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;  // (deg z1, deg z2)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const BigCyclotomic& c);
  static BivariatePolynomial linear(const CyclotomicNumber& a, const CyclotomicNumber& b);  // a z1 + b z2

  const std::map<Key, BigCyclotomic>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;

  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial scaled(const BigCyclotomic& s) const;
  // P(g z) with (gz)_1 = g11 z1 + g12 z2, (gz)_2 = g21 z1 + g22 z2
  BivariatePolynomial substitute(const UnitaryElement& g) const;
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);
  std::string str() const;

 private:
  void put(const Key& k, BigCyclotomic v);
  std::map<Key, BigCyclotomic> c_;
};

struct GeneratorCheck {
  std::string name;
  RootValue rho;
  bool holds = false;
};

struct EquivarianceReport {
  GroupSpec spec;
  int gamma_order = 0;  // number of linear factors of f
  std::vector<std::pair<Rational, Rational>> vectors_tried;
  std::vector<GeneratorCheck> checks;  // for the first vector
  bool ok = false;
};

// f = prod over coset representatives g^ of Gamma = G/scalars of the linear
// forms f_{u g^}(z) = (u g^) . z; checks f(g z) = rho(g) f(z) for each
// generator as an exact polynomial identity.  f(g z) is expanded as the
// product of the substituted factors.  `trials` extra seeded random vectors
// are checked after u.  Throws InputError for a degenerate u.
EquivarianceReport check_section_equivariance(const GroupSpec& s, std::pair<Rational, Rational> u, int trials = 0,
                                              uint64_t seed = 1);
bool verify_section_equivariance(const GroupSpec& s, std::pair<Rational, Rational> u, int trials = 0);

// Lowest-index element of each coset gZ (Z = scalar subgroup, generator 0).
std::vector<int> coset_representatives(const FiniteGroup& G);
// coset id of every element
std::vector<int> scalar_coset_ids(const FiniteGroup& G);

}  // namespace ellsw
