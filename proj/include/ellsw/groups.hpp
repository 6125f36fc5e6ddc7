#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellsw/cyclo.hpp"

namespace ellsw {

// The six Brieskorn families without quasi-reflections, in the order
// <Z2m,Z2m;Dn,Dn>, <Z4m,Z2m;Dn,C2n>, <Z2m,Z2m;T,T>, <Z6m,Z2m;T,D2>,
// <Z2m,Z2m;O,O>, <Z2m,Z2m;I,I>.
enum class Family { DD, DC, TT, TD, OO, II };

struct GroupSpec {
  Family family = Family::DD;
  int m = 1;
  int n = 0;  // dihedral families only

  bool dihedral() const { return family == Family::DD || family == Family::DC; }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws ParameterError
std::string spec_label(const GroupSpec& s);   // "DD m=3 n=2"

// Throws ParameterError naming the violated constraint.
void validate(const GroupSpec& s);
bool is_valid(const GroupSpec& s);
// |G|: 4mn, 4mn, 24m, 24m, 48m, 120m.
int64_t group_order(const GroupSpec& s);
// Order of Gamma = G / scalars: 2n, 2n, 12, 12, 24, 60.
int gamma_order(const GroupSpec& s);
// N such that every entry and every eigenvalue lies in Q(zeta_N).
int ambient_order(const GroupSpec& s);
// All valid specs with |G| <= max_order, by family then m then n.
std::vector<GroupSpec> enumerate_specs(int64_t max_order);

// 2x2 matrix over a common cyclotomic field, row-major (a b; c d).
struct UnitaryElement {
  std::array<CyclotomicNumber, 4> e;

  static UnitaryElement identity(int N);
  static UnitaryElement scalar(int64_t k, int N);          // zeta_N^k I
  static UnitaryElement diagonal(int64_t k1, int64_t k2, int N);
  // a + bi + cj + dk  ->  [[a+bi, c+di], [-c+di, a-bi]]
  static UnitaryElement quaternion(const CyclotomicNumber& a, const CyclotomicNumber& b, const CyclotomicNumber& c,
                                   const CyclotomicNumber& d);

  int order() const { return e[0].order(); }
  CyclotomicNumber trace() const { return e[0] + e[3]; }
  CyclotomicNumber det() const;
  UnitaryElement adjoint() const;  // conjugate transpose = inverse for unitary g
  UnitaryElement embed(int N) const;
  bool is_scalar() const;
  bool is_identity() const;
  bool is_unitary() const;
  size_t hash() const;
  std::string str() const;

  friend UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b);
  friend bool operator==(const UnitaryElement& a, const UnitaryElement& b) { return a.e == b.e; }
};

// Eigenvalues as exponents of zeta_N, j1 <= j2.
struct EigenExponents {
  int N = 1;
  int j1 = 0, j2 = 0;
};
EigenExponents eigen_exponents(const UnitaryElement& g);
std::pair<CyclotomicNumber, CyclotomicNumber> eigen_angles(const UnitaryElement& g);
// Multiplicative order, from the eigenvalues (elements are diagonalizable).
int64_t element_order(const UnitaryElement& g);
int64_t root_order(int64_t j, int64_t N);  // order of zeta_N^j

// A closed set of unitary elements with a hash index and right
// multiplication tables for its generators.  Immutable once built.
class FiniteGroup {
 public:
  // Breadth-first closure; throws InternalError past max_order elements.
  static FiniteGroup generate(const std::vector<UnitaryElement>& gens, int64_t max_order);

  size_t order() const { return elems_.size(); }
  int ambient() const { return N_; }
  int identity_index() const { return 0; }
  const UnitaryElement& element(size_t i) const { return elems_[i]; }
  const std::vector<UnitaryElement>& elements() const { return elems_; }
  const std::vector<UnitaryElement>& generators() const { return gens_; }
  // right_table(k)[i] = index of element(i) * generator(k)
  const std::vector<int32_t>& right_table(size_t k) const { return right_[k]; }
  // BFS parent: element(i) = element(parent(i).first) * generator(parent(i).second)
  std::pair<int32_t, int32_t> parent(size_t i) const { return parent_[i]; }

  std::optional<int> find(const UnitaryElement& g) const;
  int index_of(const UnitaryElement& g) const;  // throws InternalError if absent
  int mul(int i, int j) const;
  int inverse(int i) const;
  int power(int i, int64_t k) const;
  // Generator indices w with element(i) = gen[w0] gen[w1] ..., from the BFS tree.
  std::vector<int32_t> word(int i) const;
  // element(i) times the element spelled by w, by table lookups only
  int apply_word(int i, const std::vector<int32_t>& w) const;

  std::optional<GroupSpec> spec;  // set by build_group

 private:
  int insert(UnitaryElement g, size_t h);
  int N_ = 1;
  std::vector<UnitaryElement> elems_;
  std::vector<size_t> hashes_;
  std::vector<int32_t> slots_;
  std::vector<UnitaryElement> gens_;
  std::vector<std::vector<int32_t>> right_;
  std::vector<std::pair<int32_t, int32_t>> parent_;
};

enum class PolyhedralKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

// Standard generators x, y of a binary polyhedral group in Q(zeta_N):
// x^2 = y^k = (xy)^l = -1 with (k, l) = (n, 2), (3, 3), (4, 3), (5, 3).
// N must contain the natural field (4n-compatible, 4, 8, 20 respectively).
std::pair<UnitaryElement, UnitaryElement> polyhedral_generators(PolyhedralKind kind, int n, int N);
// Order k / 4n / 24 / 48 / 120; generators are (x, y) (just one for C_k).
FiniteGroup build_binary_polyhedral(PolyhedralKind kind, int n = 0);

// Generating set used for every spec: element 0 is always the scalar mu_2m I;
// DD/TT/OO/II {h, x, y}; DC {h^2, hx, y}; TD {h^3, x, hy}.
std::vector<UnitaryElement> spec_generators(const GroupSpec& s);
// Throws InternalError if the closure order or the free action is wrong.
FiniteGroup build_group(const GroupSpec& s, bool check_free = true);

bool verify_free_action(const FiniteGroup& g);
FiniteGroup scalar_subgroup(const FiniteGroup& g);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct AbelianInvariants {
  std::vector<int64_t> factors;  // d1 | d2 | ..., each > 1
  int64_t order() const;
};
AbelianInvariants invariant_factors_from_orders(const std::vector<int64_t>& element_orders);
AbelianInvariants abelianization(const FiniteGroup& g);
// size of the commutator subgroup computed alongside (for the |G| identity)
int64_t commutator_subgroup_order(const FiniteGroup& g);

// A homomorphism G -> roots of unity, value(i) = zeta_order^exps[i].
struct Character {
  int order = 1;
  std::vector<int32_t> exps;
  std::vector<int> generator_indices;  // elements the values were assigned on

  CyclotomicNumber value(size_t i) const { return root_of_unity(exps[i], order); }
  bool is_trivial_at(size_t i) const { return exps[i] == 0; }
};

Character det_character(const FiniteGroup& g);

}  // namespace ellsw
