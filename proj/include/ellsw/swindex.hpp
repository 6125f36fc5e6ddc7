#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellsw/bundle.hpp"
#include "ellsw/groups.hpp"
#include "ellsw/rational.hpp"

namespace ellsw {

// chi(g) = 2(rho(g) - 1) / ((1 - conj l1)(1 - conj l2)) for eigenvalues l1, l2
// of g.  Throws DomainError if an eigenvalue is 1.
CyclotomicNumber chi(const UnitaryElement& g, RootValue rho_value);
// Same, from eigen/character exponents in Q(zeta_N).
CyclotomicNumber chi_from_exponents(int64_t j1, int64_t j2, int64_t k, int N);

using LabeledSums = std::vector<std::pair<std::string, Rational>>;

// How sum_chi is evaluated.  PerElement adds chi over every element in
// Q(zeta_N) and checks that the total is rational; GaloisOrbit adds the trace
// of chi over one generator of each cyclic subgroup (sigma_a chi(g) = chi(g^a)).
enum class ChiMethod { PerElement, GaloisOrbit };

struct SWDimensionReport {
  GroupSpec spec;
  int64_t group_order = 0;
  Rational c1E_squared;      // |G| / 4m^2
  Rational minus_K_dot_c1E;  // (m+1) / m
  Rational sum_chi;          // sum over g != 1
  LabeledSums s_breakdown;   // S0..S3, or Lambda1..Lambda3 for DD/DC
  int64_t d_E = 0;
};

SWDimensionReport sw_dimension(const GroupSpec& s, ChiMethod method = ChiMethod::GaloisOrbit);
SWDimensionReport sw_dimension(const FiniteGroup& G, ChiMethod method = ChiMethod::GaloisOrbit);

// (1/|G|) sum_{g != 1} chi(g)
Rational singular_point_contribution(const GroupSpec& s);
LabeledSums s_breakdown(const GroupSpec& s);
// Enumerated value; throws InternalError unless it is an even integer >= 2.
int64_t d_E(const GroupSpec& s);

// Case formulas, no enumeration.
int64_t closed_form_d_E(const GroupSpec& s);
// Lambda1 and Lambda2 sums for DD/DC: 4n(m-n-1), 0 when m > n; and
// 4mn - 4n(r+1), 2mn((-1)^delta - 1) when m < n, n = delta*m + r.
std::pair<Rational, Rational> dihedral_closed_sums(const GroupSpec& s);

// Fixed-point sector data for the specialized index terms; rotations are
// roots of unity e^{i theta} = zeta_N^k.
struct SectorData {
  int dimension = 0;
  RootValue theta_E;
  RootValue theta1, theta2;  // dimension 0: normal rotations
  RootValue theta;           // dimension 1: normal rotation
  Rational c1E, c1TX, c1N;   // dimension 1: pairings with [X_(g)]
};

// 2(e^{i tE} - 1) / ((1 - e^{-i t1})(1 - e^{-i t2})) / isotropy_order
CyclotomicNumber sector0_term(const SectorData& d, int isotropy_order);
// 2 e^{i tE} c1E / (1 - e^{-i t}) + (e^{i tE} - 1) c1TX / (1 - e^{-i t})
//   - 2 e^{-i t} (e^{i tE} - 1) c1N / (1 - e^{-i t})^2
CyclotomicNumber sector1_term(const SectorData& d);
// c1(E)^2 - c1(E).c1(K)
Rational i2_term(const Rational& c1E_sq, const Rational& K_dot_c1E);

}  // namespace ellsw
