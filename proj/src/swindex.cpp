#include "ellsw/swindex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "ellsw/errors.hpp"

namespace ellsw {

CyclotomicNumber chi_from_exponents(int64_t j1, int64_t j2, int64_t k, int N) {
  j1 = mod_floor(j1, N), j2 = mod_floor(j2, N), k = mod_floor(k, N);
  if (j1 == 0 || j2 == 0) throw DomainError("chi: element has eigenvalue 1 (action not free)");
  if (k == 0) return CyclotomicNumber(Rational(0), N);
  // work in the smallest field containing all three roots
  int64_t g = std::gcd(std::gcd(std::gcd(j1, j2), k), (int64_t)N);
  int d = int(N / g);
  CyclotomicNumber num = (root_of_unity(k / g, d) - CyclotomicNumber(1)) * CyclotomicNumber(2);
  CyclotomicNumber v = num * CyclotomicNumber::inverse_one_minus_root(-j1 / g, d) *
                       CyclotomicNumber::inverse_one_minus_root(-j2 / g, d);
  return v.embed(N);
}

CyclotomicNumber chi(const UnitaryElement& g, RootValue rho_value) {
  auto e = eigen_exponents(g);
  int N = int(lcm64(e.N, rho_value.N));
  return chi_from_exponents(e.j1 * (N / e.N), e.j2 * (N / e.N), rho_value.k * (N / rho_value.N), N);
}

namespace {

struct Labels {
  std::vector<int8_t> of;  // -1 for the identity
  std::vector<std::string> names;
};

std::vector<int> powers_of(const FiniteGroup& G, int i) {  // g, g^2, ..., up to g^(d-1)
  std::vector<int> pw{i};
  for (int cur = G.mul(i, i); i != G.identity_index() && cur != G.identity_index(); cur = G.mul(cur, i))
    pw.push_back(cur);
  if (i == G.identity_index()) pw.clear();
  return pw;
}

Labels dihedral_labels(const FiniteGroup& G, const GroupSpec& s) {
  // H = <scalar, y> = {z y^l}; Lambda3 = {y^l : 1 <= l <= n-1},
  // Lambda1 = H \ ({1} u Lambda3), Lambda2 = G \ H.
  Labels L;
  L.names = {"Lambda1", "Lambda2", "Lambda3"};
  L.of.assign(G.order(), 1);
  int z = G.index_of(G.generators()[0]), y = G.index_of(G.generators()[2]);
  std::vector<int> zs = powers_of(G, z), ys = powers_of(G, y);
  zs.push_back(G.identity_index());
  ys.insert(ys.begin(), G.identity_index());
  for (int a : zs)
    for (int b : ys) L.of[G.mul(a, b)] = 0;
  for (int l = 1; l <= s.n - 1; ++l) L.of[ys[l]] = 2;
  L.of[G.identity_index()] = -1;
  return L;
}

Labels polyhedral_labels(const FiniteGroup& G) {
  // S0: nontrivial scalars; other elements by the largest order of a cyclic
  // subgroup of Gamma = G/scalars containing their image, decreasing.
  auto coset = scalar_coset_ids(G);
  auto reps = coset_representatives(G);
  const int c0 = coset[G.identity_index()];
  std::vector<int> maxcyc(reps.size(), 0);
  for (int r : reps) {
    if (coset[r] == c0) continue;
    std::vector<int> chain;
    for (int cur = r; coset[cur] != c0; cur = G.mul(cur, r)) chain.push_back(coset[cur]);
    int o = int(chain.size()) + 1;  // order of the image
    for (int c : chain) maxcyc[c] = std::max(maxcyc[c], o);
  }
  std::vector<int> values;
  for (size_t c = 0; c < reps.size(); ++c)
    if (int(c) != c0) values.push_back(maxcyc[c]);
  std::sort(values.rbegin(), values.rend());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  Labels L;
  L.names.push_back("S0");
  for (size_t j = 0; j < values.size(); ++j) L.names.push_back("S" + std::to_string(j + 1));
  L.of.resize(G.order());
  for (size_t i = 0; i < G.order(); ++i) {
    if (coset[i] == c0) {
      L.of[i] = 0;
    } else {
      auto pos = std::find(values.begin(), values.end(), maxcyc[coset[i]]) - values.begin();
      L.of[i] = int8_t(pos + 1);
    }
  }
  L.of[G.identity_index()] = -1;
  return L;
}

Labels element_labels(const FiniteGroup& G, const GroupSpec& s) {
  return s.dihedral() ? dihedral_labels(G, s) : polyhedral_labels(G);
}

// rho exponents rescaled to Q(zeta_N)
std::vector<int64_t> rho_exponents(const FiniteGroup& G, const Character& c) {
  const int N = G.ambient();
  if (N % c.order != 0) throw InternalError("rho takes values outside Q(zeta_N)");
  std::vector<int64_t> k(G.order());
  for (size_t i = 0; i < G.order(); ++i) k[i] = int64_t(c.exps[i]) * (N / c.order);
  return k;
}

EigenExponents eigen_in(const UnitaryElement& g, int N) {
  auto e = eigen_exponents(g);
  if (N % e.N != 0) throw InternalError("eigenvalues outside Q(zeta_N)");
  return {N, int(e.j1 * (N / e.N)), int(e.j2 * (N / e.N))};
}

std::vector<Rational> sums_per_element(const FiniteGroup& G, const Labels& L, const std::vector<int64_t>& k) {
  const int N = G.ambient();
  using Key = std::tuple<int, int, int64_t>;
  std::vector<std::map<Key, int64_t>> counts(L.names.size());
  for (size_t i = 0; i < G.order(); ++i) {
    if (L.of[i] < 0 || k[i] == 0) continue;  // identity; chi vanishes when rho(g) = 1
    auto e = eigen_in(G.element(i), N);
    ++counts[L.of[i]][{e.j1, e.j2, k[i]}];
  }
  std::map<Key, CyclotomicNumber> cache;
  std::vector<Rational> out;
  BigCyclotomic total = BigCyclotomic::zero(N);
  for (auto& bucket : counts) {
    BigCyclotomic acc = BigCyclotomic::zero(N);
    for (auto& [key, cnt] : bucket) {
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, chi_from_exponents(std::get<0>(key), std::get<1>(key), std::get<2>(key), N)).first;
      acc = acc + BigCyclotomic(it->second) * BigCyclotomic(CyclotomicNumber(Rational(cnt), N));
    }
    total = total + acc;
    CyclotomicNumber small = acc.to_small();
    if (!small.is_rational()) throw InternalError("partial chi sum is not rational: " + small.str());
    out.push_back(small.as_rational());
  }
  CyclotomicNumber t = total.to_small();
  if (!t.is_rational()) throw InternalError("sum of chi is not rational: " + t.str());
  return out;
}

std::vector<Rational> sums_by_orbit(const FiniteGroup& G, const Labels& L, const std::vector<int64_t>& k) {
  const int N = G.ambient();
  std::vector<Rational> out(L.names.size());
  std::vector<char> seen(G.order(), 0);
  for (size_t i = 0; i < G.order(); ++i) {
    if (seen[i] || int(i) == G.identity_index()) continue;
    auto pw = powers_of(G, int(i));
    const int d = int(pw.size()) + 1;
    for (int a = 1; a < d; ++a)
      if (std::gcd(a, d) == 1) seen[pw[a - 1]] = 1;
    // Every generator g^a of <g> must carry the Galois image of g's data:
    // rho(g^a) = rho(g)^a and eigenvalues l1^a, l2^a.  Then
    // chi(g^a) = sigma_a chi(g) element by element, and the orbit sum is the
    // trace of chi(g).
    for (int a = 1; a < d; ++a)
      if (std::gcd(a, d) == 1 && k[pw[a - 1]] != mod_floor(a * k[i], N))
        throw InternalError("rho is not compatible with powers");
    if (k[i] == 0) continue;
    auto e = eigen_in(G.element(i), N);
    for (int a = 2; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      int idx = pw[a - 1];
      if (L.of[idx] != L.of[i]) throw InternalError("label not constant on a Galois orbit with chi != 0");
      auto ea = eigen_in(G.element(idx), N);
      int64_t p1 = mod_floor(int64_t(a) * e.j1, N), p2 = mod_floor(int64_t(a) * e.j2, N);
      if (p1 > p2) std::swap(p1, p2);
      if (ea.j1 != p1 || ea.j2 != p2) throw InternalError("eigenvalues of a power are not powers of eigenvalues");
    }
    if ((int64_t(e.j1) * d) % N || (int64_t(e.j2) * d) % N || (k[i] * d) % N)
      throw InternalError("element values outside Q(zeta_d)");
    int64_t s = N / d;
    CyclotomicNumber v = chi_from_exponents(e.j1 / s, e.j2 / s, k[i] / s, d);
    out[L.of[i]] += v.trace();
  }
  return out;
}

}  // namespace

SWDimensionReport sw_dimension(const FiniteGroup& G, ChiMethod method) {
  if (!G.spec) throw InternalError("sw_dimension needs a group built from a spec");
  const GroupSpec& s = *G.spec;
  Labels L = element_labels(G, s);
  auto k = rho_exponents(G, rho(G));
  std::vector<Rational> sums = method == ChiMethod::PerElement ? sums_per_element(G, L, k) : sums_by_orbit(G, L, k);

  SWDimensionReport r;
  r.spec = s;
  r.group_order = int64_t(G.order());
  r.c1E_squared = Rational(r.group_order, 4 * int64_t(s.m) * s.m);
  r.minus_K_dot_c1E = Rational(s.m + 1, s.m);
  for (size_t j = 0; j < sums.size(); ++j) {
    r.s_breakdown.push_back({L.names[j], sums[j]});
    r.sum_chi += sums[j];
  }
  Rational d = r.c1E_squared + r.minus_K_dot_c1E + r.sum_chi / Rational(r.group_order);
  if (d.den() != 1 || d.num() % 2 != 0 || d.num() < 2)
    throw InternalError(spec_label(s) + ": d(E) = " + d.str() + " is not an even integer >= 2");
  r.d_E = d.num();
  return r;
}

SWDimensionReport sw_dimension(const GroupSpec& s, ChiMethod method) { return sw_dimension(build_group(s), method); }

Rational singular_point_contribution(const GroupSpec& s) {
  auto r = sw_dimension(s, ChiMethod::PerElement);
  return r.sum_chi / Rational(r.group_order);
}

LabeledSums s_breakdown(const GroupSpec& s) { return sw_dimension(s, ChiMethod::PerElement).s_breakdown; }

int64_t d_E(const GroupSpec& s) { return sw_dimension(s).d_E; }

int64_t closed_form_d_E(const GroupSpec& s) {
  validate(s);
  switch (s.family) {
    case Family::DD:
    case Family::DC: {
      if (s.m > s.n) return 2;
      int64_t delta = s.n / s.m;
      return delta + 2 + (delta % 2 == 0 ? 0 : -1);
    }
    case Family::TT:
    case Family::TD: return s.m == 1 ? 8 : 2;
    case Family::OO: return s.m == 1 ? 14 : 2;
    case Family::II: return s.m == 1 ? 32 : s.m == 7 ? 4 : 2;
  }
  throw ParameterError("unknown family");
}

std::pair<Rational, Rational> dihedral_closed_sums(const GroupSpec& s) {
  validate(s);
  if (!s.dihedral()) throw ParameterError(family_name(s.family) + ": Lambda sums are defined for DD and DC only");
  const int64_t m = s.m, n = s.n;
  if (m > n) return {Rational(4 * n * (m - n - 1)), Rational(0)};
  int64_t delta = n / m, r = n % m;
  int64_t sign = delta % 2 == 0 ? 1 : -1;
  return {Rational(4 * m * n - 4 * n * (r + 1)), Rational(2 * m * n * (sign - 1))};
}

// ---------------------------------------------------------------------------
// Specialized index terms

namespace {

int common_order(std::initializer_list<RootValue> rs) {
  int64_t L = 1;
  for (auto& r : rs) {
    if (r.N <= 0) throw DomainError("root of unity order must be positive");
    L = lcm64(L, r.N);
  }
  return int(L);
}

CyclotomicNumber at(RootValue r, int L) { return root_of_unity(r.k * (L / r.N), L); }

bool trivial(RootValue r) { return mod_floor(r.k, r.N) == 0; }

}  // namespace

CyclotomicNumber sector0_term(const SectorData& d, int isotropy_order) {
  if (isotropy_order < 1) throw DomainError("isotropy order must be positive");
  if (trivial(d.theta1) || trivial(d.theta2)) throw DomainError("sector0_term: zero normal rotation");
  int L = common_order({d.theta_E, d.theta1, d.theta2});
  CyclotomicNumber one(1);
  CyclotomicNumber v = (at(d.theta_E, L) - one) * CyclotomicNumber(2) / ((one - at(d.theta1, L).conjugate()) *
                                                                        (one - at(d.theta2, L).conjugate()));
  return v * CyclotomicNumber(Rational(1, isotropy_order));
}

CyclotomicNumber sector1_term(const SectorData& d) {
  if (trivial(d.theta)) throw DomainError("sector1_term: zero normal rotation");
  int L = common_order({d.theta_E, d.theta});
  CyclotomicNumber one(1), two(2);
  CyclotomicNumber eE = at(d.theta_E, L), em = at(d.theta, L).conjugate();
  CyclotomicNumber inv = (one - em).invert();
  return two * eE * CyclotomicNumber(d.c1E) * inv + (eE - one) * CyclotomicNumber(d.c1TX) * inv -
         two * em * (eE - one) * CyclotomicNumber(d.c1N) * inv * inv;
}

Rational i2_term(const Rational& c1E_sq, const Rational& K_dot_c1E) { return c1E_sq - K_dot_c1E; }

}  // namespace ellsw
