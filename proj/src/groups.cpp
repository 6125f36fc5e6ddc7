#include "ellsw/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "ellsw/errors.hpp"

namespace ellsw {

// ---------------------------------------------------------------------------
// specs

std::string family_name(Family f) {
  switch (f) {
    case Family::DD: return "DD";
    case Family::DC: return "DC";
    case Family::TT: return "TT";
    case Family::TD: return "TD";
    case Family::OO: return "OO";
    case Family::II: return "II";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::DD, Family::DC, Family::TT, Family::TD, Family::OO, Family::II})
    if (family_name(f) == s) return f;
  throw ParameterError("unknown family '" + s + "' (expected one of DD, DC, TT, TD, OO, II)");
}

std::string spec_label(const GroupSpec& s) {
  std::string r = family_name(s.family) + " m=" + std::to_string(s.m);
  if (s.dihedral()) r += " n=" + std::to_string(s.n);
  return r;
}

void validate(const GroupSpec& s) {
  auto fail = [&](const std::string& why) { throw ParameterError(family_name(s.family) + ": " + why); };
  if (s.m < 1) fail("m must be a positive integer");
  switch (s.family) {
    case Family::DD:
      if (s.m % 2 == 0) fail("m must be odd for DD");
      if (s.n < 2) fail("n must be at least 2");
      if (std::gcd(s.m, s.n) != 1) fail("m and n must be relatively prime");
      break;
    case Family::DC:
      if (s.m % 2 != 0) fail("m must be even for DC");
      if (s.n < 2) fail("n must be at least 2");
      if (std::gcd(s.m, s.n) != 1) fail("m and n must be relatively prime");
      break;
    case Family::TT:
      if (std::gcd(s.m, 6) != 1) fail("m must be prime to 6");
      break;
    case Family::TD:
      if (s.m % 2 == 0 || s.m % 3 != 0) fail("m must be odd and divisible by 3");
      break;
    case Family::OO:
      if (std::gcd(s.m, 6) != 1) fail("m must be prime to 6");
      break;
    case Family::II:
      if (std::gcd(s.m, 30) != 1) fail("m must be prime to 30");
      break;
  }
  if (!s.dihedral() && s.n != 0) fail("n is only meaningful for the dihedral families");
}

bool is_valid(const GroupSpec& s) {
  try {
    validate(s);
    return true;
  } catch (const ParameterError&) {
    return false;
  }
}

int64_t group_order(const GroupSpec& s) {
  const int64_t m = s.m;
  switch (s.family) {
    case Family::DD:
    case Family::DC: return 4 * m * s.n;
    case Family::TT:
    case Family::TD: return 24 * m;
    case Family::OO: return 48 * m;
    case Family::II: return 120 * m;
  }
  return 0;
}

int gamma_order(const GroupSpec& s) { return int(group_order(s) / (2 * s.m)); }

int ambient_order(const GroupSpec& s) {
  const int64_t m = s.m;
  switch (s.family) {
    case Family::DD: return (int)lcm64(lcm64(2 * m, 2 * s.n), 4);
    case Family::DC: return (int)lcm64(lcm64(4 * m, 2 * s.n), 4);
    case Family::TT: return (int)lcm64(2 * m, 12);
    case Family::TD: return (int)lcm64(6 * m, 12);
    case Family::OO: return (int)lcm64(2 * m, 24);
    case Family::II: return (int)lcm64(2 * m, 60);
  }
  return 1;
}

std::vector<GroupSpec> enumerate_specs(int64_t max_order) {
  std::vector<GroupSpec> out;
  for (Family f : {Family::DD, Family::DC, Family::TT, Family::TD, Family::OO, Family::II}) {
    for (int m = 1;; ++m) {
      GroupSpec probe{f, m, (f == Family::DD || f == Family::DC) ? 2 : 0};
      if (group_order(probe) > max_order) break;
      if (probe.dihedral()) {
        for (int n = 2;; ++n) {
          GroupSpec s{f, m, n};
          if (group_order(s) > max_order) break;
          if (is_valid(s)) out.push_back(s);
        }
      } else if (is_valid(probe)) {
        out.push_back(probe);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// UnitaryElement

UnitaryElement UnitaryElement::identity(int N) { return scalar(0, N); }

UnitaryElement UnitaryElement::scalar(int64_t k, int N) { return diagonal(k, k, N); }

UnitaryElement UnitaryElement::diagonal(int64_t k1, int64_t k2, int N) {
  CyclotomicNumber z(Rational(0), N);
  return {{root_of_unity(k1, N), z, z, root_of_unity(k2, N)}};
}

UnitaryElement UnitaryElement::quaternion(const CyclotomicNumber& a, const CyclotomicNumber& b,
                                          const CyclotomicNumber& c, const CyclotomicNumber& d) {
  int N = (int)lcm64(lcm64(lcm64(a.order(), b.order()), lcm64(c.order(), d.order())), 4);
  CyclotomicNumber i = root_of_unity(N / 4, N);
  CyclotomicNumber A = a.embed(N), B = b.embed(N), Cc = c.embed(N), D = d.embed(N);
  return {{A + B * i, Cc + D * i, -Cc + D * i, A - B * i}};
}

CyclotomicNumber UnitaryElement::det() const { return CyclotomicNumber::dot2(e[0], e[3], -e[1], e[2]); }

UnitaryElement UnitaryElement::adjoint() const {
  return {{e[0].conjugate(), e[2].conjugate(), e[1].conjugate(), e[3].conjugate()}};
}

UnitaryElement UnitaryElement::embed(int N) const { return {{e[0].embed(N), e[1].embed(N), e[2].embed(N), e[3].embed(N)}}; }

bool UnitaryElement::is_scalar() const { return e[1].is_zero() && e[2].is_zero() && e[0] == e[3]; }

bool UnitaryElement::is_identity() const { return is_scalar() && e[0].is_one(); }

bool UnitaryElement::is_unitary() const { return (adjoint() * *this).is_identity(); }

size_t UnitaryElement::hash() const {
  size_t h = 0;
  for (const auto& x : e) h = h * 0x100000001b3ULL ^ x.hash();
  return h;
}

std::string UnitaryElement::str() const {
  return "[[" + e[0].str() + ", " + e[1].str() + "], [" + e[2].str() + ", " + e[3].str() + "]]";
}

UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b) {
  using C = CyclotomicNumber;
  return {{C::dot2(a.e[0], b.e[0], a.e[1], b.e[2]), C::dot2(a.e[0], b.e[1], a.e[1], b.e[3]),
           C::dot2(a.e[2], b.e[0], a.e[3], b.e[2]), C::dot2(a.e[2], b.e[1], a.e[3], b.e[3])}};
}

// ---------------------------------------------------------------------------
// eigenvalues

int64_t root_order(int64_t j, int64_t N) { return N / gcd64(mod_floor(j, N), N); }

static int locate_exponent(std::complex<double> z, int N) {
  double t = std::arg(z) * N / (2 * std::numbers::pi);
  return (int)mod_floor(std::llround(t), N);
}

EigenExponents eigen_exponents(const UnitaryElement& g) {
  const int N = g.order();
  CyclotomicNumber tr = g.trace(), dt = g.det();
  auto verify = [&](int j1, int j2) {
    return root_of_unity((int64_t)j1 + j2, N) == dt && root_of_unity(j1, N) + root_of_unity(j2, N) == tr;
  };
  // floating point only proposes candidates; the exact check decides
  std::complex<double> t = tr.to_complex(), d = dt.to_complex();
  std::complex<double> s = std::sqrt(t * t - 4.0 * d);
  int j1 = locate_exponent((t + s) / 2.0, N), j2 = locate_exponent((t - s) / 2.0, N);
  if (j1 > j2) std::swap(j1, j2);
  if (verify(j1, j2)) return {N, j1, j2};

  std::vector<int> roots;
  for (int j = 0; j < N; ++j) {
    CyclotomicNumber z = root_of_unity(j, N);
    if ((z * z - tr * z + dt).is_zero()) roots.push_back(j);
  }
  for (int a : roots)
    for (int b : roots)
      if (a <= b && verify(a, b)) return {N, a, b};
  throw InternalError("no root-of-unity eigenvalues for " + g.str());
}

std::pair<CyclotomicNumber, CyclotomicNumber> eigen_angles(const UnitaryElement& g) {
  auto e = eigen_exponents(g);
  return {root_of_unity(e.j1, e.N), root_of_unity(e.j2, e.N)};
}

int64_t element_order(const UnitaryElement& g) {
  auto e = eigen_exponents(g);
  return lcm64(root_order(e.j1, e.N), root_order(e.j2, e.N));
}

// exponent j with zeta_N^j == z, z a root of unity
static int root_exponent(const CyclotomicNumber& z, int N) {
  int j = locate_exponent(z.to_complex(), N);
  if (root_of_unity(j, N) == z) return j;
  for (int k = 0; k < N; ++k)
    if (root_of_unity(k, N) == z) return k;
  throw InternalError("not an N-th root of unity: " + z.str());
}

// ---------------------------------------------------------------------------
// FiniteGroup

int FiniteGroup::insert(UnitaryElement g, size_t h) {
  if (slots_.size() < 2 * (elems_.size() + 1)) {
    size_t cap = std::max<size_t>(64, slots_.size() * 2);
    while (cap < 4 * (elems_.size() + 1)) cap *= 2;
    slots_.assign(cap, -1);
    for (size_t i = 0; i < elems_.size(); ++i) {
      size_t p = hashes_[i] & (cap - 1);
      while (slots_[p] >= 0) p = (p + 1) & (cap - 1);
      slots_[p] = (int32_t)i;
    }
  }
  size_t mask = slots_.size() - 1, p = h & mask;
  while (slots_[p] >= 0) p = (p + 1) & mask;
  int idx = (int)elems_.size();
  slots_[p] = idx;
  elems_.push_back(std::move(g));
  hashes_.push_back(h);
  return idx;
}

std::optional<int> FiniteGroup::find(const UnitaryElement& g) const {
  if (slots_.empty()) return std::nullopt;
  size_t h = g.hash(), mask = slots_.size() - 1, p = h & mask;
  while (slots_[p] >= 0) {
    int i = slots_[p];
    if (hashes_[i] == h && elems_[i] == g) return i;
    p = (p + 1) & mask;
  }
  return std::nullopt;
}

int FiniteGroup::index_of(const UnitaryElement& g) const {
  auto i = find(g);
  if (!i) throw InternalError("element not in group: " + g.str());
  return *i;
}

FiniteGroup FiniteGroup::generate(const std::vector<UnitaryElement>& gens_in, int64_t max_order) {
  FiniteGroup G;
  int N = 1;
  for (const auto& g : gens_in)
    for (const auto& x : g.e) N = (int)lcm64(N, x.order());
  for (const auto& g : gens_in) G.gens_.push_back(g.embed(N));
  G.N_ = N;
  G.insert(UnitaryElement::identity(N), UnitaryElement::identity(N).hash());
  G.parent_.push_back({-1, -1});
  G.right_.assign(G.gens_.size(), {});
  for (size_t i = 0; i < G.elems_.size(); ++i) {
    for (size_t k = 0; k < G.gens_.size(); ++k) {
      UnitaryElement p = G.elems_[i] * G.gens_[k];
      size_t h = p.hash();
      auto f = [&]() -> int {
        size_t mask = G.slots_.size() - 1, q = h & mask;
        while (G.slots_[q] >= 0) {
          int j = G.slots_[q];
          if (G.hashes_[j] == h && G.elems_[j] == p) return j;
          q = (q + 1) & mask;
        }
        return -1;
      }();
      if (f < 0) {
        if ((int64_t)G.elems_.size() >= max_order)
          throw InternalError("closure exceeded the order bound " + std::to_string(max_order));
        f = G.insert(std::move(p), h);
        G.parent_.push_back({(int32_t)i, (int32_t)k});
      }
      G.right_[k].push_back(f);
    }
  }
  return G;
}

int FiniteGroup::mul(int i, int j) const { return index_of(elems_[i] * elems_[j]); }

int FiniteGroup::inverse(int i) const { return index_of(elems_[i].adjoint()); }

std::vector<int32_t> FiniteGroup::word(int i) const {
  std::vector<int32_t> w;
  while (i != identity_index()) {
    w.push_back(parent_[i].second);
    i = parent_[i].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int FiniteGroup::apply_word(int i, const std::vector<int32_t>& w) const {
  for (int32_t k : w) i = right_[k][i];
  return i;
}

int FiniteGroup::power(int i, int64_t k) const {
  int64_t n = (int64_t)order();
  k = mod_floor(k, n);  // g^|G| = 1
  int r = identity_index(), b = i;
  while (k) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// binary polyhedral groups

namespace {

using C = CyclotomicNumber;

C half(const C& x) { return x * C(Rational(1, 2)); }

std::vector<UnitaryElement> quaternion_generators(PolyhedralKind kind) {
  C zero(0), one(1);
  UnitaryElement qi = UnitaryElement::quaternion(zero, one, zero, zero);
  UnitaryElement omega = UnitaryElement::quaternion(half(one), half(one), half(one), half(one));
  switch (kind) {
    case PolyhedralKind::Tetrahedral: return {qi, omega};
    case PolyhedralKind::Octahedral: {
      // (1 + i)/sqrt2 with sqrt2 = zeta8 + zeta8^-1
      C r = half(root_of_unity(1, 8) + root_of_unity(-1, 8));
      return {qi, omega, UnitaryElement::quaternion(r, r, C(Rational(0), 8), C(Rational(0), 8))};
    }
    case PolyhedralKind::Icosahedral: {
      // sqrt5 = 1 + 2(zeta5 + zeta5^-1), phi = (1 + sqrt5)/2, 1/phi = phi - 1
      C sqrt5 = C(1) + C(2) * (root_of_unity(1, 5) + root_of_unity(-1, 5));
      C phi = half(C(1) + sqrt5);
      C phinv = phi - C(1);
      return {omega, UnitaryElement::quaternion(half(phi), half(phinv), half(one), zero)};
    }
    default: break;
  }
  throw ParameterError("no quaternion generators for this kind");
}

struct StandardPair {
  UnitaryElement x, y;
};

// First (x, y) in closure order with x^2 = y^k = (xy)^3 = -1 that generates.
StandardPair find_standard_pair(PolyhedralKind kind) {
  int k = kind == PolyhedralKind::Tetrahedral ? 3 : kind == PolyhedralKind::Octahedral ? 4 : 5;
  int64_t expect = kind == PolyhedralKind::Tetrahedral ? 24 : kind == PolyhedralKind::Octahedral ? 48 : 120;
  FiniteGroup G = FiniteGroup::generate(quaternion_generators(kind), 2 * expect);
  if ((int64_t)G.order() != expect) throw InternalError("binary polyhedral closure has the wrong order");
  int M = G.ambient();
  int minus = G.index_of(UnitaryElement::scalar(M / 2, M));
  for (size_t y = 0; y < G.order(); ++y) {
    if ((int)y == minus || G.power((int)y, k) != minus) continue;
    for (size_t x = 0; x < G.order(); ++x) {
      if (G.mul((int)x, (int)x) != minus) continue;
      int xy = G.mul((int)x, (int)y);
      if (G.power(xy, 3) != minus) continue;
      FiniteGroup H = FiniteGroup::generate({G.element(x), G.element(y)}, 2 * expect);
      if ((int64_t)H.order() == expect) return {G.element(x), G.element(y)};
    }
  }
  throw InternalError("no standard generating pair found");
}

const StandardPair& standard_pair(PolyhedralKind kind) {
  static const StandardPair t = find_standard_pair(PolyhedralKind::Tetrahedral);
  static const StandardPair o = find_standard_pair(PolyhedralKind::Octahedral);
  static const StandardPair i = find_standard_pair(PolyhedralKind::Icosahedral);
  switch (kind) {
    case PolyhedralKind::Tetrahedral: return t;
    case PolyhedralKind::Octahedral: return o;
    default: return i;
  }
}

}  // namespace

std::pair<UnitaryElement, UnitaryElement> polyhedral_generators(PolyhedralKind kind, int n, int N) {
  switch (kind) {
    case PolyhedralKind::Cyclic: {
      if (n < 1 || N % n) throw ParameterError("cyclic group needs k >= 1 dividing the field order");
      auto g = UnitaryElement::diagonal(N / n, -(N / n), N);
      return {g, g};
    }
    case PolyhedralKind::Dihedral: {
      if (n < 2) throw ParameterError("binary dihedral group needs n >= 2");
      if (N % (2 * n) || N % 4) throw ParameterError("field order must be divisible by 2n and 4");
      C z(Rational(0), N), o(Rational(1), N);
      UnitaryElement x{{z, o, -o, z}};
      UnitaryElement y = UnitaryElement::diagonal(N / (2 * n), -(N / (2 * n)), N);
      return {x, y};
    }
    default: {
      const auto& p = standard_pair(kind);
      if (N % p.x.order()) throw ParameterError("field order incompatible with the polyhedral generators");
      return {p.x.embed(N), p.y.embed(N)};
    }
  }
}

FiniteGroup build_binary_polyhedral(PolyhedralKind kind, int n) {
  switch (kind) {
    case PolyhedralKind::Cyclic: {
      if (n < 1) throw ParameterError("cyclic group needs k >= 1");
      auto [g, _] = polyhedral_generators(kind, n, n);
      return FiniteGroup::generate({g}, 2 * n);
    }
    case PolyhedralKind::Dihedral: {
      if (n < 2) throw ParameterError("binary dihedral group needs n >= 2");
      auto [x, y] = polyhedral_generators(kind, n, (int)lcm64(2 * n, 4));
      FiniteGroup G = FiniteGroup::generate({x, y}, 8 * n);
      if ((int64_t)G.order() != 4 * n) throw InternalError("binary dihedral closure has the wrong order");
      return G;
    }
    default: {
      int64_t expect = kind == PolyhedralKind::Tetrahedral ? 24 : kind == PolyhedralKind::Octahedral ? 48 : 120;
      const auto& p = standard_pair(kind);
      FiniteGroup G = FiniteGroup::generate({p.x, p.y}, 2 * expect);
      if ((int64_t)G.order() != expect) throw InternalError("binary polyhedral closure has the wrong order");
      return G;
    }
  }
}

std::vector<UnitaryElement> spec_generators(const GroupSpec& s) {
  validate(s);
  const int N = ambient_order(s);
  const int m = s.m;
  switch (s.family) {
    case Family::DD: {
      auto [x, y] = polyhedral_generators(PolyhedralKind::Dihedral, s.n, N);
      return {UnitaryElement::scalar(N / (2 * m), N), x, y};
    }
    case Family::DC: {
      auto [x, y] = polyhedral_generators(PolyhedralKind::Dihedral, s.n, N);
      UnitaryElement h = UnitaryElement::scalar(N / (4 * m), N);
      return {h * h, h * x, y};
    }
    case Family::TT:
    case Family::OO:
    case Family::II: {
      PolyhedralKind k = s.family == Family::TT   ? PolyhedralKind::Tetrahedral
                         : s.family == Family::OO ? PolyhedralKind::Octahedral
                                                  : PolyhedralKind::Icosahedral;
      auto [x, y] = polyhedral_generators(k, 0, N);
      return {UnitaryElement::scalar(N / (2 * m), N), x, y};
    }
    case Family::TD: {
      auto [x, y] = polyhedral_generators(PolyhedralKind::Tetrahedral, 0, N);
      UnitaryElement h = UnitaryElement::scalar(N / (6 * m), N);
      return {h * h * h, x, h * y};
    }
  }
  return {};
}

FiniteGroup build_group(const GroupSpec& s, bool check_free) {
  auto gens = spec_generators(s);
  const int64_t expect = group_order(s);
  FiniteGroup G = FiniteGroup::generate(gens, 2 * expect);
  if ((int64_t)G.order() != expect)
    throw InternalError(spec_label(s) + ": closure has order " + std::to_string(G.order()) + ", expected " +
                        std::to_string(expect));
  if (check_free && !verify_free_action(G)) throw InternalError(spec_label(s) + ": a non-identity element fixes a vector");
  G.spec = s;
  return G;
}

bool verify_free_action(const FiniteGroup& G) {
  // det(g - I) = det g - tr g + 1
  for (size_t i = 0; i < G.order(); ++i) {
    if ((int)i == G.identity_index()) continue;
    const auto& g = G.element(i);
    CyclotomicNumber v = g.det() - g.trace() + CyclotomicNumber(Rational(1), G.ambient());
    if (v.is_zero()) return false;
  }
  return true;
}

FiniteGroup scalar_subgroup(const FiniteGroup& G) {
  int best = G.identity_index();
  int64_t best_order = 1;
  for (size_t i = 0; i < G.order(); ++i) {
    const auto& g = G.element(i);
    if (!g.is_scalar()) continue;
    int64_t o = element_order(g);
    if (o > best_order) best = (int)i, best_order = o;
  }
  return FiniteGroup::generate({G.element(best)}, 2 * best_order);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<int> cls(G.order(), -1);
  std::vector<std::vector<int>> out;
  std::vector<UnitaryElement> inv;
  for (const auto& s : G.generators()) inv.push_back(s.adjoint());
  for (size_t i = 0; i < G.order(); ++i) {
    if (cls[i] >= 0) continue;
    int id = (int)out.size();
    out.push_back({(int)i});
    cls[i] = id;
    for (size_t q = 0; q < out[id].size(); ++q) {
      const auto& g = G.element(out[id][q]);
      for (size_t k = 0; k < inv.size(); ++k) {
        int c = G.index_of(inv[k] * g * G.generators()[k]);
        if (cls[c] < 0) {
          cls[c] = id;
          out[id].push_back(c);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int64_t AbelianInvariants::order() const {
  int64_t r = 1;
  for (auto d : factors) r *= d;
  return r;
}

AbelianInvariants invariant_factors_from_orders(const std::vector<int64_t>& orders) {
  const int64_t n = (int64_t)orders.size();
  AbelianInvariants out;
  if (n <= 1) return out;
  std::vector<std::pair<int64_t, std::vector<int>>> per_prime;
  int64_t rest = n;
  for (int64_t p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    int E = 0;
    while (rest % p == 0) rest /= p, ++E;
    // s[i] = log_p #{x : x^(p^i) = 1}; s[i] - s[i-1] = #{cyclic factors of exponent >= i}
    std::vector<int> s(E + 2, 0);
    int64_t pi = 1;
    for (int i = 0; i <= E + 1; ++i) {
      int64_t c = 0;
      for (auto o : orders)
        if (pi % o == 0) ++c;
      int lg = 0;
      for (int64_t v = c; v > 1; v /= p) {
        if (v % p) throw InternalError("element-order counts are not those of an abelian group");
        ++lg;
      }
      s[i] = lg;
      if (i <= E) pi *= p;
    }
    std::vector<int> exps;  // descending
    for (int i = E; i >= 1; --i) {
      int ge = s[i] - s[i - 1], ge_next = (i + 1 <= E) ? s[i + 1] - s[i] : 0;
      for (int t = 0; t < ge - ge_next; ++t) exps.push_back(i);
    }
    per_prime.push_back({p, exps});
  }
  size_t r = 0;
  for (auto& [p, e] : per_prime) r = std::max(r, e.size());
  out.factors.assign(r, 1);
  for (auto& [p, e] : per_prime)
    for (size_t t = 0; t < e.size(); ++t) {
      int64_t q = 1;
      for (int i = 0; i < e[t]; ++i) q *= p;
      out.factors[r - 1 - t] *= q;
    }
  return out;
}

namespace {

struct AbelianData {
  AbelianInvariants inv;
  int64_t commutator_order = 1;
};

AbelianData compute_abelianization(const FiniteGroup& G) {
  const auto& gens = G.generators();
  std::vector<int> gi;
  for (const auto& s : gens) gi.push_back(G.index_of(s));
  std::vector<int> kgens;
  for (size_t a = 0; a < gi.size(); ++a)
    for (size_t b = a + 1; b < gi.size(); ++b) {
      int c = G.mul(G.mul(gi[a], gi[b]), G.mul(G.inverse(gi[a]), G.inverse(gi[b])));
      if (c != G.identity_index()) kgens.push_back(c);
    }
  // normal closure: grow the subgroup generated by kgens.  A conjugate of a
  // generator falling outside K becomes a new generator; it is applied to
  // the elements found so far, and new elements get every generator.
  std::vector<char> inK(G.order(), 0), queued(G.order(), 0);
  std::vector<int> K{G.identity_index()};
  inK[G.identity_index()] = 1;
  for (int k : kgens) queued[k] = 1;
  std::vector<std::vector<int32_t>> kwords;  // products go through the generator tables
  size_t old_n = 0, old_g = 0;
  for (;;) {
    const size_t ng = kgens.size();
    while (kwords.size() < ng) kwords.push_back(G.word(kgens[kwords.size()]));
    auto add = [&](int p) {
      if (!inK[p]) inK[p] = 1, K.push_back(p);
    };
    for (size_t q = 0; q < old_n; ++q)
      for (size_t t = old_g; t < ng; ++t) add(G.apply_word(K[q], kwords[t]));
    for (size_t q = old_n; q < K.size(); ++q)
      for (size_t t = 0; t < ng; ++t) add(G.apply_word(K[q], kwords[t]));
    for (size_t t = old_g; t < ng; ++t)
      for (int s : gi) {
        int c = G.mul(G.mul(G.inverse(s), kgens[t]), s);
        if (!inK[c] && !queued[c]) queued[c] = 1, kgens.push_back(c);
      }
    old_n = K.size();
    old_g = ng;
    if (kgens.size() == ng) break;
  }
  // cosets gK via union-find over right multiplication by the kgens
  std::vector<int> uf(G.order());
  std::iota(uf.begin(), uf.end(), 0);
  auto root = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (size_t g = 0; g < G.order(); ++g)
    for (const auto& w : kwords) uf[root((int)g)] = root(G.apply_word((int)g, w));
  // label the cosets; generators act on labels through the right tables
  std::vector<int> label(G.order(), -1), reps;
  for (size_t g = 0; g < G.order(); ++g) {
    int r = root((int)g);
    if (label[r] < 0) label[r] = (int)reps.size(), reps.push_back(r);
    label[g] = label[r];
  }
  const size_t R = reps.size(), ng = gens.size();
  std::vector<std::vector<int>> act(ng, std::vector<int>(R));
  for (size_t k = 0; k < ng; ++k)
    for (size_t c = 0; c < R; ++c) act[k][c] = label[G.right_table(k)[reps[c]]];
  // short words for the cosets by BFS in the quotient
  std::vector<std::pair<int, int>> qparent(R, {-1, -1});
  std::vector<int> order_seen{label[G.identity_index()]};
  std::vector<char> seen(R, 0);
  seen[order_seen[0]] = 1;
  for (size_t q = 0; q < order_seen.size(); ++q)
    for (size_t k = 0; k < ng; ++k) {
      int t = act[k][order_seen[q]];
      if (!seen[t]) seen[t] = 1, qparent[t] = {order_seen[q], (int)k}, order_seen.push_back(t);
    }
  std::vector<std::vector<int>> qword(R);
  for (int c : order_seen)
    if (qparent[c].first >= 0) {
      qword[c] = qword[qparent[c].first];
      qword[c].push_back(qparent[c].second);
    }
  auto qmul = [&](int a, int b) {
    for (int k : qword[b]) a = act[k][a];
    return a;
  };
  auto qpow = [&](int a, int64_t e) {
    int r = label[G.identity_index()];
    while (e) {
      if (e & 1) r = qmul(r, a);
      e >>= 1;
      if (e) a = qmul(a, a);
    }
    return r;
  };
  std::vector<int64_t> orders;
  for (size_t c = 0; c < R; ++c) {
    // the order of rK divides the order of r; take the least such divisor
    int64_t er = element_order(G.element(reps[c])), o = er;
    for (int64_t d = 1; d < er; ++d)
      if (er % d == 0 && qpow((int)c, d) == label[G.identity_index()]) {
        o = d;
        break;
      }
    orders.push_back(o);
  }
  AbelianData d;
  d.inv = invariant_factors_from_orders(orders);
  d.commutator_order = (int64_t)K.size();
  if (d.inv.order() * d.commutator_order != (int64_t)G.order())
    throw InternalError("abelianization size does not match |G| / |[G,G]|");
  return d;
}

}  // namespace

AbelianInvariants abelianization(const FiniteGroup& G) { return compute_abelianization(G).inv; }

int64_t commutator_subgroup_order(const FiniteGroup& G) { return compute_abelianization(G).commutator_order; }

Character det_character(const FiniteGroup& G) {
  Character chi;
  chi.order = G.ambient();
  chi.exps.resize(G.order());
  for (size_t i = 0; i < G.order(); ++i) chi.exps[i] = root_exponent(G.element(i).det(), G.ambient());
  for (const auto& s : G.generators()) chi.generator_indices.push_back(G.index_of(s));
  return chi;
}

}  // namespace ellsw
