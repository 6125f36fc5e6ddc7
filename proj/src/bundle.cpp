#include "ellsw/bundle.hpp"

#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "ellsw/errors.hpp"

namespace ellsw {

namespace {

std::string word_of(const std::vector<std::pair<int32_t, int32_t>>& parent, int i,
                    const std::vector<std::string>& names) {
  std::vector<std::string> letters;
  while (parent[i].first >= 0) {
    letters.push_back(names[parent[i].second]);
    i = parent[i].first;
  }
  if (letters.empty()) return "1";
  std::string w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!w.empty()) w += "*";
    w += *it;
  }
  return w;
}

}  // namespace

Character extend_character(const FiniteGroup& G, const std::vector<std::pair<int, RootValue>>& assignments,
                           const std::vector<std::string>& names_in) {
  if (assignments.empty()) throw CharacterError("no generator values assigned");
  std::vector<std::string> names = names_in;
  for (size_t t = names.size(); t < assignments.size(); ++t) names.push_back("s" + std::to_string(t));

  int64_t L = 1;
  for (auto& [idx, v] : assignments) {
    if (v.N <= 0) throw CharacterError("root of unity order must be positive");
    L = lcm64(L, v.N);
  }
  if (L > (1 << 30)) throw CharacterError("character values need too large a root-of-unity order");

  // Right multiplication by each assigned element; reuse generator tables
  // where the element is a generator.
  const size_t n = G.order();
  std::vector<const std::vector<int32_t>*> tables;
  std::vector<std::vector<int32_t>> own;
  own.reserve(assignments.size());
  std::vector<int64_t> step;
  for (auto& [idx, v] : assignments) {
    if (idx < 0 || size_t(idx) >= n) throw CharacterError("assigned element index out of range");
    step.push_back(mod_floor(v.k * (L / v.N), L));
    const std::vector<int32_t>* tab = nullptr;
    for (size_t k = 0; k < G.generators().size(); ++k)
      if (G.generators()[k] == G.element(idx)) tab = &G.right_table(k);
    if (!tab) {
      own.emplace_back(n);
      for (size_t i = 0; i < n; ++i) own.back()[i] = G.mul(int(i), idx);
      tab = &own.back();
    }
    tables.push_back(tab);
  }

  std::vector<int64_t> val(n, -1);
  std::vector<std::pair<int32_t, int32_t>> parent(n, {-1, -1});
  std::deque<int> queue{G.identity_index()};
  val[G.identity_index()] = 0;
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (size_t t = 0; t < tables.size(); ++t) {
      int p = (*tables[t])[g];
      int64_t v = (val[g] + step[t]) % L;
      if (val[p] < 0) {
        val[p] = v;
        parent[p] = {g, int32_t(t)};
        queue.push_back(p);
      } else if (val[p] != v) {
        std::string w1 = word_of(parent, g, names);
        w1 = (w1 == "1" ? "" : w1 + "*") + names[t];
        std::string w2 = word_of(parent, p, names);
        throw CharacterError("inconsistent character: " + w1 + " and " + w2 + " are the same element but get zeta_" +
                             std::to_string(L) + "^" + std::to_string(v) + " vs zeta_" + std::to_string(L) + "^" +
                             std::to_string(val[p]));
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (val[i] < 0) throw CharacterError("assigned elements do not generate the group");

  Character chi;
  chi.order = int(L);
  chi.exps.assign(val.begin(), val.end());
  for (auto& a : assignments) chi.generator_indices.push_back(a.first);
  return chi;
}

std::vector<std::string> rho_generator_names(const GroupSpec& s) {
  switch (s.family) {
    case Family::DC: return {"h^2", "hx", "y"};
    case Family::TD: return {"h^3", "x", "hy"};
    default: return {"h", "x", "y"};
  }
}

std::vector<RootValue> rho_generator_values(const GroupSpec& s) {
  validate(s);
  const int N = ambient_order(s);
  const int64_t mu = N / (2 * s.m);  // mu_2m = zeta_N^mu
  const int64_t minus = N / 2;       // -1 = zeta_N^(N/2)
  auto r = [N](int64_t k) { return RootValue{mod_floor(k, N), N}; };
  switch (s.family) {
    case Family::DD: return {r(2 * s.n * mu), r((s.n % 2) * minus), r(0)};
    case Family::DC: return {r(2 * s.n * mu), r(s.n * minus + s.n * mu), r(0)};
    case Family::TT: return {r(12 * mu), r(0), r(0)};
    case Family::OO: return {r(24 * mu), r(0), r(0)};
    case Family::II: return {r(60 * mu), r(0), r(0)};
    case Family::TD: return {r(12 * mu), r(0), r(4 * mu)};
  }
  throw ParameterError("unknown family");
}

Character rho(const FiniteGroup& G) {
  if (!G.spec) throw InternalError("rho needs a group built from a spec");
  const GroupSpec& s = *G.spec;
  auto values = rho_generator_values(s);
  std::vector<std::pair<int, RootValue>> assign;
  for (size_t k = 0; k < values.size(); ++k) assign.push_back({G.index_of(G.generators()[k]), values[k]});
  return extend_character(G, assign, rho_generator_names(s));
}

Character rho(const GroupSpec& s) { return rho(build_group(s)); }

// ---------------------------------------------------------------------------
// BivariatePolynomial

void BivariatePolynomial::put(const Key& k, BigCyclotomic v) {
  if (v.is_zero())
    c_.erase(k);
  else
    c_[k] = std::move(v);
}

BivariatePolynomial BivariatePolynomial::constant(const BigCyclotomic& c) {
  BivariatePolynomial p;
  p.put({0, 0}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::linear(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  BivariatePolynomial p;
  p.put({1, 0}, BigCyclotomic(a));
  p.put({0, 1}, BigCyclotomic(b));
  return p;
}

int BivariatePolynomial::degree() const {
  int d = -1;
  for (auto& [k, v] : c_) d = std::max(d, k.first + k.second);
  return d;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  std::map<Key, BigCyclotomic> acc;
  for (auto& [ka, va] : c_)
    for (auto& [kb, vb] : o.c_) {
      Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, va * vb);
      else
        it->second = it->second + va * vb;
    }
  BivariatePolynomial r;
  for (auto& [k, v] : acc) r.put(k, std::move(v));
  return r;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  BivariatePolynomial r = *this;
  for (auto& [k, v] : o.c_) {
    auto it = r.c_.find(k);
    r.put(k, it == r.c_.end() ? v : it->second + v);
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::scaled(const BigCyclotomic& s) const {
  BivariatePolynomial r;
  for (auto& [k, v] : c_) r.put(k, v * s);
  return r;
}

BivariatePolynomial BivariatePolynomial::substitute(const UnitaryElement& g) const {
  int d = std::max(degree(), 0);
  BivariatePolynomial A = linear(g.e[0], g.e[1]), B = linear(g.e[2], g.e[3]);
  std::vector<BivariatePolynomial> pa{constant(BigCyclotomic(CyclotomicNumber(1)))}, pb = pa;
  for (int i = 1; i <= d; ++i) {
    pa.push_back(pa.back() * A);
    pb.push_back(pb.back() * B);
  }
  BivariatePolynomial r;
  for (auto& [k, v] : c_) r = r + (pa[k.first] * pb[k.second]).scaled(v);
  return r;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (auto ia = a.c_.begin(), ib = b.c_.begin(); ia != a.c_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string BivariatePolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    if (k.first) os << "*z1^" << k.first;
    if (k.second) os << "*z2^" << k.second;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Equivariance of the section

std::vector<int> scalar_coset_ids(const FiniteGroup& G) {
  const auto& t = G.right_table(0);
  std::vector<int> id(G.order(), -1);
  int next = 0;
  for (size_t i = 0; i < G.order(); ++i) {
    if (id[i] >= 0) continue;
    for (int j = int(i); id[j] < 0; j = t[j]) id[j] = next;
    ++next;
  }
  return id;
}

std::vector<int> coset_representatives(const FiniteGroup& G) {
  auto id = scalar_coset_ids(G);
  std::vector<int> reps;
  for (size_t i = 0; i < G.order(); ++i)
    if (size_t(id[i]) == reps.size()) reps.push_back(int(i));
  return reps;
}

namespace {

using Row = std::pair<CyclotomicNumber, CyclotomicNumber>;

Row row_times(const Row& r, const UnitaryElement& g) {
  return {CyclotomicNumber::dot2(r.first, g.e[0], r.second, g.e[2]),
          CyclotomicNumber::dot2(r.first, g.e[1], r.second, g.e[3])};
}

BivariatePolynomial product_of(const std::vector<Row>& rows) {
  BivariatePolynomial f = BivariatePolynomial::constant(BigCyclotomic(CyclotomicNumber(1)));
  for (auto& r : rows) f = f * BivariatePolynomial::linear(r.first, r.second);
  return f;
}

}  // namespace

EquivarianceReport check_section_equivariance(const GroupSpec& s, std::pair<Rational, Rational> u, int trials,
                                              uint64_t seed) {
  if (u.first.is_zero() && u.second.is_zero()) throw InputError("degenerate vector u = (0, 0)");
  if (trials < 0) throw InputError("trials must be non-negative");
  FiniteGroup G = build_group(s);
  Character chi = rho(G);
  const int N = G.ambient();
  auto reps = coset_representatives(G);
  auto names = rho_generator_names(s);

  EquivarianceReport rep;
  rep.spec = s;
  rep.gamma_order = int(reps.size());
  rep.ok = true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> num(-6, 6), den(1, 5);
  for (int trial = 0; trial <= trials; ++trial) {
    std::pair<Rational, Rational> v = u;
    if (trial > 0) {
      do {
        v = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
      } while (v.first.is_zero() && v.second.is_zero());
    }
    rep.vectors_tried.push_back(v);
    std::vector<Row> rows;
    Row uu{CyclotomicNumber(v.first, N), CyclotomicNumber(v.second, N)};
    for (int r : reps) rows.push_back(row_times(uu, G.element(r)));
    BivariatePolynomial f = product_of(rows);
    for (size_t k = 0; k < G.generators().size(); ++k) {
      const UnitaryElement& g = G.generators()[k];
      std::vector<Row> moved;
      for (auto& r : rows) moved.push_back(row_times(r, g));
      int idx = G.index_of(g);
      BivariatePolynomial lhs = product_of(moved);
      BivariatePolynomial rhs = f.scaled(BigCyclotomic(chi.value(idx).embed(N)));
      bool holds = lhs == rhs;
      rep.ok = rep.ok && holds;
      if (trial == 0) rep.checks.push_back({names[k], RootValue{chi.exps[idx], chi.order}, holds});
    }
  }
  return rep;
}

bool verify_section_equivariance(const GroupSpec& s, std::pair<Rational, Rational> u, int trials) {
  return check_section_equivariance(s, u, trials).ok;
}

}  // namespace ellsw
