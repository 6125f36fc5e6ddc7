#include "ellsw/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ellsw/errors.hpp"

namespace ellsw {

// ---------------------------------------------------------------------------
// number theory helpers

static std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

int euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return (int)r;
}

int moebius(int64_t n) {
  int s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

int64_t ramanujan_sum(int64_t a, int N) {
  int64_t g = gcd64(mod_floor(a, N), N);
  if (g == 0) g = N;
  int64_t q = N / g;
  int mu = moebius(q);
  if (mu == 0) return 0;
  return (int64_t)mu * euler_phi(N) / euler_phi(q);
}

std::vector<mpz_class> cyclotomic_polynomial(int N) {
  // Phi_N(x) = prod_{d | N} (x^d - 1)^{mu(N/d)}: multiply the mu=+1 factors
  // and divide out the mu=-1 factors (exact division of monic polynomials).
  std::vector<mpz_class> num{1}, den{1};
  auto mul_binomial = [](std::vector<mpz_class>& p, int d) {  // p *= (x^d - 1)
    std::vector<mpz_class> r(p.size() + d);
    for (size_t i = 0; i < p.size(); ++i) {
      r[i + d] += p[i];
      r[i] -= p[i];
    }
    p.swap(r);
  };
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    int mu = moebius(N / d);
    if (mu == 1) mul_binomial(num, d);
    if (mu == -1) mul_binomial(den, d);
  }
  // long division num / den (den monic)
  size_t dq = num.size() - den.size();
  std::vector<mpz_class> q(dq + 1);
  for (size_t k = dq + 1; k-- > 0;) {
    mpz_class c = num[k + den.size() - 1];
    q[k] = c;
    if (c != 0)
      for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  return q;
}

// ---------------------------------------------------------------------------
// field tables

static std::shared_ptr<FieldTable> make_table(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  auto T = std::make_shared<FieldTable>();
  T->N = N;
  T->phi = euler_phi(N);
  for (auto [p, e] : factorize(N)) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= (int)p;
    T->prime_powers.push_back({(int)p, pe});
  }
  struct PrimeData {
    int p, pe, top, inv, shift;
  };
  std::vector<PrimeData> pd;
  for (auto [p, pe] : T->prime_powers) {
    int cof = N / pe;
    // inverse of cof modulo pe
    int inv = 1;
    for (int t = 0; t < pe; ++t)
      if ((int64_t)cof * t % pe == 1 % pe) {
        inv = t;
        break;
      }
    pd.push_back({p, pe, pe / p, inv, N / p});
  }
  T->start.assign(N + 1, 0);
  std::vector<std::pair<int32_t, int8_t>> cur, next;
  for (int a = 0; a < N; ++a) {
    cur.assign(1, {a, 1});
    for (const auto& d : pd) {
      next.clear();
      for (auto [b, s] : cur) {
        int k = (int)((int64_t)b * d.inv % d.pe);
        if (k / d.top == d.p - 1) {
          for (int j = 1; j < d.p; ++j) next.push_back({(int32_t)mod_floor((int64_t)b - (int64_t)j * d.shift, N), (int8_t)-s});
        } else {
          next.push_back({b, s});
        }
      }
      cur.swap(next);
    }
    std::sort(cur.begin(), cur.end());
    for (auto [b, s] : cur) {
      T->exps.push_back(b);
      T->signs.push_back(s);
    }
    T->start[a + 1] = (int32_t)T->exps.size();
  }
  T->cosv.resize(N);
  T->sinv.resize(N);
  T->ramanujan.resize(N);
  for (int a = 0; a < N; ++a) {
    double t = 2.0 * std::numbers::pi * a / N;
    T->cosv[a] = std::cos(t);
    T->sinv[a] = std::sin(t);
    T->ramanujan[a] = ramanujan_sum(a, N);
  }
  return T;
}

namespace {
struct TableCache {
  std::mutex mu;
  std::list<std::pair<int, std::shared_ptr<const FieldTable>>> lru;
  static constexpr size_t kCapacity = 64;
};
TableCache& cache() {
  static TableCache c;
  return c;
}
}  // namespace

std::shared_ptr<const FieldTable> field_table(int N) {
  // tiny per-thread front cache: the hot loops hit one or two orders
  thread_local std::pair<int, std::shared_ptr<const FieldTable>> recent[4];
  thread_local unsigned next_slot = 0;
  for (auto& r : recent)
    if (r.first == N && r.second) return r.second;

  std::shared_ptr<const FieldTable> t;
  {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    for (auto it = c.lru.begin(); it != c.lru.end(); ++it) {
      if (it->first == N) {
        t = it->second;
        c.lru.splice(c.lru.begin(), c.lru, it);
        break;
      }
    }
    if (!t) {
      t = make_table(N);
      c.lru.push_front({N, t});
      if (c.lru.size() > TableCache::kCapacity) c.lru.pop_back();
    }
  }
  recent[next_slot++ % 4] = {N, t};
  return t;
}

// ---------------------------------------------------------------------------
// accumulator: dense scratch indexed by exponent, reused per thread

class CycloAccumulator {
 public:
  explicit CycloAccumulator(int N) : N_(N), T_(field_table(N)) {
    auto& s = scratch();
    if ((int)s.acc.size() < N) {
      s.acc.resize(N, 0);
      s.mark.resize(N, 0);
    }
    s.touched.clear();
  }

  // add c * zeta^e, e in [0, N)
  void add_power(int e, __int128 c) {
    auto& s = scratch();
    const int32_t* ex = T_->exps.data() + T_->start[e];
    const int8_t* sg = T_->signs.data() + T_->start[e];
    int len = T_->start[e + 1] - T_->start[e];
    for (int i = 0; i < len; ++i) {
      int x = ex[i];
      if (!s.mark[x]) {
        s.mark[x] = 1;
        s.touched.push_back(x);
      }
      if (__builtin_add_overflow(s.acc[x], sg[i] > 0 ? c : -c, &s.acc[x])) {
        reset();
        throw std::overflow_error("cyclotomic coefficient overflow");
      }
    }
  }

  // add c * (basis element e) without expansion
  void add_basis(int e, __int128 c) {
    auto& s = scratch();
    if (!s.mark[e]) {
      s.mark[e] = 1;
      s.touched.push_back(e);
    }
    if (__builtin_add_overflow(s.acc[e], c, &s.acc[e])) {
      reset();
      throw std::overflow_error("cyclotomic coefficient overflow");
    }
  }

  CyclotomicNumber finish(__int128 den) {
    auto& s = scratch();
    std::sort(s.touched.begin(), s.touched.end());
    std::vector<std::pair<int32_t, __int128>> wide;
    wide.reserve(s.touched.size());
    for (int x : s.touched) {
      if (s.acc[x] != 0) wide.push_back({x, s.acc[x]});
      s.acc[x] = 0;
      s.mark[x] = 0;
    }
    s.touched.clear();
    return build(N_, std::move(wide), den);
  }

  static CyclotomicNumber build(int N, std::vector<std::pair<int32_t, __int128>> wide, __int128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    CyclotomicNumber r;
    r.N_ = N;
    if (wide.empty()) return r;
    if (den < 0) {
      den = -den;
      for (auto& w : wide) w.second = -w.second;
    }
    __int128 g = den;
    for (auto& w : wide) {
      if (g == 1) break;
      g = gcd128(g, w.second);
    }
    if (g > 1) {
      den /= g;
      for (auto& w : wide) w.second /= g;
    }
    r.den_ = narrow128(den);
    r.terms_.reserve(wide.size());
    for (auto& w : wide) r.terms_.push_back({w.first, narrow128(w.second)});
    return r;
  }

 private:
  void reset() {
    auto& s = scratch();
    for (int x : s.touched) {
      s.acc[x] = 0;
      s.mark[x] = 0;
    }
    s.touched.clear();
  }
  struct Scratch {
    std::vector<__int128> acc;
    std::vector<uint8_t> mark;
    std::vector<int32_t> touched;
  };
  static Scratch& scratch() {
    thread_local Scratch s;
    return s;
  }
  int N_;
  std::shared_ptr<const FieldTable> T_;
};

static int lcm_order(int a, int b) { return (int)lcm64(a, b); }

static __int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(const Rational& r, int N) : N_(N), den_(r.den()) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (r.num() != 0) terms_.push_back({0, r.num()});
  else den_ = 1;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int64_t k, int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  int e = (int)mod_floor(k, N);
  auto T = field_table(N);
  if (T->is_basis(e)) {
    CyclotomicNumber r;
    r.N_ = N;
    r.terms_.push_back({e, 1});
    return r;
  }
  CycloAccumulator acc(N);
  acc.add_power(e, 1);
  return acc.finish(1);
}

CyclotomicNumber CyclotomicNumber::inverse_one_minus_root(int64_t k, int N) {
  int e = (int)mod_floor(k, N);
  if (e == 0) throw DivisionByZero("1 - zeta^0 is zero");
  int d = N / (int)gcd64(e, N);
  // 1/(1-w) = -(1/d) sum_{j<d} j w^j for w a primitive d-th root of unity
  CycloAccumulator acc(N);
  int64_t x = 0;
  for (int j = 1; j < d; ++j) {
    x += e;
    if (x >= N) x -= N;
    acc.add_power((int)x, -j);
  }
  return acc.finish(d);
}

CyclotomicNumber CyclotomicNumber::from_terms(int N, int64_t den, const std::vector<Term>& terms) {
  CycloAccumulator acc(N);
  for (auto [e, c] : terms) acc.add_power((int)mod_floor(e, N), c);
  return acc.finish(den);
}

CyclotomicNumber CyclotomicNumber::from_power_basis(int N, const std::vector<Rational>& coeffs) {
  int64_t L = 1;
  for (const auto& c : coeffs) L = lcm64(L, c.den());
  CycloAccumulator acc(N);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc.add_power((int)(i % N), (__int128)coeffs[i].num() * (L / coeffs[i].den()));
  }
  return acc.finish(L);
}

Rational CyclotomicNumber::as_rational() const {
  if (!is_rational()) throw NotRational(str());
  if (terms_.empty()) return Rational(0);
  return Rational(terms_[0].second, den_);
}

CyclotomicNumber CyclotomicNumber::embed(int M) const {
  if (M == N_) return *this;
  if (M % N_ != 0) throw std::invalid_argument("embedding requires N | M");
  if (is_rational()) {
    CyclotomicNumber r = *this;
    r.N_ = M;
    return r;
  }
  int s = M / N_;
  CycloAccumulator acc(M);
  for (auto [e, c] : terms_) acc.add_power(e * s, c);
  return acc.finish(den_);
}

CyclotomicNumber CyclotomicNumber::galois(int64_t t) const {
  if (gcd64(mod_floor(t, N_), N_) != 1 && N_ > 1) throw std::invalid_argument("galois automorphism needs gcd(t, N) = 1");
  if (is_rational()) return *this;
  CycloAccumulator acc(N_);
  for (auto [e, c] : terms_) acc.add_power((int)mod_floor((int64_t)e * t, N_), c);
  return acc.finish(den_);
}

CyclotomicNumber CyclotomicNumber::conjugate() const { return galois(-1); }

Rational CyclotomicNumber::trace() const {
  if (terms_.empty()) return Rational(0);
  auto T = field_table(N_);
  __int128 s = 0;
  for (auto [e, c] : terms_) s += (__int128)c * T->ramanujan[e];
  return Rational::from_wide(s, den_);
}

std::complex<double> CyclotomicNumber::to_complex() const {
  if (terms_.empty()) return 0.0;
  auto T = field_table(N_);
  double re = 0, im = 0;
  for (auto [e, c] : terms_) {
    re += double(c) * T->cosv[e];
    im += double(c) * T->sinv[e];
  }
  return {re / double(den_), im / double(den_)};
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& t : r.terms_) {
    if (t.second == INT64_MIN) throw std::overflow_error("cyclotomic coefficient overflow");
    t.second = -t.second;
  }
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.N_ != b.N_) {
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) + b.embed(L);
  }
  if (a.terms_.empty()) return b;
  if (b.terms_.empty()) return a;
  __int128 L = (__int128)a.den_ / gcd128(a.den_, b.den_) * b.den_;
  __int128 fa = L / a.den_, fb = L / b.den_;
  std::vector<std::pair<int32_t, __int128>> wide;
  wide.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      wide.push_back({a.terms_[i].first, checked_mul(a.terms_[i].second, fa)});
      ++i;
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      wide.push_back({b.terms_[j].first, checked_mul(b.terms_[j].second, fb)});
      ++j;
    } else {
      __int128 v = checked_mul(a.terms_[i].second, fa) + checked_mul(b.terms_[j].second, fb);
      if (v != 0) wide.push_back({a.terms_[i].first, v});
      ++i, ++j;
    }
  }
  return CycloAccumulator::build(a.N_, std::move(wide), L);
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.N_ != b.N_) {
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) * b.embed(L);
  }
  if (a.terms_.empty() || b.terms_.empty()) {
    CyclotomicNumber z;
    z.N_ = a.N_;
    return z;
  }
  __int128 den = (__int128)a.den_ * b.den_;
  if (a.is_rational() || b.is_rational()) {
    const auto& r = a.is_rational() ? a : b;
    const auto& o = a.is_rational() ? b : a;
    std::vector<std::pair<int32_t, __int128>> wide;
    wide.reserve(o.terms_.size());
    for (auto [e, c] : o.terms_) wide.push_back({e, (__int128)c * r.terms_[0].second});
    return CycloAccumulator::build(a.N_, std::move(wide), den);
  }
  const int N = a.N_;
  CycloAccumulator acc(N);
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) {
      int e = ea + eb;
      if (e >= N) e -= N;
      acc.add_power(e, (__int128)ca * cb);
    }
  return acc.finish(den);
}

CyclotomicNumber CyclotomicNumber::dot2(const CyclotomicNumber& a, const CyclotomicNumber& b,
                                        const CyclotomicNumber& c, const CyclotomicNumber& d) {
  const int N = a.N_;
  if (b.N_ != N || c.N_ != N || d.N_ != N) return a * b + c * d;
  bool p1 = !(a.terms_.empty() || b.terms_.empty());
  bool p2 = !(c.terms_.empty() || d.terms_.empty());
  if (!p1) return p2 ? c * d : CyclotomicNumber(Rational(0), N);
  if (!p2) return a * b;
  __int128 d1 = (__int128)a.den_ * b.den_, d2 = (__int128)c.den_ * d.den_;
  __int128 g = gcd128(d1, d2);
  __int128 L = checked_mul(d1 / g, d2);
  __int128 f1 = L / d1, f2 = L / d2;
  CycloAccumulator acc(N);
  auto run = [&](const CyclotomicNumber& x, const CyclotomicNumber& y, __int128 f) {
    for (auto [ex, cx] : x.terms_)
      for (auto [ey, cy] : y.terms_) {
        int e = ex + ey;
        if (e >= N) e -= N;
        acc.add_power(e, checked_mul((__int128)cx * cy, f));
      }
  };
  run(a, b, f1);
  run(c, d, f2);
  return acc.finish(L);
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.N_ != b.N_) {
    if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.terms_ == b.terms_;
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) == b.embed(L);
  }
  return a.den_ == b.den_ && a.terms_ == b.terms_;
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.invert(); }

CyclotomicNumber CyclotomicNumber::pow(int64_t e) const {
  if (e < 0) return invert().pow(-e);
  CyclotomicNumber base = *this, r(Rational(1), N_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

size_t CyclotomicNumber::hash() const {
  auto mix = [](uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  uint64_t h = mix((uint64_t)N_ * 31 + (uint64_t)den_);
  for (auto [e, c] : terms_) h = mix(h ^ ((uint64_t)e << 40) ^ (uint64_t)c);
  return (size_t)h;
}

std::string CyclotomicNumber::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    Rational q(c, den_);
    bool neg = q.num() < 0;
    if (neg) q = -q;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool one = q.num() == 1 && q.den() == 1;
    if (e == 0) {
      os << q.num();
      if (q.den() != 1) os << "/" << q.den();
      continue;
    }
    if (!one) {
      os << q.num();
      if (q.den() != 1) os << "/" << q.den();
      os << "*";
    }
    os << "zeta" << N_;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// power-basis conversion and Euclidean inversion (rational polynomials)

namespace {
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// residues of x^a mod Phi_N for a in [0, upto], as integer vectors of length phi
std::vector<std::vector<mpz_class>> power_residues(int N, int upto) {
  auto phi_poly = cyclotomic_polynomial(N);
  int deg = (int)phi_poly.size() - 1;
  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> cur(deg);
  if (deg > 0) cur[0] = 1;
  for (int a = 0; a <= upto; ++a) {
    out.push_back(cur);
    // cur *= x, then reduce the x^deg coefficient using Phi monic
    mpz_class top = deg > 0 ? cur[deg - 1] : mpz_class(0);
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    if (deg > 0) cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) cur[i] -= top * phi_poly[i];
  }
  return out;
}

template <class Terms>
QPoly to_qpoly(int N, const mpz_class& den, const Terms& terms) {
  int deg = euler_phi(N);
  QPoly p(deg);
  int maxe = 0;
  for (const auto& [e, c] : terms) maxe = std::max(maxe, (int)e);
  auto res = power_residues(N, maxe);
  for (const auto& [e, c] : terms)
    for (int i = 0; i < deg; ++i)
      if (res[e][i] != 0) p[i] += mpq_class(res[e][i] * mpz_class(c), den);
  for (auto& v : p) v.canonicalize();
  return p;
}

QPoly to_qpoly(const CyclotomicNumber& x) {
  return to_qpoly(x.order(), mpz_class((long)x.denominator()), x.terms());
}

Rational to_rational(const mpq_class& q) {
  mpz_class n = q.get_num(), d = q.get_den();
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw std::overflow_error("rational coefficient exceeds 64 bits");
  return Rational(n.get_si(), d.get_si());
}

// r = a mod b, q = a div b
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    mpq_class c = r.back() / b.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// inverse of a (nonzero, degree < phi(N)) modulo Phi_N by extended Euclid
QPoly invert_qpoly(QPoly a, int N) {
  trim(a);
  if (a.empty()) throw DivisionByZero("inverse of zero");
  QPoly m;
  for (auto& c : cyclotomic_polynomial(N)) m.push_back(mpq_class(c));
  // keep s with s*a == r (mod m)
  QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("value shares a factor with the cyclotomic polynomial");
  mpq_class inv_c = 1 / r1[0];
  QPoly q, s;
  poly_divmod(poly_mul(s1, QPoly{inv_c}), m, q, s);
  return s;
}
}  // namespace

std::vector<Rational> CyclotomicNumber::power_basis() const {
  QPoly p = to_qpoly(*this);
  std::vector<Rational> out;
  out.reserve(p.size());
  for (auto& c : p) out.push_back(to_rational(c));
  return out;
}

CyclotomicNumber CyclotomicNumber::invert() const {
  if (terms_.empty()) throw DivisionByZero("inverse of zero");
  if (terms_.size() == 1) {
    // c * zeta^e with zeta^e a root of unity
    auto [e, c] = terms_[0];
    CycloAccumulator acc(N_);
    acc.add_power((int)mod_floor(-(int64_t)e, N_), den_);
    return acc.finish(c);
  }
  std::vector<Rational> coeffs;
  for (auto& c : invert_qpoly(to_qpoly(*this), N_)) coeffs.push_back(to_rational(c));
  return from_power_basis(N_, coeffs);
}

// ---------------------------------------------------------------------------
// BigCyclotomic

BigCyclotomic::BigCyclotomic(const CyclotomicNumber& x) : N_(x.order()), den_(x.denominator()) {
  for (auto [e, c] : x.terms()) terms_.push_back({e, mpz_class((long)c)});
}

BigCyclotomic BigCyclotomic::zero(int N) {
  BigCyclotomic z;
  z.N_ = N;
  return z;
}

BigCyclotomic BigCyclotomic::from_power_basis(int N, const std::vector<mpq_class>& coeffs) {
  auto T = field_table(N);
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> acc(N);
  std::vector<char> seen(N, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    mpz_class c = coeffs[i].get_num() * (den / coeffs[i].get_den());
    int f = (int)(i % N);
    auto ex = T->expansion(f);
    auto sg = T->expansion_signs(f);
    for (size_t k = 0; k < ex.size(); ++k) {
      if (sg[k] > 0) acc[ex[k]] += c;
      else acc[ex[k]] -= c;
      seen[ex[k]] = 1;
    }
  }
  BigCyclotomic r;
  r.N_ = N;
  r.den_ = den;
  for (int x = 0; x < N; ++x)
    if (seen[x] && acc[x] != 0) r.terms_.push_back({x, acc[x]});
  r.normalize();
  return r;
}

BigCyclotomic BigCyclotomic::invert() const {
  return from_power_basis(N_, invert_qpoly(to_qpoly(N_, den_, terms_), N_));
}

void BigCyclotomic::normalize() {
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (auto& t : terms_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& t : terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  }
}

BigCyclotomic BigCyclotomic::embed(int M) const {
  if (M == N_) return *this;
  if (M % N_ != 0) throw std::invalid_argument("embedding requires N | M");
  auto T = field_table(M);
  std::vector<mpz_class> acc(M);
  std::vector<uint8_t> seen(M, 0);
  int s = M / N_;
  for (const auto& [e, c] : terms_) {
    int f = e * s;
    auto ex = T->expansion(f);
    auto sg = T->expansion_signs(f);
    for (size_t i = 0; i < ex.size(); ++i) {
      if (sg[i] > 0) acc[ex[i]] += c;
      else acc[ex[i]] -= c;
      seen[ex[i]] = 1;
    }
  }
  BigCyclotomic r;
  r.N_ = M;
  r.den_ = den_;
  for (int x = 0; x < M; ++x)
    if (seen[x] && acc[x] != 0) r.terms_.push_back({x, acc[x]});
  r.normalize();
  return r;
}

CyclotomicNumber BigCyclotomic::to_small() const {
  if (!den_.fits_slong_p()) throw std::overflow_error("denominator exceeds 64 bits");
  std::vector<CyclotomicNumber::Term> t;
  for (const auto& [e, c] : terms_) {
    if (!c.fits_slong_p()) throw std::overflow_error("coefficient exceeds 64 bits");
    t.push_back({e, c.get_si()});
  }
  return CyclotomicNumber::from_terms(N_, den_.get_si(), t);
}

std::string BigCyclotomic::str() const {
  // same layout as CyclotomicNumber::str
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class q(c, den_);
    q.canonicalize();
    bool neg = sgn(q) < 0;
    if (neg) q = -q;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (e == 0 || q != 1) {
      os << q.get_str();
      if (e == 0) continue;
      os << "*";
    }
    os << "zeta" << N_;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

BigCyclotomic BigCyclotomic::operator-() const {
  BigCyclotomic r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

BigCyclotomic operator+(const BigCyclotomic& a, const BigCyclotomic& b) {
  if (a.N_ != b.N_) {
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) + b.embed(L);
  }
  if (a.terms_.empty()) return b;
  if (b.terms_.empty()) return a;
  BigCyclotomic r;
  r.N_ = a.N_;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  mpz_class fa = b.den_ / g, fb = a.den_ / g;
  r.den_ = a.den_ * fa;
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      r.terms_.push_back({a.terms_[i].first, a.terms_[i].second * fa});
      ++i;
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      r.terms_.push_back({b.terms_[j].first, b.terms_[j].second * fb});
      ++j;
    } else {
      mpz_class v = a.terms_[i].second * fa + b.terms_[j].second * fb;
      if (v != 0) r.terms_.push_back({a.terms_[i].first, v});
      ++i, ++j;
    }
  }
  r.normalize();
  return r;
}

BigCyclotomic operator-(const BigCyclotomic& a, const BigCyclotomic& b) { return a + (-b); }

BigCyclotomic operator*(const BigCyclotomic& a, const BigCyclotomic& b) {
  if (a.N_ != b.N_) {
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) * b.embed(L);
  }
  BigCyclotomic r;
  r.N_ = a.N_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const int N = a.N_;
  auto T = field_table(N);
  thread_local std::vector<mpz_class> acc;
  thread_local std::vector<uint8_t> seen;
  thread_local std::vector<int> touched;
  if ((int)acc.size() < N) {
    acc.resize(N);
    seen.resize(N, 0);
  }
  touched.clear();
  mpz_class prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      if (e >= N) e -= N;
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto ex = T->expansion(e);
      auto sg = T->expansion_signs(e);
      for (size_t i = 0; i < ex.size(); ++i) {
        int x = ex[i];
        if (!seen[x]) {
          seen[x] = 1;
          touched.push_back(x);
          acc[x] = 0;
        }
        if (sg[i] > 0) mpz_add(acc[x].get_mpz_t(), acc[x].get_mpz_t(), prod.get_mpz_t());
        else mpz_sub(acc[x].get_mpz_t(), acc[x].get_mpz_t(), prod.get_mpz_t());
      }
    }
  std::sort(touched.begin(), touched.end());
  for (int x : touched) {
    seen[x] = 0;
    if (acc[x] != 0) r.terms_.push_back({x, acc[x]});
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

bool operator==(const BigCyclotomic& a, const BigCyclotomic& b) {
  if (a.N_ != b.N_) {
    int L = lcm_order(a.N_, b.N_);
    return a.embed(L) == b.embed(L);
  }
  return a.den_ == b.den_ && a.terms_ == b.terms_;
}

}  // namespace ellsw
