#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "ellsw/cyclo.hpp"
#include "ellsw/errors.hpp"

using namespace ellsw;
using C = CyclotomicNumber;

namespace {

// Independent oracle: dense rational polynomials reduced modulo Phi_N,
// where Phi_N comes from repeated division of x^N - 1 by Phi_d (d | N, d < N).
using Poly = std::vector<Rational>;

Poly trimmed(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly poly_mod(Poly a, const Poly& m) {  // m monic
  a = trimmed(a);
  while (a.size() >= m.size()) {
    Rational c = a.back();
    size_t s = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[s + i] -= c * m[i];
    a = trimmed(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& m) {
  Poly q(a.size() - m.size() + 1);
  for (size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + m.size() - 1];
    q[k] = c;
    for (size_t i = 0; i < m.size(); ++i) a[k + i] -= c * m[i];
  }
  return q;
}

Poly oracle_phi(int N) {
  Poly p(N + 1);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = poly_div_exact(p, oracle_phi(d));
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly padded(Poly p, size_t n) {
  p.resize(n);
  return p;
}

}  // namespace

TEST_CASE("root_of_unity basics") {
  CHECK(root_of_unity(0, 12) == C(1));
  CHECK(root_of_unity(6, 12) == C(-1));
  CHECK(root_of_unity(1, 3) + root_of_unity(2, 3) == C(-1));
  CHECK(root_of_unity(13, 12) == root_of_unity(1, 12));
  CHECK(root_of_unity(-1, 12) == root_of_unity(11, 12));
  CHECK(root_of_unity(0, 12).as_rational() == Rational(1));
}

TEST_CASE("conjugation and products") {
  CHECK(conjugate(root_of_unity(1, 4)) == root_of_unity(3, 4));

  C one_minus_z = C(1) - root_of_unity(1, 3);
  C one_minus_z2 = C(1) - root_of_unity(2, 3);
  C prod = one_minus_z * one_minus_z2;
  // oracle: (1 - x)(1 - x^2) mod x^2 + x + 1
  Poly o = poly_mod(poly_mul({1, -1}, {1, 0, -1}), oracle_phi(3));
  CHECK(prod.power_basis() == padded(o, 2));
  CHECK(prod.as_rational() == Rational(3));

  C x = C(1) + root_of_unity(1, 8);
  C xx = x * conjugate(x);
  Poly o8 = poly_mod(poly_mul({1, 1}, {1, 0, 0, 0, 0, 0, 0, 1}), oracle_phi(8));
  CHECK(xx.power_basis() == padded(o8, 4));
  CHECK(xx == C(2) + root_of_unity(1, 8) + root_of_unity(-1, 8));
}

TEST_CASE("invert") {
  CHECK(invert(root_of_unity(1, 4)) == root_of_unity(3, 4));
  CHECK(invert(C(2)) == C(Rational(1, 2)));
  C a = C(1) - root_of_unity(1, 3);
  C expect = (C(1) - root_of_unity(2, 3)) * C(Rational(1, 3));
  CHECK(invert(a) == expect);
  CHECK((a * expect).is_one());
  CHECK_THROWS_AS(invert(C(0)), DivisionByZero);
  CHECK_THROWS_AS(invert(root_of_unity(1, 5) * C(0)), DivisionByZero);
}

TEST_CASE("as_rational") {
  C s;
  for (int k = 0; k < 5; ++k) s += root_of_unity(k, 5);
  CHECK(s.as_rational() == Rational(0));
  CHECK_THROWS_AS(root_of_unity(1, 8).as_rational(), NotRational);
  try {
    (void)root_of_unity(1, 8).as_rational();
  } catch (const NotRational& e) {
    CHECK(!e.value().empty());
  }
  CHECK((root_of_unity(1, 5) * root_of_unity(4, 5)).as_rational() == Rational(1));
}

TEST_CASE("basis coincides with power basis for prime powers") {
  for (int N : {2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49}) {
    auto T = field_table(N);
    for (int a = 0; a < T->phi; ++a) CHECK(T->is_basis(a));
  }
  for (int N = 1; N <= 120; ++N) {
    auto T = field_table(N);
    int cnt = 0;
    for (int a = 0; a < N; ++a) cnt += T->is_basis(a);
    CHECK(cnt == euler_phi(N));
    CHECK(T->is_basis(0));
  }
}

TEST_CASE("root of unity to the N is one; root sums vanish") {
  for (int N = 1; N <= 240; ++N) {
    C z = root_of_unity(1, N), p(Rational(1), N);
    for (int i = 0; i < N; ++i) p = p * z;
    CHECK(p.is_one());
    if (N > 1) {
      C s(Rational(0), N);
      for (int k = 0; k < N; ++k) s += root_of_unity(k, N);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("power basis agrees with independent reduction mod Phi_N") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + int(rng() % 90);
    Poly p(N);
    C x(Rational(0), N);
    for (int k = 0; k < N; ++k) {
      if (rng() % 3) continue;
      Rational c(int64_t(rng() % 11) - 5, 1 + int64_t(rng() % 4));
      p[k] = c;
      x += C(c) * root_of_unity(k, N);
    }
    Poly o = padded(poly_mod(p, oracle_phi(N)), euler_phi(N));
    CHECK(x.power_basis() == o);
    CHECK(C::from_power_basis(N, o) == x);
  }
}

TEST_CASE("randomized expressions agree with a floating-point embedding") {
  std::mt19937_64 rng(2024);
  const int orders[] = {3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 30, 36, 40, 60, 84, 105, 120, 210, 240};
  for (int trial = 0; trial < 1000; ++trial) {
    int N = orders[rng() % std::size(orders)];
    auto rnd = [&] {
      C x(Rational(0), N);
      int terms = 1 + int(rng() % 4);
      for (int t = 0; t < terms; ++t)
        x += C(Rational(int64_t(rng() % 9) - 4, 1 + int64_t(rng() % 3))) * root_of_unity(int64_t(rng() % N), N);
      return x;
    };
    C a = rnd(), b = rnd(), c = rnd();
    C e = (a + b) * c - a * conjugate(b) + c * c;
    auto ef = (a.to_complex() + b.to_complex()) * c.to_complex() - a.to_complex() * std::conj(b.to_complex()) +
              c.to_complex() * c.to_complex();
    CHECK(std::abs(e.to_complex() - ef) < 1e-9);
    // equality decided exactly agrees with numeric equality
    C f = c * (a + b) + c * c - conjugate(b) * a;
    CHECK(e == f);
    CHECK((e == e + C(Rational(1, 1000))) == false);
    // field axioms
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("invert on randomized nonzero values") {
  std::mt19937_64 rng(99);
  const int orders[] = {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 30, 60};
  int done = 0;
  while (done < 1000) {
    int N = orders[rng() % std::size(orders)];
    C x(Rational(0), N);
    int terms = 1 + int(rng() % 4);
    for (int t = 0; t < terms; ++t)
      x += C(Rational(int64_t(rng() % 7) - 3, 1 + int64_t(rng() % 2))) * root_of_unity(int64_t(rng() % N), N);
    if (x.is_zero()) continue;
    CHECK((x * invert(x)).is_one());
    ++done;
  }
}

TEST_CASE("closed-form inverse of 1 - zeta") {
  for (int N : {2, 3, 6, 10, 12, 30, 44}) {
    for (int k = 1; k < N; ++k) {
      C direct = invert(C(1) - root_of_unity(k, N));
      CHECK(C::inverse_one_minus_root(k, N) == direct);
    }
  }
  CHECK_THROWS_AS(C::inverse_one_minus_root(12, 12), DivisionByZero);
}

TEST_CASE("embedding preserves value and arithmetic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + int(rng() % 30), s = 1 + int(rng() % 6), M = N * s;
    C a = root_of_unity(int64_t(rng() % N), N) + C(Rational(1, 3));
    C b = root_of_unity(int64_t(rng() % N), N) * C(Rational(-2, 5));
    CHECK((a * b).embed(M) == a.embed(M) * b.embed(M));
    CHECK((a + b).embed(M) == a.embed(M) + b.embed(M));
    CHECK(std::abs(a.embed(M).to_complex() - a.to_complex()) < 1e-12);
    CHECK(a == a.embed(M));
  }
  // mixed orders combine in the lcm field
  CHECK(root_of_unity(1, 4) * root_of_unity(1, 6) == root_of_unity(5, 12));
}

TEST_CASE("galois action and trace") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int N = 2 + int(rng() % 40);
    C x(Rational(0), N);
    for (int t = 0; t < 3; ++t)
      x += C(Rational(int64_t(rng() % 9) - 4, 1 + int64_t(rng() % 3))) * root_of_unity(int64_t(rng() % N), N);
    C sum(Rational(0), N);
    for (int t = 1; t < N; ++t)
      if (gcd64(t, N) == 1) sum += x.galois(t);
    CHECK(sum.as_rational() == x.trace());
  }
  CHECK(root_of_unity(1, 7).trace() == Rational(-1));
  CHECK(C(Rational(3), 10).trace() == Rational(12));
}

TEST_CASE("ramanujan sums and cyclotomic polynomials") {
  CHECK(ramanujan_sum(0, 12) == 4);
  CHECK(ramanujan_sum(1, 12) == 0);
  CHECK(ramanujan_sum(2, 12) == 2);
  CHECK(ramanujan_sum(4, 12) == -2);
  CHECK(ramanujan_sum(6, 12) == -4);
  for (int N = 1; N <= 60; ++N) {
    auto p = cyclotomic_polynomial(N);
    Poly o = oracle_phi(N);
    REQUIRE(p.size() == o.size());
    for (size_t i = 0; i < p.size(); ++i) CHECK(Rational(p[i].get_si()) == o[i]);
  }
}

TEST_CASE("big cyclotomics agree with the checked type") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + int(rng() % 60);
    C a = root_of_unity(int64_t(rng() % N), N) + C(Rational(int64_t(rng() % 5), 2));
    C b = root_of_unity(int64_t(rng() % N), N) * C(Rational(3, 7)) - root_of_unity(int64_t(rng() % N), N);
    CHECK((BigCyclotomic(a) * BigCyclotomic(b)).to_small() == a * b);
    CHECK((BigCyclotomic(a) + BigCyclotomic(b)).to_small() == a + b);
    CHECK((BigCyclotomic(a) - BigCyclotomic(a)).is_zero());
  }
  // products that leave 64-bit range stay exact
  BigCyclotomic p = BigCyclotomic(C(1) + root_of_unity(1, 12));
  BigCyclotomic acc = p;
  for (int i = 0; i < 120; ++i) acc = acc * p;
  CHECK_THROWS_AS((void)acc.to_small(), std::overflow_error);
}

TEST_CASE("big inverse of dense values") {
  std::mt19937_64 rng(17);
  int wide = 0;
  for (int N : {7, 15, 16, 36, 60, 105}) {
    for (int t = 0; t < 6; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < 2 * N; ++i) c.push_back(Rational(int64_t(rng() % 13) - 6, 1 + int64_t(rng() % 5)));
      C x = C::from_power_basis(N, c);
      if (x.is_zero()) continue;
      BigCyclotomic X(x), Xi = X.invert();
      CHECK(X * Xi == BigCyclotomic(C(1)).embed(N));
      std::optional<C> small;
      try {
        small = invert(x);
      } catch (const std::overflow_error&) {
        ++wide;
      }
      if (small) CHECK(BigCyclotomic(*small) == Xi);
    }
  }
  CHECK(wide > 0);  // dense inverses in degree >= 8 leave the 64-bit range
  CHECK(BigCyclotomic(root_of_unity(3, 10)).invert() == BigCyclotomic(root_of_unity(7, 10)));
  CHECK_THROWS_AS((void)BigCyclotomic::zero(5).invert(), DivisionByZero);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  C big = C(Rational(int64_t(1) << 62)) * root_of_unity(1, 5);
  CHECK_THROWS_AS((void)(big * big), std::overflow_error);
}

TEST_CASE("hash agrees with equality at fixed order") {
  C a = root_of_unity(7, 12) * C(Rational(2, 3));
  C b = C::from_terms(12, 3, {{7, 2}});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}
