#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "ellsw/errors.hpp"
#include "ellsw/swindex.hpp"

using namespace ellsw;

namespace {

using cld = std::complex<long double>;

cld to_cld(const CyclotomicNumber& x) {
  auto c = x.to_complex();
  return {c.real(), c.imag()};
}

// Numeric oracle: sum of chi in long double from the matrix eigenvalues.
cld numeric_sum_chi(const GroupSpec& s) {
  FiniteGroup G = build_group(s);
  Character r = rho(G);
  cld total = 0;
  for (size_t i = 1; i < G.order(); ++i) {
    const auto& g = G.element(i);
    cld a = to_cld(g.e[0]), b = to_cld(g.e[1]), c = to_cld(g.e[2]), d = to_cld(g.e[3]);
    cld tr = a + d, det = a * d - b * c;
    cld sq = std::sqrt(tr * tr - det * 4.0L);
    cld l1 = (tr + sq) / 2.0L, l2 = (tr - sq) / 2.0L;
    cld rv = to_cld(r.value(i));
    total += 2.0L * (rv - 1.0L) / ((1.0L - std::conj(l1)) * (1.0L - std::conj(l2)));
  }
  return total;
}

Rational get(const LabeledSums& s, const std::string& k) {
  for (auto& [name, v] : s)
    if (name == k) return v;
  FAIL("missing label " << k);
  return Rational(0);
}

}  // namespace

TEST_CASE("chi examples") {
  const int N = 4;
  UnitaryElement minus = UnitaryElement::scalar(2, N);
  CHECK(chi(minus, {2, 4}) == CyclotomicNumber(-1));  // eigenvalues (-1,-1), rho = -1
  CHECK(chi(minus, {0, 1}).is_zero());
  CHECK_THROWS_AS(chi(UnitaryElement::diagonal(0, 1, 4), {1, 4}), DomainError);
  CHECK_THROWS_AS(chi(UnitaryElement::identity(4), {1, 4}), DomainError);

  // Lambda3 = {y^l} has rho = 1, so chi vanishes there
  for (GroupSpec s : {GroupSpec{Family::DD, 3, 5}, GroupSpec{Family::DC, 2, 5}}) {
    FiniteGroup G = build_group(s);
    Character r = rho(G);
    UnitaryElement y = G.generators()[2], p = y;
    for (int l = 1; l <= s.n - 1; ++l, p = p * y) {
      int idx = G.index_of(p);
      CHECK(chi(p, {r.exps[idx], r.order}).is_zero());
    }
  }
}

TEST_CASE("chi agrees with a floating-point evaluation; conjugate pairs are real") {
  std::mt19937 rng(3);
  for (GroupSpec s : {GroupSpec{Family::DD, 5, 3}, GroupSpec{Family::TT, 5, 0}, GroupSpec{Family::II, 7, 0}}) {
    FiniteGroup G = build_group(s);
    Character r = rho(G);
    for (int t = 0; t < 200; ++t) {
      int i = 1 + int(rng() % (G.order() - 1));
      const auto& g = G.element(i);
      CyclotomicNumber v = chi(g, {r.exps[i], r.order});
      auto e = eigen_exponents(g);
      std::complex<double> l1 = std::polar(1.0, 2 * M_PI * e.j1 / e.N), l2 = std::polar(1.0, 2 * M_PI * e.j2 / e.N);
      std::complex<double> expect = 2.0 * (r.value(i).to_complex() - 1.0) / ((1.0 - std::conj(l1)) * (1.0 - std::conj(l2)));
      CHECK(std::abs(v.to_complex() - expect) < 1e-8);
      int j = G.inverse(i);
      CyclotomicNumber w = v + chi(G.element(j), {r.exps[j], r.order});
      CHECK(w == w.conjugate());
    }
  }
}

TEST_CASE("singular point contribution") {
  CHECK(singular_point_contribution({Family::DD, 5, 2}) == Rational(2, 5));
  CHECK(singular_point_contribution({Family::OO, 1, 0}) == Rational(0));
  CHECK(singular_point_contribution({Family::II, 7, 0}) == Rational(-10, 7));
}

TEST_CASE("S breakdown records") {
  auto oo5 = s_breakdown({Family::OO, 5, 0});
  CHECK(get(oo5, "S0") == Rational(16));
  CHECK(get(oo5, "S1") == Rational(-240));
  CHECK(get(oo5, "S2") == Rational(-160));
  CHECK(get(oo5, "S3") == Rational(0));
  auto ii29 = s_breakdown({Family::II, 29, 0});
  CHECK(get(ii29, "S0") == Rational(108));
  CHECK(get(ii29, "S1") == Rational(1392));
  CHECK(get(ii29, "S2") == Rational(0));
  CHECK(get(ii29, "S3") == Rational(-1740));
  // m < n: Lambda2 = 2mn((-1)^delta - 1)
  for (GroupSpec s : {GroupSpec{Family::DD, 3, 4}, GroupSpec{Family::DD, 3, 7}, GroupSpec{Family::DC, 2, 5},
                      GroupSpec{Family::DD, 5, 7}}) {
    int64_t delta = s.n / s.m;
    CHECK(get(s_breakdown(s), "Lambda2") == Rational(2 * s.m * s.n * ((delta % 2 ? -1 : 1) - 1)));
  }
}

TEST_CASE("exact sums agree with a numeric oracle") {
  for (GroupSpec s : {GroupSpec{Family::DD, 5, 2}, GroupSpec{Family::DD, 3, 7}, GroupSpec{Family::DC, 4, 3},
                      GroupSpec{Family::TT, 7, 0}, GroupSpec{Family::TD, 9, 0}, GroupSpec{Family::OO, 7, 0},
                      GroupSpec{Family::II, 11, 0}}) {
    auto rep = sw_dimension(s, ChiMethod::PerElement);
    cld num = numeric_sum_chi(s);
    CAPTURE(spec_label(s));
    long double exact = (long double)rep.sum_chi.num() / rep.sum_chi.den();
    CHECK(std::abs(num.real() - exact) < 1e-6L);
    CHECK(std::abs(num.imag()) < 1e-6L);
  }
}

TEST_CASE("d(E) examples and closed forms") {
  CHECK(d_E({Family::TT, 1, 0}) == 8);
  CHECK(d_E({Family::II, 7, 0}) == 4);
  CHECK(d_E({Family::OO, 13, 0}) == 2);
  CHECK(d_E({Family::OO, 1, 0}) == 14);
  CHECK(d_E({Family::II, 1, 0}) == 32);
  CHECK(closed_form_d_E({Family::DD, 3, 8}) == 4);
  CHECK(closed_form_d_E({Family::DD, 3, 7}) == 4);
  CHECK(closed_form_d_E({Family::DD, 7, 2}) == 2);
  CHECK(closed_form_d_E({Family::DD, 1, 3}) == 4);  // delta = 3: 3 + 2 - 1
}

TEST_CASE("both evaluation routes agree; d(E) matches the closed form") {
  for (auto s : enumerate_specs(1000)) {
    FiniteGroup G = build_group(s);
    auto b = sw_dimension(G, ChiMethod::GaloisOrbit);
    CAPTURE(spec_label(s));
    CHECK(b.d_E == closed_form_d_E(s));
    CHECK(b.d_E % 2 == 0);
    Rational total;
    for (auto& [k, v] : b.s_breakdown) total += v;
    CHECK(total == b.sum_chi);
    if (G.order() <= 400) {
      auto a = sw_dimension(G, ChiMethod::PerElement);
      CHECK(a.s_breakdown == b.s_breakdown);
    }
    if (s.dihedral()) {
      auto [l1, l2] = dihedral_closed_sums(s);
      CHECK(b.s_breakdown[0].second == l1);
      CHECK(b.s_breakdown[1].second == l2);
      CHECK(b.s_breakdown[2].second == Rational(0));
    }
  }
}

TEST_CASE("sector terms") {
  SectorData d;
  d.theta_E = {0, 2};
  d.theta1 = {1, 2};
  d.theta2 = {1, 2};
  CHECK(sector0_term(d, 3).is_zero());
  d.theta_E = {1, 2};
  CHECK(sector0_term(d, 2) == CyclotomicNumber(Rational(-1, 2)));
  d.theta2 = {0, 5};
  CHECK_THROWS_AS(sector0_term(d, 2), DomainError);

  SectorData e;
  e.dimension = 1;
  e.theta_E = {0, 1};
  e.theta = {1, 3};
  e.c1TX = Rational(5);
  e.c1N = Rational(-2);
  CHECK(sector1_term(e).is_zero());
  e.theta_E = {1, 2};
  e.theta = {1, 2};
  e.c1E = 0;
  e.c1TX = 0;
  e.c1N = 1;
  CHECK(sector1_term(e) == CyclotomicNumber(-1));
  e.theta = {0, 2};
  CHECK_THROWS_AS(sector1_term(e), DomainError);

  // numeric oracle over random data, and conjugate-pair symmetry
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    SectorData s;
    s.dimension = 1;
    int N = 3 + int(rng() % 20);
    s.theta_E = {int64_t(rng() % N), N};
    s.theta = {1 + int64_t(rng() % (N - 1)), N};
    s.c1E = Rational(int64_t(rng() % 7) - 3, 1 + int64_t(rng() % 4));
    s.c1TX = Rational(int64_t(rng() % 7) - 3, 1 + int64_t(rng() % 4));
    s.c1N = Rational(int64_t(rng() % 7) - 3, 1 + int64_t(rng() % 4));
    auto z = [&](RootValue r) { return std::polar(1.0, 2 * M_PI * r.k / r.N); };
    auto q = [](const Rational& r) { return double(r.num()) / double(r.den()); };
    std::complex<double> eE = z(s.theta_E), em = std::conj(z(s.theta));
    std::complex<double> expect = 2.0 * eE * q(s.c1E) / (1.0 - em) + (eE - 1.0) * q(s.c1TX) / (1.0 - em) -
                                  2.0 * em * (eE - 1.0) * q(s.c1N) / ((1.0 - em) * (1.0 - em));
    CHECK(std::abs(sector1_term(s).to_complex() - expect) < 1e-9);
    SectorData c = s;
    c.theta_E.k = -s.theta_E.k;
    c.theta.k = -s.theta.k;
    CyclotomicNumber pair = sector1_term(s) + sector1_term(c);
    CHECK(pair == pair.conjugate());
  }
}

TEST_CASE("I2 term") {
  CHECK(i2_term(Rational(12), Rational(-2)) == Rational(14));
  CHECK(i2_term(Rational(1), Rational(0)) == Rational(1));
  CHECK(i2_term(Rational(30, 7), Rational(-8, 7)) == Rational(38, 7));
}
