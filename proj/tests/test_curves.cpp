#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "ellsw/curves.hpp"
#include "ellsw/errors.hpp"
#include "ellsw/groups.hpp"

using namespace ellsw;

#ifndef ELLSW_DATA_DIR
#define ELLSW_DATA_DIR "data"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrbifoldPointRecord rec(int64_t m, int64_t l, std::optional<int64_t> lp, int64_t ambient) {
  return {m, l, lp, ambient};
}

// Member class C with C.C0 = 1: C.C = |G|/4m^2, K.C = -(m+1)/m.
CurveClassData member_class(const GroupSpec& s) {
  return {Rational(group_order(s), 4 * int64_t(s.m) * s.m), Rational(-(s.m + 1), s.m)};
}

}  // namespace

TEST_CASE("virtual genus") {
  CHECK(virtual_genus({Rational(2, 3), Rational(-4, 3)}) == Rational(2, 3));
  CHECK(virtual_genus({Rational(0), Rational(-2)}) == Rational(0));
  // r c1(E) with r = 7/12 on OO m=5: C.C = r^2 * 12/5, K.C = -r * 6/5
  Rational r(7, 12);
  Rational expect = (r * r * Rational(12, 5) - r * Rational(6, 5)) / Rational(2) + Rational(1);
  CHECK(virtual_genus({r * r * Rational(12, 5), -r * Rational(6, 5)}) == expect);
  CHECK(expect == Rational(127, 120));
  // closed form |G|/8m^2 - (m+1)/2m + 1
  for (auto s : enumerate_specs(600)) {
    Rational m(s.m);
    CHECK(virtual_genus(member_class(s)) ==
          Rational(group_order(s), 8 * int64_t(s.m) * s.m) - Rational(s.m + 1, 2 * s.m) + Rational(1));
  }
}

TEST_CASE("orbifold genus") {
  CHECK(orbifold_genus(0, {6}) == Rational(5, 12));
  CHECK(orbifold_genus(0, {}) == Rational(0));
  CHECK(orbifold_genus(1, {2, 3}) == Rational(19, 12));
  CHECK_THROWS_AS(orbifold_genus(0, {0}), DomainError);
}

TEST_CASE("k_z at p0") {
  CHECK(kz_min_at_p0(6, 24) == Rational(1, 4));
  CHECK(kz_min_at_p0(2, 120) == Rational(59, 4));
  CHECK(kz_min_at_p0(1, 1) == Rational(0));
  CHECK_THROWS_AS(kz_min_at_p0(5, 24), DomainError);
}

TEST_CASE("k_z lower bound") {
  CHECK(kz_lower_bound(rec(5, 1, std::nullopt, 5), 5) == Rational(0));
  CHECK(kz_lower_bound(rec(4, 3, 3, 4), 4) == Rational(1, 2));
  CHECK(kz_lower_bound(rec(1, 1, 1, 1), 1) == Rational(0));
  CHECK_THROWS_AS(kz_lower_bound(rec(5, 2, std::nullopt, 5), 5), DomainError);
  CHECK_THROWS_AS(kz_lower_bound(rec(4, 1, std::nullopt, 8), 8), DomainError);
  // second term: n/m = 2, l = l' = 1 gives (1/2m)(0 + 1)
  CHECK(kz_lower_bound(rec(2, 1, 1, 4), 4) == Rational(1, 4));
}

TEST_CASE("k_[z,z'] lower bound") {
  CHECK(kpair_lower_bound(rec(4, 3, 1, 4), rec(4, 3, 1, 4), 4) == Rational(3, 4));
  CHECK(kpair_lower_bound(rec(1, 1, 1, 1), rec(1, 1, 1, 1), 1) == Rational(1));
  // l'_i infinite: only l_i l'_j survives
  CHECK(kpair_lower_bound(rec(5, 1, std::nullopt, 5), rec(5, 4, 4, 5), 5) == Rational(4, 5));
  CHECK_THROWS_AS(kpair_lower_bound(rec(5, 1, std::nullopt, 5), rec(5, 1, std::nullopt, 5), 5), DomainError);
  // min(l, 3 l') >= 3 for l >= 3
  for (int64_t l = 3; l < 9; ++l)
    for (int64_t lp = 1; lp < 5; ++lp) CHECK(kpair_lower_bound(rec(4, l, lp, 4), rec(4, 3, 1, 4), 4) >= Rational(3, 4));
}

TEST_CASE("intersection with C0 and slack") {
  CHECK(intersection_with_c0({rec(5, 2, 2, 5)}) == Rational(2, 5));
  CHECK(intersection_with_c0({}) == Rational(0));
  CHECK(intersection_with_c0({rec(2, 1, 1, 2), rec(3, 1, 1, 3)}) == Rational(5, 6));

  CHECK(adjunction_slack(Rational(2, 3), {Rational(5, 12), Rational(1, 4)}) == Rational(0));
  CHECK(adjunction_slack(Rational(1), {Rational(1)}) == Rational(0));
  Rational rhs = Rational(1, 2) * (Rational(1) - Rational(1, 5)) * Rational(2) + Rational(2, 5) + Rational(4, 5) +
                 Rational(1, 2);
  CHECK(rhs == Rational(5, 2));
  CHECK(adjunction_slack(Rational(20, 11), {rhs}) < Rational(0));

  // adding terms never increases slack
  std::mt19937 rng(5);
  std::vector<Rational> terms;
  Rational prev = adjunction_slack(Rational(3), terms);
  for (int i = 0; i < 50; ++i) {
    terms.push_back(Rational(int64_t(rng() % 9), 1 + int64_t(rng() % 6)));
    Rational cur = adjunction_slack(Rational(3), terms);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("Fredholm index") {
  for (int m : {1, 3, 5, 7, 11}) CHECK(fredholm_index(Rational(m + 1, m), 0, {{2 * m, 1, 1}}) == 6);
  CHECK(fredholm_index(Rational(2), 0, {}) == 8);
  // II m=7, a point of order 70: integrality forces (m1+m2)/70 = k/7 with k = 8 mod 7
  for (int64_t s = 2; s <= 140; ++s) {
    bool integral = (Rational(8, 7) - Rational(s, 70)).den() == 1;
    if (integral) {
      CHECK(Rational(s, 70).den() == 7);
      CHECK(fredholm_index(Rational(8, 7), 0, {{70, 1, s - 1}}) % 2 == 0);
    } else {
      CHECK_THROWS_AS(fredholm_index(Rational(8, 7), 0, {{70, 1, s - 1}}), DomainError);
    }
  }
}

TEST_CASE("member class closes the adjunction identity for every family") {
  // g(C) = g_Sigma + k_min for the member class through p0 with a single
  // orbifold point of order 2m, at the smallest parameters of each family
  for (GroupSpec s : {GroupSpec{Family::DD, 1, 2}, GroupSpec{Family::DD, 3, 2}, GroupSpec{Family::DC, 2, 3},
                      GroupSpec{Family::TT, 1, 0}, GroupSpec{Family::TD, 3, 0}, GroupSpec{Family::OO, 1, 0},
                      GroupSpec{Family::II, 1, 0}}) {
    CAPTURE(spec_label(s));
    Rational lhs = virtual_genus(member_class(s));
    CHECK(lhs == orbifold_genus(0, {2 * s.m}) + kz_min_at_p0(2 * s.m, group_order(s)));
  }
}

TEST_CASE("audit documents") {
  auto dd = evaluate_audit(slurp(std::string(ELLSW_DATA_DIR) + "/audit/member_dd_3_2.audit"));
  CHECK(dd.lhs == Rational(2, 3));
  REQUIRE(dd.rhs.size() == 2);
  CHECK(dd.rhs[0].value == Rational(5, 12));
  CHECK(dd.rhs[1].value == Rational(1, 4));
  CHECK(dd.slack == Rational(0));
  CHECK(dd.slack.str() == "0/1");

  for (const char* f : {"/audit/ii_11_p3_pair.audit", "/audit/ii_11_p3_pair_23.audit"}) {
    auto ii = evaluate_audit(slurp(std::string(ELLSW_DATA_DIR) + f));
    CHECK(ii.lhs == Rational(20, 11));
    CHECK(ii.rhs_total >= Rational(5, 2));
    CHECK(ii.slack <= Rational(20, 11) - Rational(5, 2));
    CHECK(ii.slack < Rational(0));
  }

  CHECK_THROWS_AS(evaluate_audit("{\"class\": {\"CC\": \"1\"}"), InputError);
  CHECK_THROWS_AS(evaluate_audit("{\"class\": {\"CC\": \"1/0\", \"KC\": \"0\"}}"), InputError);
  CHECK_THROWS_AS(evaluate_audit("{\"class\": {\"CC\": \"1\", \"KC\": \"0\"}, \"points\": [{\"order\": 0}]}"),
                  InputError);
  CHECK_THROWS_AS(
      evaluate_audit("{\"class\": {\"CC\": \"1\", \"KC\": \"0\"}, \"points\": [{\"order\": 5, \"group_order\": 24}]}"),
      InputError);
  try {
    evaluate_audit("{\"class\": {\"CC\": \"1\", \"KC\": \"0\"}, \"pairs\": [[0, 1]]}");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("/pairs/0") != std::string::npos);
  }
  try {
    evaluate_audit("{\n  \"class\": {\n    \"CC\": 1,,\n  }\n}");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
