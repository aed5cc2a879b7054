#include "doctest.h"

#include "nmsym/counterexamples.hpp"

using namespace nmsym;

namespace {

Scalar rat(long long p, long long q = 1) { return Scalar(Rational(p, q)); }

}  // namespace

TEST_CASE("case1 frozen values") {
  auto r = construct_case1(5, rat(1), rat(1));
  CHECK(r.gap == rat(-27, 100));
  REQUIRE(r.closed_form.has_value());
  CHECK(*r.closed_form == rat(-27, 100));
  CHECK(r.negative);
  CHECK(r.z0.size() == 5);
  CHECK(r.z0[0] == rat(2));
  CHECK(r.z0[2] == rat(-1));

  r = construct_case1(4, rat(1), rat(1));
  CHECK(r.gap == rat(-1, 9));
  CHECK(*r.closed_form == rat(-1, 9));
  CHECK(r.negative);
}

TEST_CASE("case2 frozen values") {
  auto r = construct_case2(5, rat(1, 2), rat(1));
  CHECK(r.gap == rat(-567, 800));
  CHECK(r.negative);

  r = construct_case2(5, rat(0), rat(1));
  CHECK(r.gap == rat(-27, 50));
  CHECK(r.negative);
}

TEST_CASE("high-k frozen values") {
  auto r = construct_highk(6, 4, rat(1), rat(1));
  CHECK(r.gap == rat(-1, 5));
  CHECK(r.negative);
  CHECK_FALSE(r.exploratory);

  r = construct_highk(7, 5, rat(1), rat(1));
  CHECK(r.gap == rat(-3, 49));
  CHECK(r.negative);

  r = construct_highk(5, 4, rat(1), rat(1, 2));
  CHECK(r.gap == rat(-7, 200));

  // k = 5 beyond n = 9 carries no sign assertion
  r = construct_highk(10, 5, rat(1), rat(1));
  CHECK(r.exploratory);
}

TEST_CASE("gap is even in c and in d") {
  auto a = construct_case1(6, rat(3, 2), rat(1));
  auto b = construct_case1(6, rat(-3, 2), rat(1));
  auto c = construct_case1(6, rat(3, 2), rat(-1));
  CHECK(a.gap == b.gap);
  CHECK(a.gap == c.gap);

  auto p = construct_case2(5, rat(1, 3), rat(1));
  auto q = construct_case2(5, rat(-1, 3), rat(-1));
  CHECK(p.gap == q.gap);
}

TEST_CASE("gap scales as the sixth power") {
  Scalar t = rat(3);
  auto base = construct_case1(5, rat(1), rat(1));
  auto scaled = construct_case1(5, rat(3), rat(3));
  CHECK(scaled.gap == pow(t, 6) * base.gap);

  auto b2 = construct_case2(5, rat(1, 2), rat(1));
  auto s2 = construct_case2(5, rat(3, 2), rat(3));
  CHECK(s2.gap == pow(t, 6) * b2.gap);
}

TEST_CASE("parameter domains are enforced and separated") {
  CHECK_THROWS_AS(construct_case1(3, rat(1), rat(1)), precondition_error);
  CHECK_THROWS_AS(construct_case1(5, rat(0), rat(1)), precondition_error);
  CHECK_THROWS_AS(construct_case1(5, rat(1), rat(0)), precondition_error);
  // |c| < |d| belongs to case 2
  CHECK_THROWS_AS(construct_case1(5, rat(1, 2), rat(1)), precondition_error);

  CHECK_THROWS_AS(construct_case2(3, rat(0), rat(1)), precondition_error);
  CHECK_THROWS_AS(construct_case2(5, rat(1), rat(0)), precondition_error);
  // |c| >= |d| belongs to case 1
  CHECK_THROWS_AS(construct_case2(5, rat(1), rat(1)), precondition_error);

  CHECK_THROWS_AS(construct_highk(6, 3, rat(1), rat(1)), precondition_error);
  CHECK_THROWS_AS(construct_highk(6, 6, rat(1), rat(1)), precondition_error);
  CHECK_THROWS_AS(construct_highk(4, 4, rat(1), rat(1)), precondition_error);
}

TEST_CASE("probe_gap matches the constructions") {
  auto r = construct_case1(5, rat(1), rat(1));
  SymPoint z(r.z0);
  Scalar a = rat(2) * r.c;
  Scalar b = r.c * r.c + r.d * r.d;
  auto g = probe_gap(z, a, b, 3);
  CHECK(g.gap == r.gap);

  auto h = construct_highk(6, 4, rat(1), rat(1));
  SymPoint zh(h.z0);
  auto gh = probe_gap(zh, rat(2) * h.c, h.c * h.c + h.d * h.d, 4);
  CHECK(gh.gap == h.gap);

  // probe carries no sign assertion: positive gaps pass through
  std::vector<Scalar> pos{rat(1), rat(2), rat(3), rat(4)};
  auto gp = probe_gap(SymPoint(pos), rat(0), rat(0), 2);
  CHECK(gp.gap.sign() > 0);
}
