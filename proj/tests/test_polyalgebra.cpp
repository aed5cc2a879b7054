#include "doctest.h"

#include "nmsym/inequalities.hpp"
#include "nmsym/polyalgebra.hpp"
#include "nmsym/rng.hpp"

using namespace nmsym;

namespace {

SymPoint pt(std::initializer_list<long long> vals) {
  std::vector<Scalar> v;
  for (auto x : vals) v.emplace_back(x);
  return SymPoint(std::move(v));
}

UniPoly upoly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (auto v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

SymPoint random_point(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.next_rational(100, 9));
  return SymPoint(std::move(v));
}

}  // namespace

TEST_CASE("poly_from_roots on worked examples") {
  CHECK(poly_from_roots(pt({1, 2})) == upoly({2, -3, 1}));
  CHECK(poly_from_roots(pt({1, 2, 3})) == upoly({-6, 11, -6, 1}));
  CHECK(poly_from_roots(pt({0, 0})) == upoly({0, 0, 1}));

  for (int trial = 0; trial < 20; ++trial) {
    CounterRng rng(51, 0, static_cast<std::uint64_t>(trial));
    std::size_t n = static_cast<std::size_t>(rng.next_int(1, 7));
    SymPoint x = random_point(rng, n);
    UniPoly p = poly_from_roots(x);
    CHECK(p.degree() == static_cast<long long>(n));
    for (const auto& e : x.entries()) CHECK(p.eval(e.rat()) == 0);
    auto counts = sturm_real_roots(p);
    CHECK(counts.all_roots_real);
  }
}

TEST_CASE("quartic_reduction worked example and realness closure") {
  // all-ones vector, k = 3: every E_j = 1, so the quartic is (t-1)^4
  SymPoint ones = pt({1, 1, 1, 1, 1});
  CHECK(quartic_reduction(ones, 3) == upoly({1, -4, 6, -4, 1}));

  CHECK_THROWS_AS(quartic_reduction(pt({1, 2, 3}), 3), precondition_error);
  CHECK_THROWS_AS(quartic_reduction(pt({1, 2, 3, 4}), 2), precondition_error);

  for (int trial = 0; trial < 40; ++trial) {
    CounterRng rng(52, 1, static_cast<std::uint64_t>(trial));
    std::size_t n = static_cast<std::size_t>(rng.next_int(4, 9));
    SymPoint x = random_point(rng, n);
    for (long long k = 3; k <= static_cast<long long>(n) - 1; ++k) {
      UniPoly q = quartic_reduction(x, k);
      if (q.degree() < 1) continue;
      CHECK(sturm_real_roots(q).all_roots_real);
    }
  }
}

TEST_CASE("truncation_reduction worked example and realness closure") {
  // all-ones, k = 2: sum_j (-1)^j C(3,j) t^{3-j} = (t-1)^3
  CHECK(truncation_reduction(pt({1, 1, 1}), 2) == upoly({-1, 3, -3, 1}));
  // (1,2,3), k = 1: t^2 - 2 E_1 t + E_2 = t^2 - 4t + 11/3
  CHECK(truncation_reduction(pt({1, 2, 3}), 1) ==
        UniPoly({Rational(11, 3), Rational(-4), Rational(1)}));

  CHECK_THROWS_AS(truncation_reduction(pt({1, 2, 3}), 0), precondition_error);
  CHECK_THROWS_AS(truncation_reduction(pt({1, 2, 3}), 3), precondition_error);

  for (int trial = 0; trial < 40; ++trial) {
    CounterRng rng(52, 2, static_cast<std::uint64_t>(trial));
    std::size_t n = static_cast<std::size_t>(rng.next_int(2, 9));
    SymPoint x = random_point(rng, n);
    for (long long k = 1; k <= static_cast<long long>(n) - 1; ++k) {
      UniPoly q = truncation_reduction(x, k);
      if (q.degree() < 1) continue;
      CHECK(sturm_real_roots(q).all_roots_real);
    }
  }
}

TEST_CASE("epsilon_perturb") {
  SymPoint y = pt({0, 0, 3, -2});
  SymPoint z = epsilon_perturb(y, Scalar(Rational(1, 10)));
  CHECK(z.entries()[0].rat() == Rational(1, 10));
  CHECK(z.entries()[1].rat() == Rational(1, 10));
  CHECK(z.entries()[2].rat() == 3);
  CHECK(z.entries()[3].rat() == -2);

  // no zeros: identity
  SymPoint w = epsilon_perturb(pt({1, 2}), Scalar(1));
  CHECK(w.entries()[0].rat() == 1);

  CHECK_THROWS_AS(epsilon_perturb(pt({1, 0, 2}), Scalar(1)), precondition_error);
  CHECK_THROWS_AS(epsilon_perturb(pt({0, 1}), Scalar(0)), precondition_error);
  CHECK_THROWS_AS(epsilon_perturb(pt({0, 1}), Scalar(-1)), precondition_error);
}

TEST_CASE("perturbation continuity of the gap") {
  // gap at eps -> 0 approaches the gap at the degenerate point
  SymPoint y = pt({0, 0, 1, 2, 3});
  OperatorSpec spec = TwoShift{Scalar(1), Scalar(2)};
  Scalar base = newton_gap(y, spec, 3).gap;
  Scalar prev_dist{-1};
  for (long long denom : {10, 100, 1000, 10000}) {
    SymPoint z = epsilon_perturb(y, Scalar(Rational(1, denom)));
    Scalar dist = abs(newton_gap(z, spec, 3).gap - base);
    if (prev_dist.sign() >= 0) CHECK(dist <= prev_dist);
    prev_dist = dist;
  }
  CHECK(prev_dist < Scalar(Rational(1, 1000)));
}

TEST_CASE("esf_table over polynomial entries") {
  std::vector<std::string> vars{"u", "v"};
  MultiPoly u = MultiPoly::variable(vars, 0);
  MultiPoly v = MultiPoly::variable(vars, 1);
  auto t = esf_table({u, v, u * v});
  CHECK(t[0] == MultiPoly::constant(vars, Rational(1)));
  CHECK(t[1] == u + v + u * v);
  CHECK(t[2] == u * v + u * (u * v) + v * (u * v));
  CHECK(t[3] == (u * v) * (u * v));
}

TEST_CASE("symbolic identities hold") {
  CHECK(verify_lemma21());
  CHECK(verify_sos_n5());
  for (long long k = 2; k <= 6; ++k) CHECK(verify_eq32(k));
  for (long long k = 2; k <= 5; ++k) CHECK(verify_eq33(k));
  CHECK_THROWS_AS(verify_eq32(1), precondition_error);
  CHECK_THROWS_AS(verify_eq32(7), precondition_error);
  CHECK_THROWS_AS(verify_eq33(6), precondition_error);
}

TEST_CASE("identity_sample agrees with the symbolic check") {
  CHECK(identity_sample(IdentityId::Lemma21, 0, 10, 77));
  CHECK(identity_sample(IdentityId::SosN5, 0, 10, 77));
  CHECK(identity_sample(IdentityId::Eq32, 4, 10, 77));
  CHECK(identity_sample(IdentityId::Eq33, 3, 10, 77));
  // same seed, same verdict
  CHECK(identity_sample(IdentityId::Eq32, 4, 10, 77));
}

TEST_CASE("parse_identity_id") {
  CHECK(parse_identity_id("lemma21") == IdentityId::Lemma21);
  CHECK(parse_identity_id("sos5") == IdentityId::SosN5);
  CHECK(parse_identity_id("eq32") == IdentityId::Eq32);
  CHECK(parse_identity_id("eq33") == IdentityId::Eq33);
  CHECK_THROWS_AS(parse_identity_id("nope"), precondition_error);
}
