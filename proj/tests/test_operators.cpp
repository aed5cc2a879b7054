#include "doctest.h"

#include "nmsym/operators.hpp"
#include "nmsym/rng.hpp"

using namespace nmsym;

namespace {

SymPoint pt(std::initializer_list<long long> vals) {
  std::vector<Scalar> v;
  for (auto x : vals) v.emplace_back(x);
  return SymPoint(std::move(v));
}

Scalar rat(long long p, long long q = 1) { return Scalar(Rational(p, q)); }

SymPoint random_point(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.next_rational(1000, 20));
  return SymPoint(std::move(v));
}

}  // namespace

TEST_CASE("eval_S basics and the four-variable equality point") {
  CHECK(eval_S(pt({1, 2, 3}), Scalar(0), Scalar(0), 2) == rat(11, 3));
  // two entries pinned at -alpha: S_2 = (z3 z4 + a z3 + a z4 + a^2)/6,
  // S_3 = -a S_2, S_4 = a^2 S_2
  SymPoint z = pt({-1, -1, 2, 3});
  CHECK(eval_S(z, Scalar(1), Scalar(1), 2) == rat(2));
  CHECK(eval_S(z, Scalar(1), Scalar(1), 3) == rat(-2));
  CHECK(eval_S(z, Scalar(1), Scalar(1), 4) == rat(2));
}

TEST_CASE("eval_S_prime and the conversion identity") {
  SymPoint x = pt({1, 2, 3});
  for (long long k = 0; k <= 4; ++k)
    CHECK(eval_S_prime(x, Scalar(3), Scalar(2), k) == eval_S(x, Scalar(1), Scalar(2), k));
  CHECK(eval_S_prime(pt({2, 2, -1, -1, -1}), Scalar(0), Scalar(1), 3) == rat(1, 10));
  CHECK(eval_S_prime(x, Scalar(0), Scalar(0), 2) == rat(11, 3));
}

TEST_CASE("eval_S_ks basics") {
  CHECK(eval_S_ks(pt({1, 2, 3}), Scalar(1), 1, 2) == rat(17, 3));
  CHECK(eval_S_ks(pt({1, 2, 3}), Scalar(0), 3, 2) == rat(11, 3));
  CHECK_THROWS_AS(eval_S_ks(pt({1, 2, 3}), Scalar(1), 0, 2), precondition_error);

  // s=2 reproduces TwoShift(alpha, alpha)
  CounterRng rng(21, 0, 0);
  SymPoint x = random_point(rng, 6);
  Scalar alpha{rng.next_rational(50, 7)};
  for (long long k = 0; k <= 7; ++k)
    CHECK(eval_S_ks(x, alpha, 2, k) == eval_S(x, alpha, alpha, k));
}

TEST_CASE("consistency triangle across the three families") {
  CounterRng rng(22, 1, 0);
  for (int trial = 0; trial < 20; ++trial) {
    CounterRng r(22, 1, static_cast<std::uint64_t>(trial));
    SymPoint x = random_point(r, 5);
    Scalar a{r.next_rational(30, 5)}, b{r.next_rational(30, 5)};
    for (long long k = -1; k <= 6; ++k) {
      CHECK(eval_S(x, a, b, k) == eval_S_prime(x, a + b, a * b, k));
      CHECK(eval_S(x, a, a, k) == eval_S_ks(x, a, 2, k));
    }
  }
  (void)rng;
}

TEST_CASE("negative k picks up the out-of-range convention") {
  SymPoint x = pt({1, 2, 3});
  // S_0 = E_0 + (a+b) E_{-1} + ab E_{-2} = 1
  CHECK(eval_S(x, Scalar(4), Scalar(5), 0) == rat(1));
  CHECK(eval_S(x, Scalar(4), Scalar(5), -3) == rat(0));
}

TEST_CASE("classify_quadratic") {
  auto r = classify_quadratic(Scalar(3), Scalar(2));
  auto* rr = std::get_if<RealRoots>(&r);
  REQUIRE(rr != nullptr);
  CHECK(rr->alpha == rat(1));
  CHECK(rr->beta == rat(2));

  r = classify_quadratic(Scalar(2), Scalar(1));
  rr = std::get_if<RealRoots>(&r);
  REQUIRE(rr != nullptr);
  CHECK(rr->alpha == rat(1));
  CHECK(rr->beta == rat(1));

  r = classify_quadratic(Scalar(0), Scalar(1));
  auto* cr = std::get_if<ComplexRoots>(&r);
  REQUIRE(cr != nullptr);
  CHECK(cr->c == rat(0));
  CHECK(cr->d_squared == rat(1));

  // disc = 8, not a rational square
  r = classify_quadratic(Scalar(0), rat(-2));
  CHECK(std::get_if<RealIrrational>(&r) != nullptr);
  CHECK(std::get<RealIrrational>(r).discriminant == rat(8));
}

TEST_CASE("classify_quadratic float mode uses the discriminant tolerance") {
  auto r = classify_quadratic(Scalar::float64(2.0), Scalar::float64(1.0 + 1e-15));
  CHECK(std::get_if<RealRoots>(&r) != nullptr);
  r = classify_quadratic(Scalar::float64(0.0), Scalar::float64(1.0));
  CHECK(std::get_if<ComplexRoots>(&r) != nullptr);
}

TEST_CASE("two-shift to quadratic conversion is exact") {
  TwoShift ts{rat(1, 3), rat(-5, 7)};
  QuadCoef q = to_quad(ts);
  CHECK(q.a == rat(1, 3) + rat(-5, 7));
  CHECK(q.b == rat(-5, 21));
}

TEST_CASE("shift identity") {
  CHECK(shift_identity_check(pt({1, 2}), Scalar(1), 1));
  CHECK(shift_identity_check(pt({1, 2}), Scalar(0), 2));
  CHECK(shift_identity_check(pt({2, 2, -1, -1, -1}), Scalar(1), 3));
  CHECK_THROWS_AS(shift_identity_check(pt({1, 2}), Scalar(1), 3), precondition_error);

  for (int trial = 0; trial < 50; ++trial) {
    CounterRng r(23, 2, static_cast<std::uint64_t>(trial));
    std::size_t n = static_cast<std::size_t>(r.next_int(1, 9));
    SymPoint x = random_point(r, n);
    Scalar alpha{r.next_rational(100, 9)};
    long long k = r.next_int(0, static_cast<long long>(n));
    CHECK(shift_identity_check(x, alpha, k));
  }
}
