#include "doctest.h"

#include "nmsym/rng.hpp"
#include "nmsym/symcore.hpp"

using namespace nmsym;

namespace {

SymPoint pt(std::initializer_list<long long> vals) {
  std::vector<Scalar> v;
  for (auto x : vals) v.emplace_back(x);
  return SymPoint(std::move(v));
}

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

SymPoint random_point(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.next_rational(1000, 20));
  return SymPoint(std::move(v));
}

}  // namespace

TEST_CASE("binomial coefficients and conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(30, 15) == Int("155117520"));
}

TEST_CASE("sigma_all on worked vectors") {
  auto t = sigma_all(pt({2, 2, 2}));
  CHECK(t.sigma_at(0).rat() == 1);
  CHECK(t.sigma_at(1).rat() == 6);
  CHECK(t.sigma_at(2).rat() == 12);
  CHECK(t.sigma_at(3).rat() == 8);

  t = sigma_all(pt({1, 2, 3}));
  CHECK(t.sigma_at(1).rat() == 6);
  CHECK(t.sigma_at(2).rat() == 11);
  CHECK(t.sigma_at(3).rat() == 6);
  CHECK(t.e_at(2).rat() == rat(11, 3));

  t = sigma_all(pt({0, 5}));
  CHECK(t.sigma_at(1).rat() == 5);
  CHECK(t.sigma_at(2).rat() == 0);
}

TEST_CASE("out-of-range sigma queries return zero") {
  auto t = sigma_all(pt({1, 2, 3}));
  CHECK(t.sigma_at(-1).rat() == 0);
  CHECK(t.sigma_at(4).rat() == 0);
  CHECK(t.e_at(-2).rat() == 0);
  CHECK(t.e_at(0).rat() == 1);
}

TEST_CASE("sigma_oracle matches enumeration expectations") {
  CHECK(sigma_oracle(pt({1, 2, 3}), 2).rat() == 11);
  CHECK(sigma_oracle(pt({1, 2, 3}), 0).rat() == 1);
  CHECK(sigma_oracle(pt({1, 2, 3}), 4).rat() == 0);
  std::vector<Scalar> big(21, Scalar(1));
  CHECK_THROWS_AS(sigma_oracle(SymPoint(big), 2), precondition_error);
}

TEST_CASE("sigma_all agrees with the subset oracle") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CounterRng rng(11, 0, n);
    SymPoint x = random_point(rng, n);
    auto t = sigma_all(x);
    for (long long k = 0; k <= static_cast<long long>(n); ++k)
      CHECK(t.sigma_at(k) == sigma_oracle(x, k));
  }
}

TEST_CASE("sigma_split identity") {
  CHECK(sigma_split(pt({1, 2, 3}), 2).rat() == 11);
  CHECK(sigma_split(pt({0, 0, 5}), 3).rat() == 0);
  // spec lists -4 here; the subset oracle (and the published E_3 closed
  // form at n=5, c=1) both give -1
  CHECK(sigma_split(pt({2, 2, -1, -1, -1}), 3).rat() == -1);
  CHECK(sigma_oracle(pt({2, 2, -1, -1, -1}), 3).rat() == -1);
  CHECK_THROWS_AS(sigma_split(pt({1, 2}), 1), precondition_error);

  for (std::size_t n = 3; n <= 9; ++n) {
    CounterRng rng(12, 1, n);
    SymPoint x = random_point(rng, n);
    auto t = sigma_all(x);
    for (long long k = 0; k <= static_cast<long long>(n); ++k)
      CHECK(sigma_split(x, k) == t.sigma_at(k));
  }
}

TEST_CASE("permutation invariance and homogeneity") {
  CounterRng rng(13, 2, 0);
  SymPoint x = random_point(rng, 7);
  std::vector<Scalar> rev(x.entries().rbegin(), x.entries().rend());
  auto a = sigma_all(x);
  auto b = sigma_all(SymPoint(rev));
  for (long long k = 0; k <= 7; ++k) CHECK(a.sigma_at(k) == b.sigma_at(k));

  Scalar t{rat(-3, 2)};
  std::vector<Scalar> scaled;
  for (const auto& e : x.entries()) scaled.push_back(t * e);
  auto c = sigma_all(SymPoint(scaled));
  for (unsigned k = 0; k <= 7; ++k) CHECK(c.sigma_at(k) == pow(t, k) * a.sigma_at(k));
}

TEST_CASE("garding cone membership is strict") {
  CHECK(garding_member(pt({1, 1, 1}), 3));
  CHECK(garding_member(pt({1, 1, -1}), 1));
  CHECK_FALSE(garding_member(pt({1, 1, -1}), 2));
  CHECK_FALSE(garding_member(pt({0, 1}), 2));  // sigma_2 = 0 fails strictness
  CHECK_THROWS_AS(garding_member(pt({1, 2}), 0), precondition_error);
  CHECK_THROWS_AS(garding_member(pt({1, 2}), 3), precondition_error);
}

TEST_CASE("shift_vector") {
  auto s = shift_vector(pt({1, 2}), Scalar(1));
  CHECK(s[0].rat() == 2);
  CHECK(s[1].rat() == 3);
  auto id = shift_vector(pt({1, 2}), Scalar(0));
  CHECK(id[0].rat() == 1);
  auto c = shift_vector(pt({2, 2, -1, -1, -1}), Scalar(1));
  CHECK(c[0].rat() == 3);
  CHECK(c[4].rat() == 0);
}

TEST_CASE("float mode tracks exact values to relative 1e-12") {
  for (std::size_t n = 2; n <= 12; n += 2) {
    CounterRng rng(14, 3, n);
    SymPoint x = random_point(rng, n);
    std::vector<Scalar> xf;
    for (const auto& e : x.entries()) xf.push_back(Scalar::float64(e.to_double()));
    auto exact = sigma_all(x);
    auto flt = sigma_all(SymPoint(xf));
    for (long long k = 0; k <= static_cast<long long>(n); ++k) {
      double want = exact.sigma_at(k).to_double();
      double got = flt.sigma_at(k).f64();
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("mixed-mode arithmetic is rejected") {
  Scalar a{1};
  Scalar b = Scalar::float64(1.0);
  CHECK_THROWS_AS(a + b, precondition_error);
  CHECK_THROWS_AS((void)(a < b), precondition_error);
  std::vector<Scalar> mixed{a, b};
  CHECK_THROWS_AS(SymPoint{mixed}, precondition_error);
}

TEST_CASE("scalar parsing and formatting round-trips") {
  CHECK(Scalar::parse("-5", Mode::Exact).rat() == -5);
  CHECK(Scalar::parse("2/3", Mode::Exact).str() == "2/3");
  CHECK(Scalar::parse("-4/6", Mode::Exact).str() == "-2/3");
  CHECK(Scalar::parse("7/1", Mode::Exact).str() == "7");
  CHECK_THROWS_AS(Scalar::parse("1.5", Mode::Exact), precondition_error);
  CHECK_THROWS_AS(Scalar::parse("1/0", Mode::Exact), precondition_error);
  CHECK_THROWS_AS(Scalar::parse("", Mode::Exact), precondition_error);
  CHECK(Scalar::parse("1.5", Mode::Float64).f64() == 1.5);
  CHECK(Scalar::parse("1/2", Mode::Float64).f64() == 0.5);
}
