#include "nmsym/counterexamples.hpp"

#include "nmsym/symcore.hpp"

namespace nmsym {

namespace {

void require_exact(const Scalar& v, const char* who) {
  if (!v.is_exact()) throw precondition_error(std::string(who) + ": exact mode required");
}

SymPoint build_z0(int n, int k, const Scalar& base) {
  std::vector<Scalar> z;
  z.reserve(static_cast<std::size_t>(n));
  Scalar top = Scalar(static_cast<long long>(n - k)) * base;
  z.push_back(top);
  z.push_back(top);
  for (int i = 0; i < n - 2; ++i) z.push_back(-base);
  return SymPoint(std::move(z));
}

struct Triple {
  Scalar s2, s3, s4, gap;
};

Triple direct_gap3(const SymPoint& z0, const Scalar& c, const Scalar& d) {
  Scalar a = Scalar(2) * c;
  Scalar b = c * c + d * d;
  SigmaTable t = sigma_all(z0);
  QuadCoef spec{a, b};
  Triple out;
  out.s2 = eval_operator(t, spec, 2);
  out.s3 = eval_operator(t, spec, 3);
  out.s4 = eval_operator(t, spec, 4);
  out.gap = out.s3 * out.s3 - out.s2 * out.s4;
  return out;
}

// Secondary evaluation path: the published E_1..E_4 closed forms for z0,
// cross-checked against sigma_all as a typo-detection net.
void check_e_closed_forms(const SymPoint& z0, int n, const Scalar& base) {
  SigmaTable t = sigma_all(z0);
  Rational nn(n);
  Rational b = base.rat();
  Rational e1 = Rational(n - 4) * b / nn;
  Rational e2 = Rational(-(n - 3)) * b * b / Rational(n - 1);
  Rational e3 = Rational(-(n - 3) * (n - 4)) * b * b * b / (nn * Rational(n - 1));
  Rational e4 =
      Rational(5 * n * n - 25 * n + 32) * b * b * b * b / (nn * Rational(n - 1));
  if (t.e_at(1).rat() != e1 || t.e_at(2).rat() != e2 || t.e_at(3).rat() != e3 ||
      t.e_at(4).rat() != e4)
    throw invariant_error("counterexample: E_1..E_4 closed forms disagree with sigma_all");
}

}  // namespace

CounterexampleReport construct_case1(int n, const Scalar& c, const Scalar& d) {
  require_exact(c, "construct_case1");
  require_exact(d, "construct_case1");
  if (n < 4) throw precondition_error("Case 1 requires n >= 4");
  if (c.is_zero()) throw precondition_error("Case 1 requires c != 0");
  if (d.is_zero()) throw precondition_error("Case 1 requires d != 0");
  if (abs(c) < abs(d)) throw precondition_error("Case 1 requires |c| >= |d|");

  CounterexampleReport r;
  r.n = n;
  r.k = 3;
  r.c = c;
  r.d = d;
  SymPoint z0 = build_z0(n, 3, c);
  r.z0 = z0.entries();
  check_e_closed_forms(z0, n, c);
  r.gap = direct_gap3(z0, c, d).gap;

  Rational c2 = c.rat() * c.rat(), d2 = d.rat() * d.rat();
  Rational cf = Rational(2 * (n - 2) * (n - 2) * (n - 2)) * c2 * d2 *
                (Rational(-2 * (n - 2)) * c2 + Rational(n - 1) * d2) /
                Rational(n * n * (n - 1) * (n - 1));
  r.closed_form = Scalar(cf);
  if (r.gap != *r.closed_form)
    throw invariant_error("Case 1: direct gap disagrees with the closed form");
  r.negative = r.gap.sign() < 0;
  if (!r.negative) throw invariant_error("Case 1: gap is not negative");
  return r;
}

CounterexampleReport construct_case2(int n, const Scalar& c, const Scalar& d_in) {
  require_exact(c, "construct_case2");
  require_exact(d_in, "construct_case2");
  if (n < 4) throw precondition_error("Case 2 requires n >= 4");
  if (d_in.is_zero()) throw precondition_error("Case 2 requires d != 0");
  if (abs(c) >= abs(d_in)) throw precondition_error("Case 2 requires |c| < |d|");

  // roots -c +- id fix d only up to sign; normalize so c*d >= 0
  Scalar d = (c * d_in).sign() < 0 ? -d_in : d_in;

  CounterexampleReport r;
  r.n = n;
  r.k = 3;
  r.c = c;
  r.d = d;
  SymPoint z0 = build_z0(n, 3, d);
  r.z0 = z0.entries();
  check_e_closed_forms(z0, n, d);
  r.gap = direct_gap3(z0, c, d).gap;

  Rational c1 = c.rat(), d1 = d.rat();
  Rational bracket = Rational(n - 1) * c1 * c1 * c1 * c1 +
                     Rational(2 * (n - 4)) * c1 * c1 * d1 * d1 -
                     Rational(4 * (n - 4)) * c1 * d1 * d1 * d1 - Rational(4) * d1 * d1 * d1 * d1;
  Rational cf = Rational(2 * (n - 2) * (n - 2) * (n - 2)) * d1 * d1 * bracket /
                Rational(n * n * (n - 1) * (n - 1));
  r.closed_form = Scalar(cf);
  if (r.gap != *r.closed_form)
    throw invariant_error("Case 2: direct gap disagrees with the closed form");
  r.negative = r.gap.sign() < 0;
  if (!r.negative) throw invariant_error("Case 2: gap is not negative under sign normalization");
  return r;
}

CounterexampleReport construct_highk(int n, int k, const Scalar& c, const Scalar& d) {
  require_exact(c, "construct_highk");
  require_exact(d, "construct_highk");
  if (k != 4 && k != 5) throw precondition_error("high-k construction covers k in {4,5} only");
  if (n <= k) throw precondition_error("high-k construction requires n >= k+1");
  if (d.is_zero()) throw precondition_error("high-k construction requires d != 0");
  if (abs(c) < abs(d)) throw precondition_error("high-k construction requires |c| >= |d|");

  CounterexampleReport r;
  r.n = n;
  r.k = k;
  r.c = c;
  r.d = d;
  SymPoint z0 = build_z0(n, k, c);
  r.z0 = z0.entries();

  Scalar a = Scalar(2) * c;
  Scalar b = c * c + d * d;
  SigmaTable t = sigma_all(z0);
  QuadCoef spec{a, b};
  Scalar sk = eval_operator(t, spec, k);
  r.gap = sk * sk - eval_operator(t, spec, k - 1) * eval_operator(t, spec, k + 1);
  r.negative = r.gap.sign() < 0;
  r.exploratory = k == 5 && n > 9;
  if (!r.exploratory && !r.negative)
    throw invariant_error("high-k construction: gap is not negative in the claimed range");
  return r;
}

GapReport probe_gap(const SymPoint& x, const Scalar& a, const Scalar& b, long long k) {
  return newton_gap(x, QuadCoef{a, b}, k);
}

}  // namespace nmsym
