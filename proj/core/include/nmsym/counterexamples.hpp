#ifndef NMSYM_COUNTEREXAMPLES_HH
#define NMSYM_COUNTEREXAMPLES_HH

#include <optional>

#include "nmsym/inequalities.hpp"

namespace nmsym {

// A complex-root instance: t^2 + at + b with roots -c +- id, evaluated on
// the constructed vector z0.
struct CounterexampleReport {
  int n = 0;
  int k = 0;
  Scalar c, d;
  std::vector<Scalar> z0;
  Scalar gap;  // [S'_k]^2 - S'_{k-1} S'_{k+1} with a = 2c, b = c^2 + d^2
  std::optional<Scalar> closed_form;  // k = 3 only
  bool negative = false;
  bool exploratory = false;  // k = 5 with n > 9
};

// z0 = ((n-3)c, (n-3)c, -c, ..., -c), k = 3. Requires n >= 4, c != 0,
// d != 0, |c| >= |d|. Direct gap must equal the closed form and be < 0.
CounterexampleReport construct_case1(int n, const Scalar& c, const Scalar& d);

// z0 built from d, k = 3. Requires n >= 4, |c| < |d|, d != 0; d is
// sign-normalized so that c*d >= 0 (roots -c +- id fix d only up to sign).
CounterexampleReport construct_case2(int n, const Scalar& c, const Scalar& d);

// z0 = ((n-k)c, (n-k)c, -c, ..., -c) for k in {4,5}; gap by direct
// evaluation only. k = 5 with n > 9 is exploratory (no sign assertion).
CounterexampleReport construct_highk(int n, int k, const Scalar& c, const Scalar& d);

// Free-form S' gap exploration for arbitrary (a, b); no sign assertion.
GapReport probe_gap(const SymPoint& x, const Scalar& a, const Scalar& b, long long k);

}  // namespace nmsym

#endif
