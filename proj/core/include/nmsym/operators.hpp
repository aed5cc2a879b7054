#ifndef NMSYM_OPERATORS_HH
#define NMSYM_OPERATORS_HH

#include <variant>

#include "nmsym/symcore.hpp"

namespace nmsym {

// S_k(x) = E_k + (alpha+beta) E_{k-1} + alpha beta E_{k-2}
struct TwoShift {
  Scalar alpha, beta;
};

// S'_k(x) = E_k + a E_{k-1} + b E_{k-2}
struct QuadCoef {
  Scalar a, b;
};

// S_{k;s}(x) = sum_{i=0}^{s} C(s,i) alpha^i E_{k-i}, s >= 1
struct BinomialShift {
  Scalar alpha;
  int s = 1;
};

using OperatorSpec = std::variant<TwoShift, QuadCoef, BinomialShift>;

// Validates the spec (BinomialShift needs s >= 1, uniform scalar modes).
void validate_spec(const OperatorSpec& spec);
Mode spec_mode(const OperatorSpec& spec);

Scalar eval_S(const SymPoint& x, const Scalar& alpha, const Scalar& beta, long long k);
Scalar eval_S_prime(const SymPoint& x, const Scalar& a, const Scalar& b, long long k);
Scalar eval_S_ks(const SymPoint& x, const Scalar& alpha, int s, long long k);

// Evaluates the family selected by spec from a precomputed table.
Scalar eval_operator(const SigmaTable& table, const OperatorSpec& spec, long long k);

// Root structure of t^2 + a t + b (roots are -alpha, -beta).
struct RealRoots {
  Scalar alpha, beta;
};
struct RealIrrational {
  Scalar discriminant;
};
struct ComplexRoots {
  Scalar c, d_squared;  // roots -c +- i d, d_squared = b - a^2/4 > 0
};
using QuadRootClass = std::variant<RealRoots, RealIrrational, ComplexRoots>;

QuadRootClass classify_quadratic(const Scalar& a, const Scalar& b);

// Exact conversion TwoShift(alpha,beta) -> QuadCoef(alpha+beta, alpha*beta).
QuadCoef to_quad(const TwoShift& ts);

// E_k(x + alpha e) == sum_i C(k,i) alpha^{k-i} E_i(x), 0 <= k <= n.
bool shift_identity_check(const SymPoint& x, const Scalar& alpha, long long k);

}  // namespace nmsym

#endif
