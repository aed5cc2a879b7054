#include "nmsym/operators.hpp"

#include <cmath>

namespace nmsym {

namespace {

Scalar scalar_cast(const Int& v, Mode mode) {
  return mode == Mode::Exact ? Scalar(v) : Scalar::float64(v.convert_to<double>());
}

}  // namespace

void validate_spec(const OperatorSpec& spec) {
  if (const auto* b = std::get_if<BinomialShift>(&spec)) {
    if (b->s < 1) throw precondition_error("BinomialShift requires s >= 1");
  } else if (const auto* t = std::get_if<TwoShift>(&spec)) {
    if (t->alpha.mode() != t->beta.mode())
      throw precondition_error("TwoShift parameters must share one numeric mode");
  } else if (const auto* q = std::get_if<QuadCoef>(&spec)) {
    if (q->a.mode() != q->b.mode())
      throw precondition_error("QuadCoef parameters must share one numeric mode");
  }
}

Mode spec_mode(const OperatorSpec& spec) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BinomialShift>)
          return v.alpha.mode();
        else if constexpr (std::is_same_v<std::decay_t<decltype(v)>, TwoShift>)
          return v.alpha.mode();
        else
          return v.a.mode();
      },
      spec);
}

Scalar eval_operator(const SigmaTable& table, const OperatorSpec& spec, long long k) {
  validate_spec(spec);
  if (const auto* t = std::get_if<TwoShift>(&spec)) {
    return table.e_at(k) + (t->alpha + t->beta) * table.e_at(k - 1) +
           t->alpha * t->beta * table.e_at(k - 2);
  }
  if (const auto* q = std::get_if<QuadCoef>(&spec)) {
    return table.e_at(k) + q->a * table.e_at(k - 1) + q->b * table.e_at(k - 2);
  }
  const auto& b = std::get<BinomialShift>(spec);
  Scalar sum = table.e_at(k);
  Scalar apow = b.alpha.is_exact() ? Scalar(1) : Scalar::float64(1.0);
  for (int i = 1; i <= b.s; ++i) {
    apow *= b.alpha;
    sum += scalar_cast(binomial(static_cast<unsigned>(b.s), i), sum.mode()) * apow *
           table.e_at(k - i);
  }
  return sum;
}

Scalar eval_S(const SymPoint& x, const Scalar& alpha, const Scalar& beta, long long k) {
  return eval_operator(sigma_all(x), TwoShift{alpha, beta}, k);
}

Scalar eval_S_prime(const SymPoint& x, const Scalar& a, const Scalar& b, long long k) {
  return eval_operator(sigma_all(x), QuadCoef{a, b}, k);
}

Scalar eval_S_ks(const SymPoint& x, const Scalar& alpha, int s, long long k) {
  return eval_operator(sigma_all(x), BinomialShift{alpha, s}, k);
}

QuadCoef to_quad(const TwoShift& ts) { return QuadCoef{ts.alpha + ts.beta, ts.alpha * ts.beta}; }

QuadRootClass classify_quadratic(const Scalar& a, const Scalar& b) {
  Scalar four = a.is_exact() ? Scalar(4) : Scalar::float64(4.0);
  Scalar two = a.is_exact() ? Scalar(2) : Scalar::float64(2.0);
  Scalar disc = a * a - four * b;

  if (a.is_exact()) {
    if (disc.sign() < 0) return ComplexRoots{a / two, b - a * a / four};
    if (auto root = exact_sqrt(disc.rat())) {
      Scalar sq{*root};
      // roots of t^2 + at + b are -alpha, -beta
      return RealRoots{(a - sq) / two, (a + sq) / two};
    }
    return RealIrrational{disc};
  }

  double tol = 1e-12 * std::max(std::abs(a.f64() * a.f64()), std::abs(b.f64()));
  double dv = disc.f64();
  if (dv < -tol) return ComplexRoots{a / two, b - a * a / four};
  if (dv < 0) dv = 0;  // within tolerance of a double root
  double sq = std::sqrt(dv);
  return RealRoots{Scalar::float64((a.f64() - sq) / 2), Scalar::float64((a.f64() + sq) / 2)};
}

bool shift_identity_check(const SymPoint& x, const Scalar& alpha, long long k) {
  if (k < 0 || k > static_cast<long long>(x.n()))
    throw precondition_error("shift_identity_check: k must be in 0..n");
  Scalar lhs = sigma_all(shift_vector(x, alpha)).e_at(k);
  SigmaTable t = sigma_all(x);
  Scalar rhs = x.mode() == Mode::Exact ? Scalar(0) : Scalar::float64(0.0);
  for (long long i = 0; i <= k; ++i)
    rhs += scalar_cast(binomial(static_cast<unsigned>(k), i), rhs.mode()) *
           pow(alpha, static_cast<unsigned>(k - i)) * t.e_at(i);
  return lhs == rhs;
}

}  // namespace nmsym
