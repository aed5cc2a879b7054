#include "nmsym/inequalities.hpp"

#include <cmath>

namespace nmsym {

namespace {

bool gap_is_zero(const GapReport& r) {
  if (r.gap.is_exact()) return r.gap.is_zero();
  double scale = std::max({1.0, r.s_k.f64() * r.s_k.f64(), std::abs(r.s_km1.f64() * r.s_kp1.f64())});
  return std::abs(r.gap.f64()) <= 1e-9 * scale;
}

bool scalar_is_zero(const Scalar& v, const GapReport& r) {
  if (v.is_exact()) return v.is_zero();
  double scale = std::max({1.0, std::abs(r.s_km1.f64()), std::abs(r.s_k.f64()), std::abs(r.s_kp1.f64())});
  return std::abs(v.f64()) <= 1e-9 * scale;
}

// The -alpha ratio case is stated for TwoShift with alpha = beta and for
// BinomialShift's alpha; QuadCoef has no such parameter.
std::optional<Scalar> ratio_alpha(const OperatorSpec& spec) {
  if (const auto* t = std::get_if<TwoShift>(&spec)) {
    if (t->alpha == t->beta) return t->alpha;
    return std::nullopt;
  }
  if (const auto* b = std::get_if<BinomialShift>(&spec)) return b->alpha;
  return std::nullopt;
}

int binomial_s(const OperatorSpec& spec) {
  if (const auto* b = std::get_if<BinomialShift>(&spec)) return b->s;
  return 0;
}

}  // namespace

std::string EqualityCase::tag() const {
  switch (kind) {
    case Kind::Strict: return "strict";
    case Kind::AllEqual: return "all_equal";
    case Kind::BothSidesZero: return "both_sides_zero";
    case Kind::RatioMinusAlpha: return "ratio_minus_alpha";
    case Kind::ZeroUnclassified: return "zero_unclassified";
  }
  return "?";
}

GapReport newton_gap(const SymPoint& x, const OperatorSpec& spec, long long k) {
  validate_spec(spec);
  if (k < 1 || k > static_cast<long long>(x.n()) - 1)
    throw precondition_error("newton_gap: k must be in 1..n-1");
  SigmaTable t = sigma_all(x);
  GapReport r;
  r.k = k;
  r.s_km1 = eval_operator(t, spec, k - 1);
  r.s_k = eval_operator(t, spec, k);
  r.s_kp1 = eval_operator(t, spec, k + 1);
  r.gap = r.s_k * r.s_k - r.s_km1 * r.s_kp1;
  r.equality = classify_equality(x, spec, r);
  return r;
}

EqualityCase classify_equality(const SymPoint& x, const OperatorSpec& spec,
                               const GapReport& report) {
  using Kind = EqualityCase::Kind;
  if (!gap_is_zero(report)) return {Kind::Strict, std::nullopt};
  if (x.all_equal()) return {Kind::AllEqual, std::nullopt};
  if (scalar_is_zero(report.s_k, report) && scalar_is_zero(report.s_km1 * report.s_kp1, report))
    return {Kind::BothSidesZero, std::nullopt};
  if (auto alpha = ratio_alpha(spec)) {
    if (!report.s_km1.is_zero() && !report.s_k.is_zero() &&
        report.s_k / report.s_km1 == -*alpha && report.s_kp1 / report.s_k == -*alpha)
      return {Kind::RatioMinusAlpha, alpha};
  }
  return {Kind::ZeroUnclassified, std::nullopt};
}

namespace {

// Family hypotheses from the chain theorems. Chain values are appended to
// `failures` by name so reports stay self-describing.
std::vector<std::string> chain_hypotheses(const SymPoint& x, const OperatorSpec& spec,
                                          long long k, const SigmaTable& t,
                                          const std::vector<Scalar>& values) {
  std::vector<std::string> failures;
  if (const auto* ts = std::get_if<TwoShift>(&spec)) {
    if (ts->alpha.sign() < 0) failures.push_back("alpha >= 0");
    if (ts->beta.sign() < 0) failures.push_back("beta >= 0");
    if (t.e_at(1).sign() < 0) failures.push_back("E_1 >= 0");
    if (t.e_at(2).sign() < 0) failures.push_back("E_2 >= 0");
    for (long long m = 3; m <= k; ++m)
      if (values[static_cast<std::size_t>(m - 1)].sign() < 0)
        failures.push_back("S_" + std::to_string(m) + " >= 0");
  } else {
    const auto& b = std::get<BinomialShift>(spec);
    if (b.alpha.sign() < 0) failures.push_back("alpha >= 0");
    for (int j = 1; j <= b.s; ++j)
      if (t.e_at(j).sign() < 0) failures.push_back("E_" + std::to_string(j) + " >= 0");
    for (long long m = b.s + 1; m <= k; ++m)
      if (values[static_cast<std::size_t>(m - 1)].sign() < 0)
        failures.push_back("S_" + std::to_string(m) + " >= 0");
  }
  return failures;
}

}  // namespace

ChainReport maclaurin_chain(const SymPoint& x, const OperatorSpec& spec, long long k) {
  validate_spec(spec);
  if (std::holds_alternative<QuadCoef>(spec))
    throw precondition_error("maclaurin_chain: no chain theorem applies to QuadCoef specs");
  if (k < 1 || k > static_cast<long long>(x.n()))
    throw precondition_error("maclaurin_chain: k must be in 1..n");

  SigmaTable t = sigma_all(x);
  ChainReport r;
  r.k_max = k;
  for (long long m = 1; m <= k; ++m) r.values.push_back(eval_operator(t, spec, m));
  r.hypothesis_failures = chain_hypotheses(x, spec, k, t, r.values);
  if (!r.hypothesis_failures.empty()) return r;

  // Under the hypotheses every chain value is nonnegative (the low-k gaps
  // supply the missing indices); a negative value here is a bug.
  for (const auto& v : r.values)
    if (v.is_exact() && v.sign() < 0)
      throw invariant_error("maclaurin_chain: negative S_m despite satisfied hypotheses");

  bool monotone = true;
  for (long long m = 1; m < k; ++m) {
    const Scalar& cur = r.values[static_cast<std::size_t>(m - 1)];
    const Scalar& nxt = r.values[static_cast<std::size_t>(m)];
    // S_m^{1/m} >= S_{m+1}^{1/(m+1)}  <=>  S_m^{m+1} >= S_{m+1}^m
    if (pow(cur, static_cast<unsigned>(m + 1)) < pow(nxt, static_cast<unsigned>(m))) {
      monotone = false;
      break;
    }
  }
  r.monotone = monotone;
  return r;
}

CorollaryResult corollary_product(const SymPoint& x, const OperatorSpec& spec, long long l,
                                  long long k) {
  validate_spec(spec);
  if (std::holds_alternative<QuadCoef>(spec))
    throw precondition_error("corollary_product: TwoShift or BinomialShift specs only");
  long long l_min = std::holds_alternative<TwoShift>(spec) ? 3 : binomial_s(spec) + 1;
  if (l < l_min || l >= k || k > static_cast<long long>(x.n()))
    throw precondition_error("corollary_product: require " + std::to_string(l_min) +
                             " <= l < k <= n");
  SigmaTable t = sigma_all(x);
  CorollaryResult res;
  res.hypothesis_ok = true;
  for (long long q = l; q <= k - 1; ++q)
    if (eval_operator(t, spec, q).sign() < 0) res.hypothesis_ok = false;
  Scalar lhs = eval_operator(t, spec, l) * eval_operator(t, spec, k - 1);
  Scalar rhs = eval_operator(t, spec, l - 1) * eval_operator(t, spec, k);
  res.holds = lhs >= rhs;
  return res;
}

LowKGapReport gap_low_k(const SymPoint& x, const OperatorSpec& spec, long long k) {
  validate_spec(spec);
  if (std::holds_alternative<QuadCoef>(spec))
    throw precondition_error("gap_low_k: TwoShift or BinomialShift specs only");
  long long k_max = std::holds_alternative<TwoShift>(spec) ? 2 : binomial_s(spec);
  if (k < 1 || k > k_max)
    throw precondition_error("gap_low_k: k must be in 1.." + std::to_string(k_max));

  SigmaTable t = sigma_all(x);
  LowKGapReport out;
  if (const auto* ts = std::get_if<TwoShift>(&spec)) {
    if (ts->alpha.sign() < 0) out.hypothesis_failures.push_back("alpha >= 0");
    if (ts->beta.sign() < 0) out.hypothesis_failures.push_back("beta >= 0");
    if (t.e_at(1).sign() < 0) out.hypothesis_failures.push_back("E_1 >= 0");
    if (t.e_at(2).sign() < 0) out.hypothesis_failures.push_back("E_2 >= 0");
  } else {
    const auto& b = std::get<BinomialShift>(spec);
    if (b.alpha.sign() < 0) out.hypothesis_failures.push_back("alpha >= 0");
    for (int j = 1; j <= b.s; ++j)
      if (t.e_at(j).sign() < 0) out.hypothesis_failures.push_back("E_" + std::to_string(j) + " >= 0");
  }

  out.report.k = k;
  out.report.s_km1 = eval_operator(t, spec, k - 1);
  out.report.s_k = eval_operator(t, spec, k);
  out.report.s_kp1 = eval_operator(t, spec, k + 1);
  out.report.gap = out.report.s_k * out.report.s_k - out.report.s_km1 * out.report.s_kp1;
  out.report.equality = classify_equality(x, spec, out.report);
  out.asserted_nonneg = out.hypothesis_failures.empty();
  if (out.asserted_nonneg && out.report.gap.is_exact() && out.report.gap.sign() < 0)
    throw invariant_error("gap_low_k: negative gap despite satisfied hypotheses");
  return out;
}

}  // namespace nmsym
