#ifndef NMSYM_INEQUALITIES_HH
#define NMSYM_INEQUALITIES_HH

#include <optional>
#include <string>

#include "nmsym/operators.hpp"

namespace nmsym {

struct EqualityCase {
  enum class Kind { Strict, AllEqual, BothSidesZero, RatioMinusAlpha, ZeroUnclassified };
  Kind kind = Kind::Strict;
  std::optional<Scalar> alpha;  // present for RatioMinusAlpha

  std::string tag() const;
};

struct GapReport {
  long long k = 0;
  Scalar s_km1, s_k, s_kp1;
  Scalar gap;  // s_k^2 - s_km1 * s_kp1
  EqualityCase equality;
};

// Exact gap for the selected family; 1 <= k <= n-1. No sign assertion is
// made (QuadCoef with complex roots is the counterexample regime).
GapReport newton_gap(const SymPoint& x, const OperatorSpec& spec, long long k);

// Zero-gap trichotomy, tested in the fixed order
// AllEqual -> BothSidesZero -> RatioMinusAlpha.
EqualityCase classify_equality(const SymPoint& x, const OperatorSpec& spec,
                               const GapReport& report);

struct ChainReport {
  long long k_max = 0;
  std::vector<Scalar> values;  // S_1 .. S_k
  std::vector<std::string> hypothesis_failures;
  std::optional<bool> monotone;  // present only when hypotheses all hold
};

// Maclaurin chain S_1 >= S_2^{1/2} >= ... >= S_k^{1/k}, decided root-free
// by cross powers S_m^{m+1} >= S_{m+1}^m. TwoShift or BinomialShift only.
ChainReport maclaurin_chain(const SymPoint& x, const OperatorSpec& spec, long long k);

struct CorollaryResult {
  bool hypothesis_ok = false;  // S_q >= 0 for q = l..k-1
  bool holds = false;          // S_l S_{k-1} >= S_{l-1} S_k
};

// Product comparison; TwoShift needs 3 <= l < k <= n, BinomialShift needs
// s+1 <= l < k <= n.
CorollaryResult corollary_product(const SymPoint& x, const OperatorSpec& spec,
                                  long long l, long long k);

struct LowKGapReport {
  GapReport report;
  std::vector<std::string> hypothesis_failures;
  // Nonnegativity is asserted by the theorems only when the hypotheses hold.
  bool asserted_nonneg = false;
};

// Low-index gaps (TwoShift: k in {1,2}; BinomialShift: 1 <= k <= s) with
// hypothesis validation attached. Failed hypotheses are reported, not thrown.
LowKGapReport gap_low_k(const SymPoint& x, const OperatorSpec& spec, long long k);

}  // namespace nmsym

#endif
