#ifndef NMSYM_UNIPOLY_HH
#define NMSYM_UNIPOLY_HH

#include <vector>

#include "nmsym/rational.hpp"

namespace nmsym {

// Dense univariate polynomial over the rationals, constant term first.
// Trailing zeros are stripped; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const;

  UniPoly derivative() const;
  Rational eval(const Rational& t) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  struct DivMod;
  static DivMod divmod(const UniPoly& num, const UniPoly& den);

  // Positive rescaling to coprime integer coefficients (sign preserved);
  // keeps Sturm chains from blowing up.
  UniPoly primitive() const;

  static UniPoly gcd(UniPoly a, UniPoly b);  // monic

 private:
  void strip();
  std::vector<Rational> c_;
};

struct UniPoly::DivMod {
  UniPoly quot, rem;
};

struct SturmCounts {
  int distinct_real = 0;
  bool all_roots_real = false;
};

// Distinct real roots by Sturm sign variations at -inf/+inf; realness is
// judged on the squarefree part p / gcd(p, p'). Rejects the zero polynomial.
SturmCounts sturm_real_roots(const UniPoly& p);

}  // namespace nmsym

#endif
