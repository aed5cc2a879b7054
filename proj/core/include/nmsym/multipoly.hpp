#ifndef NMSYM_MULTIPOLY_HH
#define NMSYM_MULTIPOLY_HH

#include <map>
#include <string>
#include <vector>

#include "nmsym/rational.hpp"

namespace nmsym {

// Sparse multivariate polynomial over the rationals in canonical form:
// no zero coefficients stored, terms ordered graded-lexicographically.
// Equal polynomials have identical term maps (and serializations).
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, Rational c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponents e, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator*(const Rational& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  Rational eval(const std::vector<Rational>& point) const;

  // Deterministic graded-lex text form, highest degree first.
  std::string str() const;

 private:
  void require_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace nmsym

#endif
