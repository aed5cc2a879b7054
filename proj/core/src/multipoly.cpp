#include "nmsym/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "nmsym/errors.hpp"

namespace nmsym {

bool MultiPoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rational c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.vars_.size()) throw precondition_error("MultiPoly variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

void MultiPoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != vars_.size()) throw precondition_error("exponent vector arity mismatch");
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw precondition_error("MultiPoly operands must share one variable list");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(vars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw precondition_error("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = c < 0 ? Rational(-c) : c;
    bool has_var = false;
    for (unsigned exp : e) has_var = has_var || exp > 0;
    if (a != 1 || !has_var) os << format_rational(a);
    bool star = a != 1 || !has_var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace nmsym
