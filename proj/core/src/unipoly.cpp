#include "nmsym/unipoly.hpp"

#include <numeric>

#include "nmsym/errors.hpp"

namespace nmsym {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

void UniPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw precondition_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& t) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw precondition_error("polynomial division by zero");
  std::vector<Rational> rem = num.c_;
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
  for (int i = dn; i >= dd; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / den.c_.back();
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= q * den.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : c_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0, den_lcm > 0
  UniPoly r = *this;
  for (auto& c : r.c_) c *= scale;
  return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).rem.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.leading();
  for (auto& c : a.c_) c /= lead;  // monic
  return a;
}

namespace {

// Sign variation difference over (-inf, +inf) of the Sturm chain of p.
int sturm_distinct(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  std::vector<UniPoly> chain;
  chain.push_back(p.primitive());
  chain.push_back(p.derivative().primitive());
  while (!chain.back().is_zero()) {
    UniPoly next = -UniPoly::divmod(chain[chain.size() - 2], chain.back()).rem;
    if (next.is_zero()) break;
    chain.push_back(next.primitive());
  }
  auto variations = [&](bool at_minus_inf) {
    int count = 0, prev = 0;
    for (const auto& f : chain) {
      if (f.is_zero()) continue;
      int s = f.leading().sign();
      if (at_minus_inf && f.degree() % 2 != 0) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(true) - variations(false);
}

}  // namespace

SturmCounts sturm_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw precondition_error("sturm_real_roots: zero polynomial rejected");
  SturmCounts out;
  out.distinct_real = sturm_distinct(p);
  // Realness is a statement about the squarefree part: distinct roots of
  // p / gcd(p, p') must exhaust its degree.
  UniPoly sf = p.degree() <= 0 ? UniPoly({Rational(1)})
                               : UniPoly::divmod(p, UniPoly::gcd(p, p.derivative())).quot;
  out.all_roots_real = sturm_distinct(sf) == std::max(sf.degree(), 0);
  return out;
}

}  // namespace nmsym
