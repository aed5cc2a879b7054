#include "nmsym/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace nmsym {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw precondition_error("malformed rational: '" + text + "'"); };
  std::size_t pos = 0;
  auto read_int = [&]() -> Int {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad();
    Int v(text.substr(start, pos - start));
    return neg ? Int(-v) : v;
  };
  Int num = read_int();
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
    if (den == 0) throw precondition_error("zero denominator in '" + text + "'");
  }
  if (pos != text.size()) bad();
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int sn = sqrt(numerator(r));
  Int sd = sqrt(denominator(r));
  if (sn * sn != numerator(r) || sd * sd != denominator(r)) return std::nullopt;
  return Rational(sn, sd);
}

Scalar Scalar::float64(double v) {
  Scalar s;
  s.mode_ = Mode::Float64;
  s.f_ = v;
  return s;
}

Scalar Scalar::parse(const std::string& text, Mode mode) {
  if (mode == Mode::Exact) return Scalar(parse_rational(text));
  // Float mode accepts decimals and "p/q".
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational r = parse_rational(text);
    return float64(r.convert_to<double>());
  }
  std::size_t consumed = 0;
  double v = 0;
  try {
    v = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw precondition_error("malformed number: '" + text + "'");
  }
  if (consumed != text.size()) throw precondition_error("malformed number: '" + text + "'");
  return float64(v);
}

const Rational& Scalar::rat() const {
  if (mode_ != Mode::Exact) throw precondition_error("exact value requested from float scalar");
  return rat_;
}

double Scalar::f64() const {
  if (mode_ != Mode::Float64) throw precondition_error("float value requested from exact scalar");
  return f_;
}

double Scalar::to_double() const {
  return mode_ == Mode::Exact ? rat_.convert_to<double>() : f_;
}

int Scalar::sign() const {
  if (mode_ == Mode::Exact) return rat_.sign();
  return f_ > 0 ? 1 : (f_ < 0 ? -1 : 0);
}

void Scalar::require_same(const Scalar& o) const {
  if (mode_ != o.mode_)
    throw precondition_error("mixed-mode arithmetic (Exact op Float64) is rejected");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mode_ == Mode::Exact)
    r.rat_ = -r.rat_;
  else
    r.f_ = -r.f_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (mode_ == Mode::Exact)
    rat_ += o.rat_;
  else
    f_ += o.f_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (mode_ == Mode::Exact)
    rat_ -= o.rat_;
  else
    f_ -= o.f_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (mode_ == Mode::Exact)
    rat_ *= o.rat_;
  else
    f_ *= o.f_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw precondition_error("division by zero");
  if (mode_ == Mode::Exact)
    rat_ /= o.rat_;
  else
    f_ /= o.f_;
  return *this;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (a.mode_ == Mode::Exact) return a.rat_.compare(b.rat_);
  return a.f_ < b.f_ ? -1 : (a.f_ > b.f_ ? 1 : 0);
}

std::string Scalar::str() const {
  if (mode_ == Mode::Exact) return format_rational(rat_);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", f_);
  return buf;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, unsigned exp) {
  Scalar r = base.is_exact() ? Scalar(1) : Scalar::float64(1.0);
  Scalar b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return r;
}

SymPoint::SymPoint(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw precondition_error("SymPoint needs n >= 1 entries");
  mode_ = entries_.front().mode();
  for (const auto& e : entries_)
    if (e.mode() != mode_) throw precondition_error("SymPoint entries must share one numeric mode");
}

bool SymPoint::all_equal() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] != entries_[0]) return false;
  return true;
}

}  // namespace nmsym
