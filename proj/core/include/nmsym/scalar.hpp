#ifndef NMSYM_SCALAR_HH
#define NMSYM_SCALAR_HH

#include <string>
#include <vector>

#include "nmsym/errors.hpp"
#include "nmsym/rational.hpp"

namespace nmsym {

enum class Mode { Exact, Float64 };

// A real quantity in one of two numeric modes. Exact mode is an
// arbitrary-precision rational and never rounds; Float64 is binary64.
// Mixed-mode arithmetic is rejected, never coerced.
class Scalar {
 public:
  Scalar() = default;  // exact zero
  Scalar(int v) : rat_(v) {}
  Scalar(long long v) : rat_(v) {}
  explicit Scalar(Rational r) : rat_(std::move(r)) {}
  explicit Scalar(Int i) : rat_(std::move(i)) {}

  static Scalar float64(double v);
  // Parses "p/q" in exact mode; additionally accepts decimals in float mode.
  static Scalar parse(const std::string& text, Mode mode);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  const Rational& rat() const;  // throws in float mode
  double f64() const;           // throws in exact mode
  double to_double() const;     // lossy conversion, any mode

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // rejects division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

  std::string str() const;

 private:
  static int cmp(const Scalar& a, const Scalar& b);
  void require_same(const Scalar& o) const;

  Mode mode_ = Mode::Exact;
  Rational rat_{};
  double f_ = 0.0;
};

Scalar abs(const Scalar& s);
Scalar pow(const Scalar& base, unsigned exp);

// The argument vector x in R^n; n >= 1, all entries in one numeric mode.
class SymPoint {
 public:
  explicit SymPoint(std::vector<Scalar> entries);

  std::size_t n() const { return entries_.size(); }
  Mode mode() const { return mode_; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool all_equal() const;

 private:
  std::vector<Scalar> entries_;
  Mode mode_;
};

}  // namespace nmsym

#endif
