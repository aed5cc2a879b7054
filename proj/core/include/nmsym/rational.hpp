#ifndef NMSYM_RATIONAL_HH
#define NMSYM_RATIONAL_HH

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nmsym {

using Int = boost::multiprecision::cpp_int;
// Canonical lowest terms with positive denominator, maintained by the
// backend after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

// "p" or "p/q" with optional leading sign. Throws precondition_error on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

// Exact square root when r is a nonnegative rational square, nullopt
// otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace nmsym

#endif
