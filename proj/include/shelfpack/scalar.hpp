#pragma once

// Numeric backends. Every geometric routine in the library is a template over
// the scalar type; the two supported instantiations are `double` and the exact
// GMP-backed `Rational`. Mixing the two inside one computation is a compile
// error because no implicit conversion exists between them.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <string_view>

#include "shelfpack/errors.hpp"

namespace shelfpack {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class Backend { exact, floating };

const char* to_string(Backend backend);

/// Syntactic class of a numeric literal in instance and placement files.
/// Integers are compatible with both backends.
enum class LiteralKind { integer, rational, decimal };

/// Classifies `text`; throws ParseError when it is not a numeric literal.
LiteralKind classify_literal(std::string_view text);

/// Parses "p/q" or "p" into a reduced rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Parses any finite literal (including "p/q") into a double. Throws ParseError.
double parse_double(std::string_view text);

/// Shortest round-trip decimal text, always containing '.' or an exponent so
/// that it re-parses as a decimal literal.
std::string format_decimal(double value);

/// Shortest round-trip text without the forced decimal point ("4", "0.5").
std::string format_plain(double value);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::floating;
  static constexpr const char* name = "float";

  static bool valid(double v) { return std::isfinite(v); }
  static double from_literal(std::string_view text) { return parse_double(text); }
  static std::string to_literal(double v) { return format_decimal(v); }
  static std::string to_display(double v) { return format_plain(v); }
  static double to_double(double v) { return v; }
  static double default_tolerance() { return 1e-9; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::exact;
  static constexpr const char* name = "exact";

  static bool valid(const Rational&) { return true; }
  static Rational from_literal(std::string_view text) {
    if (classify_literal(text) == LiteralKind::decimal) {
      throw PreconditionError("decimal literal '" + std::string(text) +
                              "' cannot be used with the exact backend");
    }
    return parse_rational(text);
  }
  static std::string to_literal(const Rational& v) { return v.str(); }
  static std::string to_display(const Rational& v) { return v.str(); }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational default_tolerance() { return Rational(0); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::backend; };

/// Exact value of the ratio p/q.
inline Rational make_rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  return Rational(Integer(numerator), Integer(denominator));
}

/// Converts a size given as a radius (size = sqrt(radius)). Float only, since
/// square roots of rationals are generally irrational.
double size_from_radius(double radius);

}  // namespace shelfpack
