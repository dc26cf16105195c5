#include "shelfpack/scalar.hpp"

#include <charconv>
#include <system_error>

namespace shelfpack {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  // Boost reads a leading 0 as an octal prefix.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

const char* to_string(Backend backend) {
  return backend == Backend::exact ? "exact" : "float";
}

LiteralKind classify_literal(std::string_view text) {
  if (text.empty()) throw ParseError("empty numeric literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (is_digits(strip_sign(text.substr(0, slash))) && is_digits(text.substr(slash + 1))) {
      return LiteralKind::rational;
    }
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  if (is_digits(strip_sign(text))) return LiteralKind::integer;

  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("malformed numeric literal '" + std::string(text) + "'");
  }
  return LiteralKind::decimal;
}

Rational parse_rational(std::string_view text) {
  switch (classify_literal(text)) {
    case LiteralKind::integer:
      return Rational(parse_integer(text));
    case LiteralKind::rational: {
      auto slash = text.find('/');
      Integer num = parse_integer(text.substr(0, slash));
      Integer den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return Rational(num, den);
    }
    case LiteralKind::decimal:
      break;
  }
  throw ParseError("'" + std::string(text) + "' is not a rational literal");
}

double parse_double(std::string_view text) {
  if (classify_literal(text) == LiteralKind::rational) {
    return parse_rational(text).convert_to<double>();
  }
  double value = 0;
  const char* first = text.data();
  if (*first == '+') ++first;
  std::from_chars(first, text.data() + text.size(), value);
  return value;
}

std::string format_plain(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_decimal(double value) {
  std::string out = format_plain(value);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

double size_from_radius(double radius) {
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw DomainError("radius must be positive and finite");
  }
  return std::sqrt(radius);
}

}  // namespace shelfpack
