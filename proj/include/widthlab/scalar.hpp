#pragma once

// Scalar layer: exact rationals (default) and a double adapter sharing one
// predicate interface. Exact mode compares with no tolerance; double mode
// compares against the process-wide tolerance.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace widthlab {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Process-wide tolerance tau_num used by all double-mode predicates.
inline double& numeric_tolerance() {
  static double tol = 1e-9;
  return tol;
}

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static int sign(const Rat& a) { return a.sign(); }
  static bool eq(const Rat& a, const Rat& b) { return a == b; }
  static bool leq(const Rat& a, const Rat& b) { return a <= b; }
  static double to_double(const Rat& a) { return a.convert_to<double>(); }
  static Rat from_int(long v) { return Rat(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static int sign(double a) {
    if (std::abs(a) <= numeric_tolerance()) return 0;
    return a < 0 ? -1 : 1;
  }
  static bool eq(double a, double b) { return std::abs(a - b) <= numeric_tolerance(); }
  static bool leq(double a, double b) { return a <= b + numeric_tolerance(); }
  static double to_double(double a) { return a; }
  static double from_int(long v) { return static_cast<double>(v); }
};

template <typename S>
S abs_value(const S& a) {
  return ScalarTraits<S>::sign(a) < 0 ? S(-a) : a;
}

/// Parses "p/q", plain integers, and finite decimals ("-1.25") exactly.
inline Rat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw std::invalid_argument("bad decimal literal: " + s);
    BigInt num(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  }
  return Rat(BigInt(s));
}

/// Canonical "p/q" form (lowest terms, positive denominator, q printed even
/// when 1) used by all serialized output.
inline std::string format_rational(const Rat& a) {
  return numerator(a).str() + "/" + denominator(a).str();
}

template <typename S>
S scalar_from_string(std::string_view text);

template <>
inline Rat scalar_from_string<Rat>(std::string_view text) {
  return parse_rational(text);
}

template <>
inline double scalar_from_string<double>(std::string_view text) {
  return ScalarTraits<Rat>::to_double(parse_rational(text));
}

}  // namespace widthlab
