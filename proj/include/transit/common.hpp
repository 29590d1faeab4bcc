#pragma once

// Shared exact-arithmetic types and error taxonomy for the transit library.
//
// All probability and geometry computations use exact rationals over
// arbitrary-precision integers; no floating point enters any core result.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace transit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy, mapped to CLI exit codes:
//   ParameterError (and SeamError)  -> exit 2
//   verification failures are reported as data, the CLI maps them -> exit 3
//   ResourceError                   -> exit 4
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a periodic predicate is evaluated on a torus whose side the
// period does not divide: wrapping would silently change the predicate.
struct SeamError : ParameterError {
  using ParameterError::ParameterError;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

// Fractions always serialize as "num/den", including "0/1" and "1/1", so the
// textual form is unambiguous and round-trips exactly.
inline std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw ParameterError("cannot parse fraction: '" + s + "'");
  }
}

// floor(q) for any rational (exact).
inline BigInt rational_floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);  // d > 0 canonical
  BigInt quo = n / d;
  if (n % d != 0 && n < 0) --quo;
  return quo;
}

// An (x, y) pair of exact probabilities; x conventionally belongs to the red
// class and y to the blue class.
struct RationalPair {
  Rational x;
  Rational y;

  RationalPair swapped() const { return {y, x}; }
  bool operator==(const RationalPair& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RationalPair& o) const { return !(*this == o); }
  bool operator<(const RationalPair& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

}  // namespace transit
