// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Scalar abstraction. Every geometric routine in liegeo is templated on the
// scalar field: `double` for the floating-point path and `liegeo::Rational`
// (arbitrary-precision rationals) for the exact path. All closed-form
// quantities produced by the library on rational inputs are themselves
// rational, so the exact path returns them without rounding.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace liegeo {

/// Arbitrary-precision rational number (canonicalized fraction of big integers).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a computation on the exact-rational path would require an
/// irrational intermediate value (for example an orthonormal frame for a Gram
/// matrix whose Cholesky pivots are not perfect squares). Callers that need
/// such inputs should use the `double` path instead.
class exact_arithmetic_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Uniform construction and queries over the two scalar fields.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;

  static double from_int(std::int64_t n) { return static_cast<double>(n); }
  static double from_fraction(std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_double(double x) { return x; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }

  /// Square root; the argument must be non-negative.
  static double sqrt(double x) {
    if (x < 0.0) throw std::domain_error("liegeo: square root of a negative value");
    return std::sqrt(x);
  }

  static std::string to_string(double x) { return std::to_string(x); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;

  static Rational from_int(std::int64_t n) { return Rational(n); }
  static Rational from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("liegeo: zero denominator");
    return Rational(num, den);
  }
  /// Exact conversion: every finite IEEE double is a dyadic rational.
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("liegeo: non-finite value is not rational");
    return Rational(x);
  }
  static double to_double(const Rational& x) { return x.template convert_to<double>(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

  /// Exact square root. Throws exact_arithmetic_error unless the value is the
  /// square of a rational.
  static Rational sqrt(const Rational& x) {
    if (x < 0) throw std::domain_error("liegeo: square root of a negative value");
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt rnum = boost::multiprecision::sqrt(num);
    const BigInt rden = boost::multiprecision::sqrt(den);
    if (rnum * rnum != num || rden * rden != den) {
      throw exact_arithmetic_error(
          "liegeo: exact square root required but the value is not a perfect square; "
          "use the floating-point path for this input");
    }
    return Rational(rnum, rden);
  }

  static std::string to_string(const Rational& x) { return x.str(); }
};

}  // namespace liegeo
