#pragma once

/**
 * Number abstraction shared by every module.
 *
 * Two realizations satisfy the `Scalar` concept:
 *   - `Rational`: exact arbitrary-precision rationals, always reduced with a
 *     positive denominator. All algebraic-law checks run on this type.
 *   - `double`: IEEE binary64, used for transcendental functions.
 *
 * Both provide reciprocals of positive integers (`inv_int`).
 */

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "taylor/error.hpp"

namespace taylor {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& value) : value_(value) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p/q", decimals like "0.25" or "-1.5e-3". Exact.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
std::string to_string(const Rational& r);

/// Per-realization behaviour. Specialized for `Rational` and `double` only.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "f64";
  static double from_rational(const Rational& r) { return r.to_double(); }
};

template <typename T>
concept Scalar = requires(T a, T b) {
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

/// The canonical semiring morphism N -> R: k |-> 1 + ... + 1.
template <Scalar T>
T from_int(long long k) {
  return T(k);
}

/// Multiplicative inverse of a positive integer.
template <Scalar T>
T inv_int(long long n) {
  if (n <= 0) throw DomainError("inv_int: argument must be a positive integer");
  return T(1) / T(n);
}

template <Scalar T>
T from_rational(const Rational& r) {
  return ScalarTraits<T>::from_rational(r);
}

/// |a-b| <= abs_tol + rel_tol * max(|a|,|b|). Rationals compare exactly.
template <Scalar T>
bool approx_eq(const T& a, const T& b, const T& rel_tol, const T& abs_tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    if (a == b) return true;
    const double diff = std::fabs(a - b);
    const double scale = std::fmax(std::fabs(a), std::fabs(b));
    return diff <= abs_tol + rel_tol * scale;
  }
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double d) { return d == 0.0; }

std::string to_string(double d);

// Elementary functions. The rational overloads throw DomainError: their
// values are irrational, so exact paths must never reach them.
Rational exp(const Rational&);
Rational sin(const Rational&);
Rational cos(const Rational&);
Rational log(const Rational&);

}  // namespace taylor
