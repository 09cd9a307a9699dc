#pragma once

/**
 * Truncated power series arithmetic in one formal variable epsilon.
 *
 * A series of order n is a vector of n + 1 coefficients. The element type
 * may be `Rational`, `double` or `Expr`; the last gives the symbolic
 * expansion of a map in terms of its input coefficients.
 */

#include <cmath>
#include <type_traits>
#include <vector>

#include "taylor/error.hpp"
#include "taylor/expr.hpp"
#include "taylor/scalar.hpp"

namespace taylor {

namespace series_detail {

template <typename V>
V constant(const Rational& r) {
  if constexpr (std::is_same_v<V, Expr>) {
    return Expr::constant(r);
  } else {
    return from_rational<V>(r);
  }
}

inline bool known_zero(const Rational& r) { return r.is_zero(); }
inline bool known_zero(double d) { return d == 0.0; }
inline bool known_zero(const Expr& e) { return e.is_zero(); }

inline double elem_exp(double x) { return std::exp(x); }
inline double elem_sin(double x) { return std::sin(x); }
inline double elem_cos(double x) { return std::cos(x); }
inline double elem_ln(double x) { return std::log(x); }
inline Rational elem_exp(const Rational& x) { return taylor::exp(x); }
inline Rational elem_sin(const Rational& x) { return taylor::sin(x); }
inline Rational elem_cos(const Rational& x) { return taylor::cos(x); }
inline Rational elem_ln(const Rational& x) { return taylor::log(x); }
inline Expr elem_exp(const Expr& x) { return exp(x); }
inline Expr elem_sin(const Expr& x) { return sin(x); }
inline Expr elem_cos(const Expr& x) { return cos(x); }
inline Expr elem_ln(const Expr& x) { return ln(x); }

}  // namespace series_detail

template <typename V>
using Series = std::vector<V>;

/// Evaluation algebra for `Evaluator`: variable i is the series
/// `inputs[i]`, every operation is truncated at `order`.
template <typename V>
struct SeriesAlgebra {
  std::size_t order;
  std::vector<Series<V>> inputs;

  Series<V> zero() const { return Series<V>(order + 1, series_detail::constant<V>(Rational(0))); }

  Series<V> var(std::size_t i) const {
    if (i >= inputs.size()) throw DomainError("variable index outside the jet dimension");
    return inputs[i];
  }

  Series<V> constant(const Rational& r) const {
    Series<V> out = zero();
    out[0] = series_detail::constant<V>(r);
    return out;
  }

  Series<V> add(const Series<V>& a, const Series<V>& b) const {
    Series<V> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out[k] = a[k] + b[k];
    return out;
  }

  Series<V> neg(const Series<V>& a) const {
    Series<V> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out[k] = -a[k];
    return out;
  }

  Series<V> mul(const Series<V>& a, const Series<V>& b) const {
    Series<V> out = zero();
    for (std::size_t i = 0; i <= order; ++i) {
      if (series_detail::known_zero(a[i])) continue;
      for (std::size_t j = 0; i + j <= order; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
  }

  Series<V> pow(const Series<V>& a, unsigned k) const {
    return power_by_squaring<Series<V>>(a, k, constant(Rational(1)),
                                        [this](const Series<V>& x, const Series<V>& y) { return mul(x, y); });
  }

  Series<V> div(const Series<V>& a, const Series<V>& b) const {
    if (series_detail::known_zero(b[0])) throw DomainError("division by a jet whose base coefficient is zero");
    Series<V> q(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
      V acc = a[k];
      for (std::size_t j = 1; j <= k; ++j) acc = acc - b[j] * q[k - j];
      q[k] = acc / b[0];
    }
    return q;
  }

  Series<V> exp(const Series<V>& a) const {
    Series<V> b(order + 1);
    b[0] = series_detail::elem_exp(a[0]);
    for (std::size_t k = 1; k <= order; ++k) {
      V acc = series_detail::constant<V>(Rational(0));
      for (std::size_t j = 1; j <= k; ++j) acc = acc + series_detail::constant<V>(Rational(j)) * a[j] * b[k - j];
      b[k] = series_detail::constant<V>(Rational(1) / Rational(k)) * acc;
    }
    return b;
  }

  /// The coupled sine/cosine recurrences; returns {sin a, cos a}.
  std::pair<Series<V>, Series<V>> sin_cos(const Series<V>& a) const {
    Series<V> s(order + 1);
    Series<V> c(order + 1);
    s[0] = series_detail::elem_sin(a[0]);
    c[0] = series_detail::elem_cos(a[0]);
    for (std::size_t k = 1; k <= order; ++k) {
      V ss = series_detail::constant<V>(Rational(0));
      V cc = series_detail::constant<V>(Rational(0));
      for (std::size_t j = 1; j <= k; ++j) {
        const V ja = series_detail::constant<V>(Rational(j)) * a[j];
        ss = ss + ja * c[k - j];
        cc = cc + ja * s[k - j];
      }
      const V inv_k = series_detail::constant<V>(Rational(1) / Rational(k));
      s[k] = inv_k * ss;
      c[k] = -(inv_k * cc);
    }
    return {s, c};
  }

  Series<V> sin(const Series<V>& a) const { return sin_cos(a).first; }
  Series<V> cos(const Series<V>& a) const { return sin_cos(a).second; }

  Series<V> ln(const Series<V>& a) const {
    if (series_detail::known_zero(a[0])) throw DomainError("logarithm of a jet whose base coefficient is zero");
    Series<V> b(order + 1);
    b[0] = series_detail::elem_ln(a[0]);
    for (std::size_t k = 1; k <= order; ++k) {
      V acc = series_detail::constant<V>(Rational(0));
      for (std::size_t j = 1; j < k; ++j) acc = acc + series_detail::constant<V>(Rational(j)) * b[j] * a[k - j];
      b[k] = (a[k] - series_detail::constant<V>(Rational(1) / Rational(k)) * acc) / a[0];
    }
    return b;
  }
};

/// Cauchy product of two truncated series of equal order.
template <typename V>
Series<V> cauchy_product(const Series<V>& a, const Series<V>& b) {
  if (a.size() != b.size() || a.empty()) throw DomainError("cauchy_product: order mismatch");
  return SeriesAlgebra<V>{a.size() - 1, {}}.mul(a, b);
}

}  // namespace taylor
