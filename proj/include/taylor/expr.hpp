#pragma once

/**
 * Symbolic smooth maps R^d -> R^e.
 *
 * `Expr` is an immutable expression DAG. Subterms are shared freely, so every
 * traversal (evaluation, differentiation, substitution) memoizes on node
 * identity. The smart constructors fold constants and drop neutral elements;
 * no other simplification is performed.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "taylor/error.hpp"
#include "taylor/scalar.hpp"

namespace taylor {

enum class Op : std::uint8_t { Var, Const, Add, Mul, Neg, PowInt, Sin, Cos, Exp, Ln, Div };

class Expr {
 public:
  struct Node;

  /// The constant zero.
  Expr();

  static Expr var(std::size_t index);
  static Expr constant(const Rational& value);

  Op op() const;
  /// Variable index (Var only).
  std::size_t index() const;
  /// Exponent (PowInt only).
  unsigned exponent() const;
  /// Constant value (Const only).
  const Rational& value() const;
  /// First operand (Add, Mul, Neg, PowInt, Sin, Cos, Exp, Ln, Div).
  const Expr& lhs() const;
  /// Second operand (Add, Mul, Div).
  const Expr& rhs() const;

  bool is_constant() const { return op() == Op::Const; }
  bool is_zero() const;
  bool is_one() const;

  /// Node identity, used as a memoization key.
  const Node* id() const noexcept { return node_.get(); }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, unsigned exponent);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr ln(const Expr& a);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, std::size_t aux, Rational value, Expr a, Expr b);

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  std::size_t aux;  // variable index or exponent
  Rational value;
  Expr a;
  Expr b;
};

/// Symbolic partial derivative with respect to variable `index`.
Expr partial(const Expr& e, std::size_t index);

/// Replaces every Var(i) by `replacement[i]`.
Expr substitute(const Expr& e, std::span<const Expr> replacement);

/// Readable infix form, reparsable by `parse`.
std::string to_string(const Expr& e);

/// Largest variable index + 1 (0 for closed expressions).
std::size_t variable_bound(const Expr& e);

/// True when no Sin/Cos/Exp/Ln node occurs.
bool is_algebraic(const Expr& e);

/// True when only Var/Const/Add/Mul/Neg/PowInt nodes occur.
bool is_polynomial(const Expr& e);

/// Sorted indices of the variables that occur.
std::vector<std::size_t> variables(const Expr& e);

/// Number of distinct nodes in the DAG.
std::size_t node_count(const Expr& e);

/**
 * Generic memoized evaluation. `Algebra` interprets leaves and operators:
 *
 *   V var(std::size_t); V constant(const Rational&);
 *   V add(const V&, const V&); V mul(const V&, const V&); V neg(const V&);
 *   V pow(const V&, unsigned); V div(const V&, const V&);
 *   V sin(const V&); V cos(const V&); V exp(const V&); V ln(const V&);
 */
template <typename V, typename Algebra>
class Evaluator {
 public:
  explicit Evaluator(Algebra& algebra) : algebra_(algebra) {}

  const V& operator()(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    V result = compute(e);
    return memo_.emplace(e.id(), std::move(result)).first->second;
  }

 private:
  V compute(const Expr& e) {
    switch (e.op()) {
      case Op::Var: return algebra_.var(e.index());
      case Op::Const: return algebra_.constant(e.value());
      case Op::Add: {
        const V& l = (*this)(e.lhs());
        return algebra_.add(l, (*this)(e.rhs()));
      }
      case Op::Mul: {
        const V& l = (*this)(e.lhs());
        return algebra_.mul(l, (*this)(e.rhs()));
      }
      case Op::Div: {
        const V& l = (*this)(e.lhs());
        return algebra_.div(l, (*this)(e.rhs()));
      }
      case Op::Neg: return algebra_.neg((*this)(e.lhs()));
      case Op::PowInt: return algebra_.pow((*this)(e.lhs()), e.exponent());
      case Op::Sin: return algebra_.sin((*this)(e.lhs()));
      case Op::Cos: return algebra_.cos((*this)(e.lhs()));
      case Op::Exp: return algebra_.exp((*this)(e.lhs()));
      case Op::Ln: return algebra_.ln((*this)(e.lhs()));
    }
    throw DomainError("unknown expression node");
  }

  Algebra& algebra_;
  std::unordered_map<const Expr::Node*, V> memo_;
};

/// Integer power by repeated squaring over any multiplicative type.
template <typename V, typename Mul>
V power_by_squaring(V base, unsigned exponent, V one, Mul mul) {
  V result = std::move(one);
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

template <Scalar T>
struct ScalarAlgebra {
  std::span<const T> point;

  T var(std::size_t i) const {
    if (i >= point.size()) throw DomainError("variable index outside the evaluation point");
    return point[i];
  }
  T constant(const Rational& r) const { return from_rational<T>(r); }
  T add(const T& a, const T& b) const { return a + b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T pow(const T& a, unsigned k) const {
    return power_by_squaring<T>(a, k, T(1), [](const T& x, const T& y) { return x * y; });
  }
  T div(const T& a, const T& b) const {
    if (is_zero(b)) throw DomainError("division by zero during evaluation");
    return a / b;
  }
  T sin(const T& a) const { using std::sin; return sin(a); }
  T cos(const T& a) const { using std::cos; return cos(a); }
  T exp(const T& a) const { using std::exp; return exp(a); }
  T ln(const T& a) const { using std::log; return log(a); }
};

/// A smooth map R^arity -> R^coarity given by one expression per output.
class SmoothMap {
 public:
  SmoothMap(std::size_t arity, std::vector<Expr> body);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t coarity() const noexcept { return body_.size(); }
  const std::vector<Expr>& body() const noexcept { return body_; }
  const Expr& operator[](std::size_t k) const { return body_.at(k); }

  bool is_algebraic() const;
  bool is_polynomial() const;

 private:
  std::size_t arity_;
  std::vector<Expr> body_;
};

SmoothMap identity_map(std::size_t dim);
/// The projection R^arity -> R^|indices| onto the listed coordinates.
SmoothMap projection_map(std::size_t arity, const std::vector<std::size_t>& indices);
/// g o f. Requires g.arity() == f.coarity().
SmoothMap compose(const SmoothMap& g, const SmoothMap& f);
/// <f, g>: same arity, outputs concatenated.
SmoothMap pair(const SmoothMap& f, const SmoothMap& g);
/// f + g componentwise.
SmoothMap add(const SmoothMap& f, const SmoothMap& g);
/// r . f componentwise.
SmoothMap scale(const Rational& r, const SmoothMap& f);

template <Scalar T>
std::vector<T> eval(const SmoothMap& f, std::span<const T> point) {
  if (point.size() != f.arity()) {
    throw DomainError("evaluation point has " + std::to_string(point.size()) +
                      " coordinates, map arity is " + std::to_string(f.arity()));
  }
  ScalarAlgebra<T> algebra{point};
  Evaluator<T, ScalarAlgebra<T>> evaluate(algebra);
  std::vector<T> out;
  out.reserve(f.coarity());
  for (const Expr& e : f.body()) out.push_back(evaluate(e));
  return out;
}

template <Scalar T>
std::vector<T> eval(const SmoothMap& f, const std::vector<T>& point) {
  return eval<T>(f, std::span<const T>(point));
}

/// (x, u) |-> sum_i d_i f(x) u_i, arity 2d. Variables x_0..x_{d-1}, u_0..u_{d-1}.
SmoothMap total_derivative(const SmoothMap& f);

/// The n-th derivative (x, u_1, ..., u_n) |-> D^n f(x)(u_1, ..., u_n),
/// arity d(n+1), block k holding u_k. n = 0 returns f.
SmoothMap higher_derivative(const SmoothMap& f, std::size_t n);

/// All higher derivatives of orders 0..n, each built from the previous one.
std::vector<SmoothMap> higher_derivatives(const SmoothMap& f, std::size_t n);

/// Randomized identity test. Points are rationals p/q, p in [-9, 9],
/// q in [1, 4], drawn from a seeded mt19937_64. Exact over rationals when
/// both maps are algebraic; otherwise compared in f64 with relative
/// tolerance 1e-9. A `false` answer is definitive.
bool equal_probabilistic(const SmoothMap& f, const SmoothMap& g, std::size_t trials,
                         std::uint64_t seed);

}  // namespace taylor
