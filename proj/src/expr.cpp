#include "taylor/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_set>

namespace taylor {

namespace {

const Expr& zero_expr() {
  static const Expr zero = Expr::constant(Rational(0));
  return zero;
}

const Expr& one_expr() {
  static const Expr one = Expr::constant(Rational(1));
  return one;
}

}  // namespace

Expr::Expr() : node_(zero_expr().node_) {}

Expr Expr::make(Op op, std::size_t aux, Rational value, Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{op, aux, std::move(value), std::move(a), std::move(b)}));
}

Expr Expr::var(std::size_t index) {
  return Expr(std::make_shared<const Node>(Node{Op::Var, index, Rational(0), Expr(nullptr), Expr(nullptr)}));
}

Expr Expr::constant(const Rational& value) {
  return Expr(std::make_shared<const Node>(Node{Op::Const, 0, value, Expr(nullptr), Expr(nullptr)}));
}

Op Expr::op() const { return node_->op; }

std::size_t Expr::index() const {
  if (op() != Op::Var) throw DomainError("index() on a non-variable node");
  return node_->aux;
}

unsigned Expr::exponent() const {
  if (op() != Op::PowInt) throw DomainError("exponent() on a non-power node");
  return static_cast<unsigned>(node_->aux);
}

const Rational& Expr::value() const {
  if (op() != Op::Const) throw DomainError("value() on a non-constant node");
  return node_->value;
}

const Expr& Expr::lhs() const {
  if (!node_->a.node_) throw DomainError("lhs() on a leaf node");
  return node_->a;
}

const Expr& Expr::rhs() const {
  if (!node_->b.node_) throw DomainError("rhs() on a node without a second operand");
  return node_->b;
}

bool Expr::is_zero() const { return is_constant() && value().is_zero(); }
bool Expr::is_one() const { return is_constant() && value().is_one(); }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
  return Expr::make(Op::Add, 0, Rational(0), a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.value());
  if (a.op() == Op::Neg) return a.lhs();
  return Expr::make(Op::Neg, 0, Rational(0), a, Expr(nullptr));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return zero_expr();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
  return Expr::make(Op::Mul, 0, Rational(0), a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_constant()) {
    if (b.value().is_zero()) throw DomainError("division by the constant zero");
    if (a.is_constant()) return Expr::constant(a.value() / b.value());
    return Expr::constant(Rational(1) / b.value()) * a;
  }
  if (a.is_zero()) return zero_expr();
  return Expr::make(Op::Div, 0, Rational(0), a, b);
}

Expr pow(const Expr& base, unsigned exponent) {
  if (exponent == 0) return one_expr();
  if (exponent == 1) return base;
  if (base.is_constant()) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base.value();
    return Expr::constant(r);
  }
  return Expr::make(Op::PowInt, exponent, Rational(0), base, Expr(nullptr));
}

Expr sin(const Expr& a) { return Expr::make(Op::Sin, 0, Rational(0), a, Expr(nullptr)); }
Expr cos(const Expr& a) { return Expr::make(Op::Cos, 0, Rational(0), a, Expr(nullptr)); }
Expr exp(const Expr& a) { return Expr::make(Op::Exp, 0, Rational(0), a, Expr(nullptr)); }
Expr ln(const Expr& a) { return Expr::make(Op::Ln, 0, Rational(0), a, Expr(nullptr)); }

namespace {

template <typename F>
void visit_dag(const Expr& root, F&& f) {
  std::unordered_set<const Expr::Node*> seen;
  std::vector<const Expr*> stack{&root};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    f(*e);
    switch (e->op()) {
      case Op::Var:
      case Op::Const: break;
      case Op::Add:
      case Op::Mul:
      case Op::Div:
        stack.push_back(&e->lhs());
        stack.push_back(&e->rhs());
        break;
      default: stack.push_back(&e->lhs());
    }
  }
}

class Differentiator {
 public:
  explicit Differentiator(std::size_t index) : index_(index) {}

  Expr operator()(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr d = compute(e);
    memo_.emplace(e.id(), d);
    return d;
  }

 private:
  Expr compute(const Expr& e) {
    switch (e.op()) {
      case Op::Var: return e.index() == index_ ? one_expr() : zero_expr();
      case Op::Const: return zero_expr();
      case Op::Add: return (*this)(e.lhs()) + (*this)(e.rhs());
      case Op::Neg: return -(*this)(e.lhs());
      case Op::Mul: return (*this)(e.lhs()) * e.rhs() + e.lhs() * (*this)(e.rhs());
      case Op::PowInt: {
        const unsigned k = e.exponent();
        const Expr inner = (*this)(e.lhs());
        if (inner.is_zero()) return zero_expr();
        return Expr::constant(Rational(k)) * pow(e.lhs(), k - 1) * inner;
      }
      case Op::Sin: return cos(e.lhs()) * (*this)(e.lhs());
      case Op::Cos: return -(sin(e.lhs()) * (*this)(e.lhs()));
      case Op::Exp: return e * (*this)(e.lhs());
      case Op::Ln: return (*this)(e.lhs()) / e.lhs();
      case Op::Div: {
        const Expr da = (*this)(e.lhs());
        const Expr db = (*this)(e.rhs());
        if (db.is_zero()) return da / e.rhs();
        return (da * e.rhs() - e.lhs() * db) / pow(e.rhs(), 2);
      }
    }
    throw DomainError("unknown expression node");
  }

  std::size_t index_;
  std::unordered_map<const Expr::Node*, Expr> memo_;
};

class Substituter {
 public:
  explicit Substituter(std::span<const Expr> replacement) : replacement_(replacement) {}

  Expr operator()(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr r = compute(e);
    memo_.emplace(e.id(), r);
    return r;
  }

 private:
  Expr compute(const Expr& e) {
    switch (e.op()) {
      case Op::Var:
        if (e.index() >= replacement_.size()) {
          throw DomainError("substitution does not cover variable x" + std::to_string(e.index()));
        }
        return replacement_[e.index()];
      case Op::Const: return e;
      case Op::Add: return (*this)(e.lhs()) + (*this)(e.rhs());
      case Op::Mul: return (*this)(e.lhs()) * (*this)(e.rhs());
      case Op::Div: return (*this)(e.lhs()) / (*this)(e.rhs());
      case Op::Neg: return -(*this)(e.lhs());
      case Op::PowInt: return pow((*this)(e.lhs()), e.exponent());
      case Op::Sin: return sin((*this)(e.lhs()));
      case Op::Cos: return cos((*this)(e.lhs()));
      case Op::Exp: return exp((*this)(e.lhs()));
      case Op::Ln: return ln((*this)(e.lhs()));
    }
    throw DomainError("unknown expression node");
  }

  std::span<const Expr> replacement_;
  std::unordered_map<const Expr::Node*, Expr> memo_;
};

// Precedence levels for printing.
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kUnary = 3;
constexpr int kPower = 4;
constexpr int kAtom = 5;

int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add: return kSum;
    case Op::Mul:
    case Op::Div: return kProduct;
    case Op::Neg: return kUnary;
    case Op::PowInt: return kPower;
    case Op::Const: {
      if (!e.value().is_integer()) return kProduct;
      return e.value().sign() < 0 ? kUnary : kAtom;
    }
    default: return kAtom;
  }
}

void print(const Expr& e, std::string& out);

void print_operand(const Expr& e, int min_precedence, std::string& out) {
  if (precedence(e) < min_precedence) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Var: out += "x" + std::to_string(e.index()); return;
    case Op::Const: out += e.value().to_string(); return;
    case Op::Add:
      print_operand(e.lhs(), kSum, out);
      if (e.rhs().op() == Op::Neg) {
        out += " - ";
        print_operand(e.rhs().lhs(), kProduct, out);
      } else {
        out += " + ";
        print_operand(e.rhs(), kProduct, out);
      }
      return;
    case Op::Mul:
      print_operand(e.lhs(), kProduct, out);
      out += '*';
      print_operand(e.rhs(), kUnary, out);
      return;
    case Op::Div:
      print_operand(e.lhs(), kProduct, out);
      out += '/';
      print_operand(e.rhs(), kUnary, out);
      return;
    case Op::Neg:
      out += '-';
      print_operand(e.lhs(), kUnary, out);
      return;
    case Op::PowInt:
      print_operand(e.lhs(), kAtom, out);
      out += '^' + std::to_string(e.exponent());
      return;
    case Op::Sin: out += "sin("; print(e.lhs(), out); out += ')'; return;
    case Op::Cos: out += "cos("; print(e.lhs(), out); out += ')'; return;
    case Op::Exp: out += "exp("; print(e.lhs(), out); out += ')'; return;
    case Op::Ln: out += "ln("; print(e.lhs(), out); out += ')'; return;
  }
}

}  // namespace

Expr partial(const Expr& e, std::size_t index) { return Differentiator(index)(e); }

Expr substitute(const Expr& e, std::span<const Expr> replacement) { return Substituter(replacement)(e); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::size_t variable_bound(const Expr& e) {
  std::size_t bound = 0;
  visit_dag(e, [&](const Expr& n) {
    if (n.op() == Op::Var) bound = std::max(bound, n.index() + 1);
  });
  return bound;
}

bool is_algebraic(const Expr& e) {
  bool ok = true;
  visit_dag(e, [&](const Expr& n) {
    const Op op = n.op();
    if (op == Op::Sin || op == Op::Cos || op == Op::Exp || op == Op::Ln) ok = false;
  });
  return ok;
}

bool is_polynomial(const Expr& e) {
  bool ok = true;
  visit_dag(e, [&](const Expr& n) {
    const Op op = n.op();
    if (op != Op::Var && op != Op::Const && op != Op::Add && op != Op::Mul && op != Op::Neg &&
        op != Op::PowInt) {
      ok = false;
    }
  });
  return ok;
}

std::vector<std::size_t> variables(const Expr& e) {
  std::vector<std::size_t> out;
  visit_dag(e, [&](const Expr& n) {
    if (n.op() == Op::Var) out.push_back(n.index());
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t node_count(const Expr& e) {
  std::size_t count = 0;
  visit_dag(e, [&](const Expr&) { ++count; });
  return count;
}

SmoothMap::SmoothMap(std::size_t arity, std::vector<Expr> body) : arity_(arity), body_(std::move(body)) {
  for (const Expr& e : body_) {
    if (variable_bound(e) > arity_) {
      throw DomainError("expression uses x" + std::to_string(variable_bound(e) - 1) +
                        " but the map has arity " + std::to_string(arity_));
    }
  }
}

bool SmoothMap::is_algebraic() const {
  return std::all_of(body_.begin(), body_.end(), [](const Expr& e) { return taylor::is_algebraic(e); });
}

bool SmoothMap::is_polynomial() const {
  return std::all_of(body_.begin(), body_.end(), [](const Expr& e) { return taylor::is_polynomial(e); });
}

SmoothMap identity_map(std::size_t dim) {
  std::vector<Expr> body;
  body.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) body.push_back(Expr::var(i));
  return SmoothMap(dim, std::move(body));
}

SmoothMap projection_map(std::size_t arity, const std::vector<std::size_t>& indices) {
  std::vector<Expr> body;
  body.reserve(indices.size());
  for (std::size_t i : indices) body.push_back(Expr::var(i));
  return SmoothMap(arity, std::move(body));
}

SmoothMap compose(const SmoothMap& g, const SmoothMap& f) {
  if (g.arity() != f.coarity()) {
    throw DomainError("compose: outer arity " + std::to_string(g.arity()) + " differs from inner coarity " +
                      std::to_string(f.coarity()));
  }
  Substituter substitute_all(f.body());
  std::vector<Expr> body;
  body.reserve(g.coarity());
  for (const Expr& e : g.body()) body.push_back(substitute_all(e));
  return SmoothMap(f.arity(), std::move(body));
}

SmoothMap pair(const SmoothMap& f, const SmoothMap& g) {
  if (f.arity() != g.arity()) throw DomainError("pair: maps have different arities");
  std::vector<Expr> body = f.body();
  body.insert(body.end(), g.body().begin(), g.body().end());
  return SmoothMap(f.arity(), std::move(body));
}

SmoothMap add(const SmoothMap& f, const SmoothMap& g) {
  if (f.arity() != g.arity() || f.coarity() != g.coarity()) throw DomainError("add: shape mismatch");
  std::vector<Expr> body;
  body.reserve(f.coarity());
  for (std::size_t k = 0; k < f.coarity(); ++k) body.push_back(f[k] + g[k]);
  return SmoothMap(f.arity(), std::move(body));
}

SmoothMap scale(const Rational& r, const SmoothMap& f) {
  std::vector<Expr> body;
  body.reserve(f.coarity());
  const Expr c = Expr::constant(r);
  for (const Expr& e : f.body()) body.push_back(c * e);
  return SmoothMap(f.arity(), std::move(body));
}

namespace {

// Appends a new direction block of width `dim` and differentiates the first
// block along it: (y, u) |-> sum_c d g / d y_c (y) u_c, for y of width `arity`.
SmoothMap derivative_along_first_block(const SmoothMap& g, std::size_t dim) {
  const std::size_t arity = g.arity();
  std::vector<Expr> body;
  body.reserve(g.coarity());
  for (const Expr& e : g.body()) {
    Expr sum;
    for (std::size_t c : variables(e)) {
      if (c < dim) sum = sum + partial(e, c) * Expr::var(arity + c);
    }
    body.push_back(sum);
  }
  return SmoothMap(arity + dim, std::move(body));
}

}  // namespace

SmoothMap total_derivative(const SmoothMap& f) {
  const std::size_t d = f.arity();
  std::vector<Expr> body;
  body.reserve(f.coarity());
  for (const Expr& e : f.body()) {
    Expr sum;
    for (std::size_t c : variables(e)) sum = sum + partial(e, c) * Expr::var(d + c);
    body.push_back(sum);
  }
  return SmoothMap(2 * d, std::move(body));
}

std::vector<SmoothMap> higher_derivatives(const SmoothMap& f, std::size_t n) {
  std::vector<SmoothMap> out;
  out.reserve(n + 1);
  out.push_back(f);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(derivative_along_first_block(out.back(), f.arity()));
  return out;
}

SmoothMap higher_derivative(const SmoothMap& f, std::size_t n) { return higher_derivatives(f, n).back(); }

bool equal_probabilistic(const SmoothMap& f, const SmoothMap& g, std::size_t trials, std::uint64_t seed) {
  if (f.arity() != g.arity() || f.coarity() != g.coarity()) {
    throw DomainError("equal_probabilistic: maps have different shapes");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  const bool exact = f.is_algebraic() && g.is_algebraic();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> point;
    point.reserve(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) {
      point.emplace_back(BigInt(numerator(rng)), BigInt(denominator(rng)));
    }
    if (exact) {
      if (eval<Rational>(f, point) != eval<Rational>(g, point)) return false;
    } else {
      std::vector<double> p;
      p.reserve(point.size());
      for (const auto& r : point) p.push_back(r.to_double());
      const auto a = eval<double>(f, p);
      const auto b = eval<double>(g, p);
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (!approx_eq(a[k], b[k], 1e-9, 1e-12)) return false;
      }
    }
  }
  return true;
}

}  // namespace taylor
