#include "taylor/jet.hpp"

namespace taylor {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Inductive: return "inductive";
    case Method::Tower: return "tower";
    case Method::Operational: return "operational";
    case Method::Bis: return "bis";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Direct, Method::Inductive, Method::Tower, Method::Operational, Method::Bis}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

const std::vector<Method>& equivalent_methods() {
  static const std::vector<Method> methods{Method::Direct, Method::Inductive, Method::Tower, Method::Operational};
  return methods;
}

std::size_t max_order(Method m) {
  switch (m) {
    case Method::Operational: return max_operational_order;
    case Method::Tower: return max_tower_level;
    default: return max_symbolic_order;
  }
}

void check_order(std::size_t n, Method method) {
  if (n > max_order(method)) {
    throw DomainError("order " + std::to_string(n) + " exceeds the limit " + std::to_string(max_order(method)) +
                      " of the " + std::string(method_name(method)) + " method");
  }
}

Rational stree_weight(const Word& w) {
  return Rational(factorial(weight(w)), position_factorial(w));
}

TaylorPlan::TaylorPlan(SmoothMap f) : f_(std::move(f)) {}

const SmoothMap& TaylorPlan::higher(std::size_t k) {
  if (k >= higher_.size()) higher_ = higher_derivatives(f_, k);
  return higher_[k];
}

const SmoothMap& TaylorPlan::iterated(std::size_t k) {
  if (k >= iterated_.size()) iterated_ = iterated_derivatives(f_, k);
  return iterated_[k];
}

namespace {

// Substitution realizing (c_0..c_{k+1}) |-> ((c_0..c_k), (w_1 c_1, ..., w_{k+1} c_{k+1}))
// with w_m = m/(k+1), or w_m = 1 for the coefficient-free variant.
SmoothMap snode_substitution(std::size_t d, std::size_t k, bool bis) {
  std::vector<Expr> body;
  body.reserve(2 * d * (k + 1));
  for (std::size_t i = 0; i < d * (k + 1); ++i) body.push_back(Expr::var(i));
  for (std::size_t m = 1; m <= k + 1; ++m) {
    const Expr w = Expr::constant(bis ? Rational(1) : Rational(static_cast<long long>(m)) / Rational(static_cast<long long>(k + 1)));
    for (std::size_t c = 0; c < d; ++c) body.push_back(w * Expr::var(m * d + c));
  }
  return SmoothMap(d * (k + 2), std::move(body));
}

}  // namespace

const SmoothMap& TaylorPlan::inductive_term(std::size_t k) {
  check_order(k, Method::Inductive);
  if (terms_.empty()) terms_.push_back(f_);
  while (terms_.size() <= k) {
    const std::size_t i = terms_.size() - 1;
    terms_.push_back(compose(total_derivative(terms_.back()), snode_substitution(f_.arity(), i, false)));
  }
  return terms_[k];
}

const SmoothMap& TaylorPlan::inductive_bis_term(std::size_t k) {
  check_order(k, Method::Bis);
  if (bis_terms_.empty()) bis_terms_.push_back(f_);
  while (bis_terms_.size() <= k) {
    const std::size_t i = bis_terms_.size() - 1;
    bis_terms_.push_back(compose(total_derivative(bis_terms_.back()), snode_substitution(f_.arity(), i, true)));
  }
  return bis_terms_[k];
}

const SmoothMap& TaylorPlan::expansion(std::size_t n, Method method) {
  check_order(n, method == Method::Operational ? Method::Direct : method);
  const auto key = std::make_pair(n, method);
  if (auto it = expansions_.find(key); it != expansions_.end()) return it->second;

  const std::size_t d = f_.arity();
  const std::size_t e = f_.coarity();
  auto var = [d](std::size_t k, std::size_t c) { return Expr::var(k * d + c); };
  std::vector<Expr> body;
  body.reserve((n + 1) * e);

  switch (method) {
    case Method::Direct: {
      body = f_.body();
      for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Expr> coeff(e);
        for (const auto& parts : compositions(k)) {
          std::vector<Expr> replacement;
          for (std::size_t c = 0; c < d; ++c) replacement.push_back(var(0, c));
          for (std::size_t i : parts) {
            for (std::size_t c = 0; c < d; ++c) replacement.push_back(var(i, c));
          }
          const Expr w = Expr::constant(Rational(1) / Rational(factorial(parts.size())));
          const SmoothMap& h = higher(parts.size());
          for (std::size_t c = 0; c < e; ++c) coeff[c] = coeff[c] + w * substitute(h[c], replacement);
        }
        body.insert(body.end(), coeff.begin(), coeff.end());
      }
      break;
    }
    case Method::Inductive:
    case Method::Bis:
      for (std::size_t k = 0; k <= n; ++k) {
        const SmoothMap& t = method == Method::Bis ? inductive_bis_term(k) : inductive_term(k);
        body.insert(body.end(), t.body().begin(), t.body().end());
      }
      break;
    case Method::Tower:
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Expr> replacement;
        for (std::size_t w = 0; w < (std::size_t{1} << k); ++w) {
          const Word word(k, w);
          const Expr factor = Expr::constant(stree_weight(word));
          for (std::size_t c = 0; c < d; ++c) replacement.push_back(factor * var(weight(word), c));
        }
        const SmoothMap& t = iterated(k);
        for (std::size_t c = 0; c < e; ++c) body.push_back(substitute(t[c], replacement));
      }
      break;
    case Method::Operational: {
      SeriesAlgebra<Expr> algebra{n, {}};
      for (std::size_t c = 0; c < d; ++c) {
        Series<Expr> s;
        for (std::size_t k = 0; k <= n; ++k) s.push_back(var(k, c));
        algebra.inputs.push_back(std::move(s));
      }
      Evaluator<Series<Expr>, SeriesAlgebra<Expr>> evaluate(algebra);
      std::vector<Series<Expr>> outs;
      for (const Expr& out : f_.body()) outs.push_back(evaluate(out));
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t c = 0; c < e; ++c) body.push_back(outs[c][k]);
      }
      break;
    }
  }
  return expansions_.emplace(key, SmoothMap(d * (n + 1), std::move(body))).first->second;
}

SmoothMap taylor_map(const SmoothMap& f, std::size_t n, Method method) {
  TaylorPlan plan(f);
  return plan.expansion(n, method);
}

KleisliMap kleisli_pure(const SmoothMap& g, std::size_t n) {
  std::vector<Expr> body = g.body();
  body.resize((n + 1) * g.coarity());
  return KleisliMap{n, SmoothMap(g.arity(), std::move(body))};
}

KleisliMap kleisli_compose(const KleisliMap& g, const KleisliMap& f) {
  if (g.order != f.order) throw DomainError("kleisli_compose: orders differ");
  if (g.source_dim() != f.target_dim()) throw DomainError("kleisli_compose: dimensions do not match");
  const std::size_t n = g.order;
  const std::size_t ez = g.target_dim();
  const SmoothMap tg = taylor_map(g.map, n, Method::Operational);
  // tg coefficient i (outer) holds the jet g(y) whose coefficient j is at
  // i * (n+1) ez + j * ez.
  std::vector<Expr> body((n + 1) * ez);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      for (std::size_t c = 0; c < ez; ++c) {
        body[(i + j) * ez + c] = body[(i + j) * ez + c] + tg[(i * (n + 1) + j) * ez + c];
      }
    }
  }
  return KleisliMap{n, compose(SmoothMap(tg.arity(), std::move(body)), f.map)};
}

SmoothMap strength_map(std::size_t d0, std::size_t d1, std::size_t n, int which) {
  if (which != 0 && which != 1) throw DomainError("strength_map: which must be 0 or 1");
  std::vector<Expr> body;
  body.reserve((n + 1) * (d0 + d1));
  for (std::size_t k = 0; k <= n; ++k) {
    if (which == 0) {
      for (std::size_t c = 0; c < d0; ++c) body.push_back(Expr::var(k * d0 + c));
      for (std::size_t c = 0; c < d1; ++c) body.push_back(k == 0 ? Expr::var((n + 1) * d0 + c) : Expr());
    } else {
      for (std::size_t c = 0; c < d0; ++c) body.push_back(k == 0 ? Expr::var(c) : Expr());
      for (std::size_t c = 0; c < d1; ++c) body.push_back(Expr::var(d0 + k * d1 + c));
    }
  }
  return SmoothMap(which == 0 ? (n + 1) * d0 + d1 : d0 + (n + 1) * d1, std::move(body));
}

}  // namespace taylor
