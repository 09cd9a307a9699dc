#pragma once

/**
 * Truncated jets and the Taylor expansion functor T_n.
 *
 * A jet of order n over R^d is (c_0, ..., c_n), c_k in R^d, read as the
 * truncated series c_0 + c_1 e + ... + c_n e^n. Coefficients are stored
 * coefficient-major: component c of coefficient k sits at k * d + c.
 *
 * A jet of jets (outer index i, inner index j) is stored as the outer jet
 * over R^{d(n+1)}, so `flatten` and `as_grid` only reinterpret the array.
 *
 * T_n f is available numerically through five pushforward routes and
 * symbolically through `taylor_map`. The first four routes agree exactly;
 * `Method::Bis` is the variant without the Snode coefficients.
 */

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taylor/combinatorics.hpp"
#include "taylor/error.hpp"
#include "taylor/expr.hpp"
#include "taylor/scalar.hpp"
#include "taylor/series.hpp"
#include "taylor/tangent.hpp"

namespace taylor {

inline constexpr std::size_t max_symbolic_order = 8;
inline constexpr std::size_t max_operational_order = 64;

enum class Method { Direct, Inductive, Tower, Operational, Bis };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
/// Direct, Inductive, Tower, Operational.
const std::vector<Method>& equivalent_methods();
std::size_t max_order(Method m);

template <Scalar T>
class Jet {
 public:
  Jet() = default;

  /// All-zero jet.
  Jet(std::size_t order, std::size_t dim) : order_(order), dim_(dim), flat_((order + 1) * dim, T(0)) {}

  Jet(std::size_t order, std::size_t dim, std::vector<T> flat) : order_(order), dim_(dim), flat_(std::move(flat)) {
    if (flat_.size() != (order + 1) * dim) {
      throw DomainError("jet of order " + std::to_string(order) + " over dimension " + std::to_string(dim) +
                        " needs " + std::to_string((order + 1) * dim) + " scalars");
    }
  }

  static Jet from_coefficients(const std::vector<std::vector<T>>& coeffs) {
    if (coeffs.empty()) throw DomainError("a jet needs at least its base point");
    const std::size_t d = coeffs[0].size();
    std::vector<T> flat;
    for (const auto& c : coeffs) {
      if (c.size() != d) throw DomainError("jet coefficients have different dimensions");
      flat.insert(flat.end(), c.begin(), c.end());
    }
    return Jet(coeffs.size() - 1, d, std::move(flat));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<T>& flat() const noexcept { return flat_; }

  std::span<const T> coeff(std::size_t k) const {
    if (k > order_) throw DomainError("jet coefficient index out of range");
    return {flat_.data() + k * dim_, dim_};
  }
  std::span<T> coeff(std::size_t k) {
    if (k > order_) throw DomainError("jet coefficient index out of range");
    return {flat_.data() + k * dim_, dim_};
  }

  /// Coefficients of one component as a series.
  Series<T> component(std::size_t c) const {
    Series<T> s;
    s.reserve(order_ + 1);
    for (std::size_t k = 0; k <= order_; ++k) s.push_back(flat_[k * dim_ + c]);
    return s;
  }

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  std::size_t order_ = 0;
  std::size_t dim_ = 0;
  std::vector<T> flat_;
};

template <Scalar T>
class JetOfJets {
 public:
  JetOfJets() = default;
  JetOfJets(std::size_t order, std::size_t dim) : order_(order), dim_(dim), flat_((order + 1) * (order + 1) * dim, T(0)) {}
  JetOfJets(std::size_t order, std::size_t dim, std::vector<T> flat) : order_(order), dim_(dim), flat_(std::move(flat)) {
    if (flat_.size() != (order + 1) * (order + 1) * dim) throw DomainError("jet-of-jets size mismatch");
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<T>& flat() const noexcept { return flat_; }

  std::span<const T> at(std::size_t outer, std::size_t inner) const {
    check(outer, inner);
    return {flat_.data() + (outer * (order_ + 1) + inner) * dim_, dim_};
  }
  std::span<T> at(std::size_t outer, std::size_t inner) {
    check(outer, inner);
    return {flat_.data() + (outer * (order_ + 1) + inner) * dim_, dim_};
  }

  friend bool operator==(const JetOfJets&, const JetOfJets&) = default;

 private:
  void check(std::size_t outer, std::size_t inner) const {
    if (outer > order_ || inner > order_) throw DomainError("jet-of-jets index out of range");
  }

  std::size_t order_ = 0;
  std::size_t dim_ = 0;
  std::vector<T> flat_;
};

/// The outer jet over R^{d(n+1)}.
template <Scalar T>
Jet<T> flatten(const JetOfJets<T>& g) {
  return Jet<T>(g.order(), g.dim() * (g.order() + 1), g.flat());
}

/// Reads a jet of order n over R^{d(n+1)} as a jet of jets over R^d.
template <Scalar T>
JetOfJets<T> as_grid(const Jet<T>& j) {
  const std::size_t n = j.order();
  if (j.dim() % (n + 1) != 0) throw DomainError("as_grid: dimension is not a multiple of order + 1");
  return JetOfJets<T>(n, j.dim() / (n + 1), j.flat());
}

// ---------------------------------------------------------------------------
// Monad structure on jets.

template <Scalar T>
Jet<T> jet_eta(std::span<const T> x, std::size_t n) {
  Jet<T> out(n, x.size());
  std::copy(x.begin(), x.end(), out.coeff(0).begin());
  return out;
}

template <Scalar T>
Jet<T> jet_eta(const std::vector<T>& x, std::size_t n) {
  return jet_eta<T>(std::span<const T>(x), n);
}

/// S_n(eta): grid entry (i, 0) is c_i, all others zero.
template <Scalar T>
JetOfJets<T> jet_eta_inner(const Jet<T>& j) {
  JetOfJets<T> out(j.order(), j.dim());
  for (std::size_t i = 0; i <= j.order(); ++i) {
    auto src = j.coeff(i);
    std::copy(src.begin(), src.end(), out.at(i, 0).begin());
  }
  return out;
}

/// eta at the outer layer: grid entry (0, j) is c_j, all others zero.
template <Scalar T>
JetOfJets<T> jet_eta_outer(const Jet<T>& j) {
  return JetOfJets<T>(j.order(), j.dim(), jet_eta<T>(j.flat(), j.order()).flat());
}

/// Coefficient k is the sum of the grid entries with i + j = k.
template <Scalar T>
Jet<T> jet_mu(const JetOfJets<T>& g) {
  const std::size_t n = g.order();
  Jet<T> out(n, g.dim());
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      auto src = g.at(i, j);
      auto dst = out.coeff(i + j);
      for (std::size_t c = 0; c < g.dim(); ++c) dst[c] += src[c];
    }
  }
  return out;
}

/// Grid entry (i, j) is delta_ij c_i.
template <Scalar T>
JetOfJets<T> jet_lift(const Jet<T>& j) {
  JetOfJets<T> out(j.order(), j.dim());
  for (std::size_t i = 0; i <= j.order(); ++i) {
    auto src = j.coeff(i);
    std::copy(src.begin(), src.end(), out.at(i, i).begin());
  }
  return out;
}

/// Transposes the grid.
template <Scalar T>
JetOfJets<T> jet_swap(const JetOfJets<T>& g) {
  JetOfJets<T> out(g.order(), g.dim());
  for (std::size_t i = 0; i <= g.order(); ++i) {
    for (std::size_t j = 0; j <= g.order(); ++j) {
      auto src = g.at(i, j);
      std::copy(src.begin(), src.end(), out.at(j, i).begin());
    }
  }
  return out;
}

/// Coefficient k multiplied by r^k.
template <Scalar T>
Jet<T> jet_scale(const Jet<T>& j, const T& r) {
  Jet<T> out = j;
  T p(1);
  for (std::size_t k = 0; k <= j.order(); ++k) {
    for (T& x : out.coeff(k)) x = x * p;
    p = p * r;
  }
  return out;
}

/// (c_0, ..., c_m).
template <Scalar T>
Jet<T> jet_truncate(const Jet<T>& j, std::size_t m) {
  if (m > j.order()) throw DomainError("jet_truncate: target order exceeds jet order");
  return Jet<T>(m, j.dim(), std::vector<T>(j.flat().begin(), j.flat().begin() + (m + 1) * j.dim()));
}

/// Outer and inner truncation of a jet of jets to orders (m_outer, m_inner);
/// the result is returned as a flat outer jet over R^{d(m_inner+1)}.
template <Scalar T>
Jet<T> grid_truncate(const JetOfJets<T>& g, std::size_t m_outer, std::size_t m_inner) {
  if (m_outer > g.order() || m_inner > g.order()) throw DomainError("grid_truncate: order out of range");
  std::vector<T> flat;
  for (std::size_t i = 0; i <= m_outer; ++i) {
    for (std::size_t j = 0; j <= m_inner; ++j) {
      auto src = g.at(i, j);
      flat.insert(flat.end(), src.begin(), src.end());
    }
  }
  return Jet<T>(m_outer, g.dim() * (m_inner + 1), std::move(flat));
}

/// Coefficient k paired: ((a_k, b_k)) over R^{d_a + d_b}.
template <Scalar T>
Jet<T> jet_pair(const Jet<T>& a, const Jet<T>& b) {
  if (a.order() != b.order()) throw DomainError("jet_pair: orders differ");
  Jet<T> out(a.order(), a.dim() + b.dim());
  for (std::size_t k = 0; k <= a.order(); ++k) {
    auto dst = out.coeff(k);
    std::copy(a.coeff(k).begin(), a.coeff(k).end(), dst.begin());
    std::copy(b.coeff(k).begin(), b.coeff(k).end(), dst.begin() + a.dim());
  }
  return out;
}

/// Left strength: coefficient k is (a_k, delta_{k0} y).
template <Scalar T>
Jet<T> strength_left(const Jet<T>& a, std::span<const T> y) {
  Jet<T> b(a.order(), y.size());
  std::copy(y.begin(), y.end(), b.coeff(0).begin());
  return jet_pair(a, b);
}

/// Right strength: coefficient k is (delta_{k0} x, b_k).
template <Scalar T>
Jet<T> strength_right(std::span<const T> x, const Jet<T>& b) {
  Jet<T> a(b.order(), x.size());
  std::copy(x.begin(), x.end(), a.coeff(0).begin());
  return jet_pair(a, b);
}

/// S_n f: f applied to every coefficient (T_n f for linear f).
template <Scalar T>
Jet<T> apply_coefficientwise(const SmoothMap& f, const Jet<T>& j) {
  std::vector<T> flat;
  for (std::size_t k = 0; k <= j.order(); ++k) {
    const auto v = eval<T>(f, j.coeff(k));
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return Jet<T>(j.order(), f.coarity(), std::move(flat));
}

// ---------------------------------------------------------------------------
// Snode and the embeddings of jets into towers.

/// ((c_0..c_{n-1}), ((1/n) c_1, (2/n) c_2, ..., (n/n) c_n)).
template <Scalar T>
std::pair<Jet<T>, Jet<T>> snode(const Jet<T>& j) {
  const std::size_t n = j.order();
  if (n == 0) throw DomainError("snode needs a jet of order at least 1");
  Jet<T> first = jet_truncate(j, n - 1);
  Jet<T> second(n - 1, j.dim());
  for (std::size_t k = 1; k <= n; ++k) {
    const T factor = from_int<T>(static_cast<long long>(k)) * inv_int<T>(static_cast<long long>(n));
    auto src = j.coeff(k);
    auto dst = second.coeff(k - 1);
    for (std::size_t c = 0; c < j.dim(); ++c) dst[c] = factor * src[c];
  }
  return {std::move(first), std::move(second)};
}

/// ((c_0..c_{n-1}), (c_1, ..., c_n)).
template <Scalar T>
std::pair<Jet<T>, Jet<T>> snode_bis(const Jet<T>& j) {
  const std::size_t n = j.order();
  if (n == 0) throw DomainError("snode_bis needs a jet of order at least 1");
  return {jet_truncate(j, n - 1),
          Jet<T>(n - 1, j.dim(), std::vector<T>(j.flat().begin() + j.dim(), j.flat().end()))};
}

/// |w|! / w!, the weight of coefficient |w| at tower coordinate w.
Rational stree_weight(const Word& w);

/// Coordinate w is (|w|! / w!) c_{|w|}.
template <Scalar T>
TowerValue<T> stree(const Jet<T>& j) {
  const std::size_t n = j.order();
  TowerValue<T> out(n, j.dim());
  for (std::size_t w = 0; w < out.size(); ++w) {
    const Word word(n, w);
    const T factor = from_rational<T>(stree_weight(word));
    auto src = j.coeff(weight(word));
    auto dst = out.coord(w);
    for (std::size_t c = 0; c < j.dim(); ++c) dst[c] = factor * src[c];
  }
  return out;
}

/// Stree_n = S(Stree_{n-1}) o Snode: the base branch of the outer layer
/// holds Stree of the first Snode component, the tangent branch Stree of
/// the second.
template <Scalar T>
TowerValue<T> stree_inductive(const Jet<T>& j) {
  if (j.order() == 0) return TowerValue<T>(0, j.dim(), j.flat());
  auto [first, second] = snode(j);
  const TowerValue<T> low = stree_inductive(first);
  const TowerValue<T> high = stree_inductive(second);
  std::vector<T> flat = low.flat();
  flat.insert(flat.end(), high.flat().begin(), high.flat().end());
  return TowerValue<T>(j.order(), j.dim(), std::move(flat));
}

/// Coordinate w is c_{|w|}.
template <Scalar T>
TowerValue<T> streebis(const Jet<T>& j) {
  const std::size_t n = j.order();
  TowerValue<T> out(n, j.dim());
  for (std::size_t w = 0; w < out.size(); ++w) {
    auto src = j.coeff(weight(Word(n, w)));
    std::copy(src.begin(), src.end(), out.coord(w).begin());
  }
  return out;
}

/// Recovers the jet from stree(j): coefficient k is read at the word with
/// its k lowest bits set, where the weight is 1. Throws if `t` is not in the
/// image of stree.
template <Scalar T>
Jet<T> stree_inverse(const TowerValue<T>& t) {
  const std::size_t n = t.level();
  std::vector<T> flat;
  for (std::size_t k = 0; k <= n; ++k) {
    auto c = t.coord(Word::ones(k).bits());
    flat.insert(flat.end(), c.begin(), c.end());
  }
  Jet<T> j(n, t.dim(), std::move(flat));
  if (!(stree(j) == t)) throw DomainError("stree_inverse: tower is not in the image of stree");
  return j;
}

/// (Stree_outer . Stree_inner) of a jet of jets given as an outer jet of
/// order m over R^{d(k+1)} whose coefficients are inner jets of order k:
/// a tower of level m + k whose inner words are the low k bits.
template <Scalar T>
TowerValue<T> stree_nested(const Jet<T>& outer, std::size_t inner_order) {
  const std::size_t d = outer.dim() / (inner_order + 1);
  std::vector<T> mapped;
  for (std::size_t i = 0; i <= outer.order(); ++i) {
    auto c = outer.coeff(i);
    const TowerValue<T> t = stree(Jet<T>(inner_order, d, std::vector<T>(c.begin(), c.end())));
    mapped.insert(mapped.end(), t.flat().begin(), t.flat().end());
  }
  const TowerValue<T> result =
      stree(Jet<T>(outer.order(), d << inner_order, std::move(mapped)));
  return from_outer(result, inner_order);
}

// ---------------------------------------------------------------------------
// Pushforwards.

/**
 * Caches the symbolic derivatives of one map: higher derivatives for the
 * direct route, iterated total derivatives for the tower routes, and the
 * inductive terms t_k f. Not safe for concurrent use; make one per thread.
 */
class TaylorPlan {
 public:
  explicit TaylorPlan(SmoothMap f);

  const SmoothMap& map() const noexcept { return f_; }
  std::size_t arity() const noexcept { return f_.arity(); }
  std::size_t coarity() const noexcept { return f_.coarity(); }

  /// D^k f, arity d(k+1).
  const SmoothMap& higher(std::size_t k);
  /// d^k f, arity d 2^k.
  const SmoothMap& iterated(std::size_t k);
  /// t_k f, arity d(k+1), built by t_{k+1} f = d(t_k f) o Snode.
  const SmoothMap& inductive_term(std::size_t k);
  /// The same with Snode replaced by the coefficient-free variant.
  const SmoothMap& inductive_bis_term(std::size_t k);

  /// T_n f as a smooth map R^{d(n+1)} -> R^{e(n+1)}, coefficient-major.
  const SmoothMap& expansion(std::size_t n, Method method);

  template <Scalar T>
  Jet<T> push(const Jet<T>& j, Method method);

 private:
  template <Scalar T>
  Jet<T> push_direct(const Jet<T>& j);
  template <Scalar T>
  Jet<T> push_terms(const Jet<T>& j, bool bis);
  template <Scalar T>
  Jet<T> push_tower(const Jet<T>& j, bool bis);
  template <Scalar T>
  Jet<T> push_operational(const Jet<T>& j);

  SmoothMap f_;
  std::vector<SmoothMap> higher_;
  std::vector<SmoothMap> iterated_;
  std::vector<SmoothMap> terms_;
  std::vector<SmoothMap> bis_terms_;
  std::map<std::pair<std::size_t, Method>, SmoothMap> expansions_;
};

void check_order(std::size_t n, Method method);

template <Scalar T>
Jet<T> TaylorPlan::push(const Jet<T>& j, Method method) {
  check_order(j.order(), method);
  if (j.dim() != f_.arity()) {
    throw DomainError("jet dimension " + std::to_string(j.dim()) + " differs from map arity " +
                      std::to_string(f_.arity()));
  }
  switch (method) {
    case Method::Direct: return push_direct(j);
    case Method::Inductive: return push_terms(j, false);
    case Method::Tower: return push_tower(j, false);
    case Method::Operational: return push_operational(j);
    case Method::Bis: return push_tower(j, true);
  }
  throw DomainError("unknown method");
}

template <Scalar T>
Jet<T> TaylorPlan::push_direct(const Jet<T>& j) {
  const std::size_t n = j.order();
  const std::size_t e = f_.coarity();
  Jet<T> out(n, e);
  const auto base = eval<T>(f_, j.coeff(0));
  std::copy(base.begin(), base.end(), out.coeff(0).begin());
  for (std::size_t k = 1; k <= n; ++k) {
    auto dst = out.coeff(k);
    for (const auto& parts : compositions(k)) {
      std::vector<T> point(j.coeff(0).begin(), j.coeff(0).end());
      for (std::size_t i : parts) point.insert(point.end(), j.coeff(i).begin(), j.coeff(i).end());
      const auto v = eval<T>(higher(parts.size()), point);
      const T weight = from_rational<T>(Rational(1) / Rational(factorial(parts.size())));
      for (std::size_t c = 0; c < e; ++c) dst[c] = dst[c] + weight * v[c];
    }
  }
  return out;
}

template <Scalar T>
Jet<T> TaylorPlan::push_terms(const Jet<T>& j, bool bis) {
  const std::size_t n = j.order();
  std::vector<T> flat;
  for (std::size_t i = 0; i <= n; ++i) {
    const SmoothMap& t = bis ? inductive_bis_term(i) : inductive_term(i);
    const auto v = eval<T>(t, jet_truncate(j, i).flat());
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return Jet<T>(n, f_.coarity(), std::move(flat));
}

template <Scalar T>
Jet<T> TaylorPlan::push_tower(const Jet<T>& j, bool bis) {
  const std::size_t n = j.order();
  std::vector<T> flat;
  for (std::size_t i = 0; i <= n; ++i) {
    const Jet<T> head = jet_truncate(j, i);
    const TowerValue<T> t = bis ? streebis(head) : stree(head);
    const auto v = eval<T>(iterated(i), t.flat());
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return Jet<T>(n, f_.coarity(), std::move(flat));
}

template <Scalar T>
Jet<T> TaylorPlan::push_operational(const Jet<T>& j) {
  SeriesAlgebra<T> algebra{j.order(), {}};
  for (std::size_t c = 0; c < j.dim(); ++c) algebra.inputs.push_back(j.component(c));
  Evaluator<Series<T>, SeriesAlgebra<T>> evaluate(algebra);
  Jet<T> out(j.order(), f_.coarity());
  for (std::size_t c = 0; c < f_.coarity(); ++c) {
    const Series<T>& s = evaluate(f_[c]);
    for (std::size_t k = 0; k <= j.order(); ++k) out.coeff(k)[c] = s[k];
  }
  return out;
}

template <Scalar T>
Jet<T> taylor_push(const SmoothMap& f, const Jet<T>& j, Method method) {
  TaylorPlan plan(f);
  return plan.push(j, method);
}

template <Scalar T>
Jet<T> taylor_push_direct(const SmoothMap& f, const Jet<T>& j) { return taylor_push(f, j, Method::Direct); }
template <Scalar T>
Jet<T> taylor_push_inductive(const SmoothMap& f, const Jet<T>& j) { return taylor_push(f, j, Method::Inductive); }
template <Scalar T>
Jet<T> taylor_push_tower(const SmoothMap& f, const Jet<T>& j) { return taylor_push(f, j, Method::Tower); }
template <Scalar T>
Jet<T> taylor_push_operational(const SmoothMap& f, const Jet<T>& j) { return taylor_push(f, j, Method::Operational); }
template <Scalar T>
Jet<T> taylor_push_bis(const SmoothMap& f, const Jet<T>& j) { return taylor_push(f, j, Method::Bis); }

/// T_n f symbolically: arity d(n+1), coarity e(n+1), coefficient-major.
SmoothMap taylor_map(const SmoothMap& f, std::size_t n, Method method = Method::Operational);

/// T_n (T_n f) on a jet of jets: the outer push of the symbolic T_n f. The
/// inner expansion uses `inner`, the outer evaluation `outer`.
template <Scalar T>
JetOfJets<T> push_jet_of_jets(TaylorPlan& plan, const JetOfJets<T>& g, Method inner = Method::Operational,
                              Method outer = Method::Operational) {
  TaylorPlan outer_plan(plan.expansion(g.order(), inner));
  return as_grid(outer_plan.push(flatten(g), outer));
}

// ---------------------------------------------------------------------------
// Kleisli maps X -> T_n Y.

struct KleisliMap {
  std::size_t order;
  /// R^d -> R^{(order+1) e}, coefficient-major.
  SmoothMap map;

  std::size_t source_dim() const { return map.arity(); }
  std::size_t target_dim() const { return map.coarity() / (order + 1); }
};

/// jet_eta o g.
KleisliMap kleisli_pure(const SmoothMap& g, std::size_t n);
/// mu o T_n g o f.
KleisliMap kleisli_compose(const KleisliMap& g, const KleisliMap& f);

template <Scalar T>
Jet<T> kleisli_apply(const KleisliMap& f, std::span<const T> x) {
  return Jet<T>(f.order, f.target_dim(), eval<T>(f.map, x));
}

/// The symbolic strengths: which = 0 gives (a, y) |-> Phi0(a, y) with a a
/// jet over R^{d0} and y in R^{d1}; which = 1 gives (x, b) |-> Phi1(x, b).
/// Input layout is the flat jet followed by the plain vector for which = 0,
/// the plain vector followed by the flat jet for which = 1.
SmoothMap strength_map(std::size_t d0, std::size_t d1, std::size_t n, int which);

/// Taylor expansion of f : R^{d0} x R^{d1} -> R^e in one argument block,
/// the other held at `plain`. which = 0 expands the first block.
template <Scalar T>
Jet<T> partial_push(const SmoothMap& f, std::size_t d0, int which, const Jet<T>& jet, std::span<const T> plain,
                    Method method = Method::Operational) {
  if (which != 0 && which != 1) throw DomainError("partial_push: which must be 0 or 1");
  const std::size_t expected = which == 0 ? d0 : f.arity() - d0;
  if (jet.dim() != expected || plain.size() + jet.dim() != f.arity()) {
    throw DomainError("partial_push: block dimensions do not match the map arity");
  }
  const Jet<T> mixed = which == 0 ? strength_left(jet, plain) : strength_right(plain, jet);
  return taylor_push(f, mixed, method);
}

}  // namespace taylor
