#include "taylor/laws.hpp"

#include <cmath>
#include <sstream>

#include "taylor/combinatorics.hpp"
#include "taylor/series.hpp"

namespace taylor {

namespace {

using Vec = std::vector<Rational>;
using Result = std::optional<std::string>;

std::string show(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

std::string show(const SmoothMap& f) {
  std::string s = "R^" + std::to_string(f.arity()) + " -> (";
  for (std::size_t i = 0; i < f.coarity(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(f[i]);
  }
  return s + ")";
}

std::string show(const WMatrix& m) {
  std::string s = m.to_string();
  if (s.empty()) return "0";
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  return s;
}

Vec at(const SmoothMap& f, const Vec& p) { return eval<Rational>(f, p); }

Vec concat(std::initializer_list<Vec> parts) {
  Vec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vscale(const Rational& r, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r * a[i];
  return out;
}

Result differ(const std::string& instance, const Vec& lhs, const Vec& rhs) {
  if (lhs == rhs) return std::nullopt;
  return instance + "; lhs " + show(lhs) + " rhs " + show(rhs);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(random_int(rng, static_cast<long long>(lo), static_cast<long long>(hi)));
}

Vec span_vec(std::span<const Rational> s) { return {s.begin(), s.end()}; }

// ---------------------------------------------------------------------------
// Derivative operator.

Result derivative_chain_rule(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 2), e = pick(rng, 1, 2), k = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, e, 4);
  const SmoothMap g = random_polynomial_map(rng, e, k, 4);
  std::vector<std::size_t> first(d);
  for (std::size_t i = 0; i < d; ++i) first[i] = i;
  const SmoothMap lhs = total_derivative(compose(g, f));
  const SmoothMap rhs =
      compose(total_derivative(g), pair(compose(f, projection_map(2 * d, first)), total_derivative(f)));
  const Vec p = random_vector(rng, 2 * d);
  return differ("f = " + show(f) + ", g = " + show(g) + ", at " + show(p), at(lhs, p), at(rhs, p));
}

Result derivative_additive(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const SmoothMap df = total_derivative(f);
  const Vec x = random_vector(rng, d), u = random_vector(rng, d), v = random_vector(rng, d);
  const Rational r = random_rational(rng);
  const std::string inst = "f = " + show(f) + ", x " + show(x) + ", u " + show(u) + ", v " + show(v);
  if (auto bad = differ(inst, at(df, concat({x, vadd(u, v)})), vadd(at(df, concat({x, u})), at(df, concat({x, v})))))
    return bad;
  return differ(inst + ", r " + r.to_string(), at(df, concat({x, vscale(r, u)})), vscale(r, at(df, concat({x, u}))));
}

Result derivative_linear_in_direction(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const SmoothMap ddf = total_derivative(total_derivative(f));
  const Vec x = random_vector(rng, d), u = random_vector(rng, d), zero(d, Rational(0));
  return differ("f = " + show(f) + ", x " + show(x) + ", u " + show(u), at(ddf, concat({x, zero, zero, u})),
                at(total_derivative(f), concat({x, u})));
}

Result derivative_symmetric(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const SmoothMap ddf = total_derivative(total_derivative(f));
  const Vec x = random_vector(rng, d), u = random_vector(rng, d), v = random_vector(rng, d), w = random_vector(rng, d);
  return differ("f = " + show(f) + ", at " + show(concat({x, u, v, w})), at(ddf, concat({x, u, v, w})),
                at(ddf, concat({x, v, u, w})));
}

Result derivative_of_pair(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const SmoothMap g = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const Vec p = random_vector(rng, 2 * d);
  return differ("f = " + show(f) + ", g = " + show(g) + ", at " + show(p), at(total_derivative(pair(f, g)), p),
                at(pair(total_derivative(f), total_derivative(g)), p));
}

Result higher_derivative_multilinear_symmetric(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 2), n = pick(rng, 2, 3);
  const SmoothMap f = random_polynomial_map(rng, d, 1, 4);
  const SmoothMap h = higher_derivative(f, n);
  std::vector<Vec> blocks;
  for (std::size_t k = 0; k <= n; ++k) blocks.push_back(random_vector(rng, d));
  auto join = [](const std::vector<Vec>& bs) {
    Vec out;
    for (const auto& b : bs) out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  const std::size_t i = pick(rng, 1, n - 1);
  const std::size_t j = pick(rng, i + 1, n);
  const std::string inst = "f = " + show(f) + ", n " + std::to_string(n) + ", at " + show(join(blocks));
  std::vector<Vec> swapped = blocks;
  std::swap(swapped[i], swapped[j]);
  if (auto bad = differ(inst + ", swap " + std::to_string(i) + "," + std::to_string(j), at(h, join(blocks)),
                        at(h, join(swapped))))
    return bad;
  const Rational r = random_rational(rng);
  const Vec v = random_vector(rng, d);
  std::vector<Vec> scaled = blocks, other = blocks, summed = blocks;
  scaled[i] = vscale(r, blocks[i]);
  other[i] = v;
  summed[i] = vadd(blocks[i], v);
  if (auto bad = differ(inst + ", scale block " + std::to_string(i) + " by " + r.to_string(), at(h, join(scaled)),
                        vscale(r, at(h, join(blocks)))))
    return bad;
  return differ(inst + ", add " + show(v) + " to block " + std::to_string(i), at(h, join(summed)),
                vadd(at(h, join(blocks)), at(h, join(other))));
}

Result second_derivative_decomposition(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const Vec x = random_vector(rng, d), u = random_vector(rng, d), v = random_vector(rng, d), w = random_vector(rng, d);
  return differ("f = " + show(f) + ", at " + show(concat({x, u, v, w})),
                at(total_derivative(total_derivative(f)), concat({x, u, v, w})),
                vadd(at(higher_derivative(f, 2), concat({x, u, v})), at(total_derivative(f), concat({x, w}))));
}

// ---------------------------------------------------------------------------
// Towers.

using Tower = TowerValue<Rational>;

Result tower_functor(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2), e = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, e, 3);
  const SmoothMap g = random_polynomial_map(rng, e, pick(rng, 1, 2), 3);
  const Tower t = random_tower(rng, n, d);
  const Tower lhs = tower_push(iterated_push(compose(g, f), n), n, t);
  const Tower rhs = tower_push(iterated_push(g, n), n, tower_push(iterated_push(f, n), n, t));
  return differ("f = " + show(f) + ", g = " + show(g) + ", n " + std::to_string(n) + ", tower " + show(t.flat()),
                lhs.flat(), rhs.flat());
}

Result tower_unit_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const Vec x = random_vector(rng, d);
  const Vec fx = at(f, x);
  return differ("f = " + show(f) + ", n " + std::to_string(n) + ", x " + show(x),
                tower_push(iterated_push(f, n), n, tower_eta<Rational>(x, n)).flat(),
                tower_eta<Rational>(fx, n).flat());
}

Result tower_mult_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 2), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const Tower t = random_tower(rng, 2 * n, d);
  return differ("f = " + show(f) + ", n " + std::to_string(n) + ", tower " + show(t.flat()),
                tower_push(iterated_push(f, n), n, tower_mu(t)).flat(),
                tower_mu(tower_push(iterated_push(f, 2 * n), 2 * n, t)).flat());
}

Result tower_swap_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 2), m = pick(rng, 1, 2), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const Tower t = random_tower(rng, n + m, d);
  const SmoothMap tf = iterated_push(f, n + m);
  return differ("f = " + show(f) + ", n " + std::to_string(n) + ", m " + std::to_string(m) + ", tower " +
                    show(t.flat()),
                tower_push(tf, n + m, tower_swap(t, n, m)).flat(), tower_swap(tower_push(tf, n + m, t), n, m).flat());
}

Result tower_scale_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const Tower t = random_tower(rng, n, d);
  const Rational r = random_rational(rng);
  const SmoothMap tf = iterated_push(f, n);
  return differ("f = " + show(f) + ", r " + r.to_string() + ", tower " + show(t.flat()),
                tower_push(tf, n, tower_scale(t, r)).flat(), tower_scale(tower_push(tf, n, t), r).flat());
}

Result tower_lift_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 2), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const Tower t = random_tower(rng, n, d);
  return differ("f = " + show(f) + ", tower " + show(t.flat()),
                tower_push(iterated_push(f, 2 * n), 2 * n, tower_lift(t)).flat(),
                tower_lift(tower_push(iterated_push(f, n), n, t)).flat());
}

// eta at S^n X: t becomes the base coordinate of the outer layers.
Tower eta_outer(const Tower& t, std::size_t n) {
  return from_outer(tower_eta<Rational>(t.flat(), n), t.level());
}

// S^n eta: every coordinate of t becomes the base of its own inner tower.
Tower eta_inner(const Tower& t, std::size_t n) {
  return map_inner<Rational>(t, 0, [n](const Tower& x) { return tower_eta<Rational>(x.flat(), n); });
}

Result tower_monad_unit(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 2), d = pick(rng, 1, 2);
  const Tower t = random_tower(rng, n, d);
  const std::string inst = "tower " + show(t.flat());
  if (auto bad = differ(inst + " (outer unit)", tower_mu(eta_outer(t, n)).flat(), t.flat())) return bad;
  return differ(inst + " (inner unit)", tower_mu(eta_inner(t, n)).flat(), t.flat());
}

Result tower_monad_associative(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 2), d = pick(rng, 1, 2);
  const Tower t = random_tower(rng, 3 * n, d);
  const Tower outer_first = tower_mu(from_outer(tower_mu(as_outer(t, n)), n));
  const Tower inner_first = tower_mu(map_inner<Rational>(t, 2 * n, [](const Tower& x) { return tower_mu(x); }));
  return differ("n " + std::to_string(n) + ", tower " + show(t.flat()), outer_first.flat(), inner_first.flat());
}

// Swap of the two outer layers over the innermost one.
Tower swap_outer(const Tower& t) { return from_outer(tower_swap(as_outer(t, 1), 1, 1), 1); }
// Swap of the two inner layers under the outermost one.
Tower swap_inner(const Tower& t) {
  return map_inner<Rational>(t, 2, [](const Tower& x) { return tower_swap(x, 1, 1); });
}
Tower mu_outer(const Tower& t) { return from_outer(tower_mu(as_outer(t, 1)), 1); }
Tower mu_inner(const Tower& t) {
  return map_inner<Rational>(t, 2, [](const Tower& x) { return tower_mu(x); });
}

Result tower_distributive_unit_squares(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 2);
  const Tower t = random_tower(rng, 1, d);
  const std::string inst = "tower " + show(t.flat());
  if (auto bad = differ(inst + " (swap after outer unit)", tower_swap(eta_outer(t, 1), 1, 1).flat(),
                        eta_inner(t, 1).flat()))
    return bad;
  return differ(inst + " (swap after inner unit)", tower_swap(eta_inner(t, 1), 1, 1).flat(), eta_outer(t, 1).flat());
}

Result tower_distributive_mult_squares(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 2);
  const Tower t = random_tower(rng, 3, d);
  const std::string inst = "tower " + show(t.flat());
  if (auto bad = differ(inst + " (outer multiplication)", tower_swap(mu_outer(t), 1, 1).flat(),
                        mu_inner(swap_outer(swap_inner(t))).flat()))
    return bad;
  return differ(inst + " (inner multiplication)", tower_swap(mu_inner(t), 1, 1).flat(),
                mu_outer(swap_inner(swap_outer(t))).flat());
}

Result tower_yang_baxter(Rng& rng, const LawContext&) {
  const std::size_t d = pick(rng, 1, 2);
  const Tower t = random_tower(rng, 3, d);
  return differ("tower " + show(t.flat()), swap_outer(swap_inner(swap_outer(t))).flat(),
                swap_inner(swap_outer(swap_inner(t))).flat());
}

// ---------------------------------------------------------------------------
// Higher-order chain rules.

Result faa_di_bruno(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 4), d = pick(rng, 1, 2), e = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, e, 3, 3);
  const SmoothMap g = random_polynomial_map(rng, e, 1, 3, 3);
  const auto df = higher_derivatives(f, n);
  const auto dg = higher_derivatives(g, n);
  std::vector<Vec> u;
  for (std::size_t k = 0; k <= n; ++k) u.push_back(random_vector(rng, d));
  Vec point;
  for (const auto& b : u) point.insert(point.end(), b.begin(), b.end());
  const Vec lhs = at(higher_derivative(compose(g, f), n), point);

  std::vector<int> set(n);
  for (std::size_t i = 0; i < n; ++i) set[i] = static_cast<int>(i) + 1;
  Vec rhs(1, Rational(0));
  const Vec fx = at(f, u[0]);
  for (const auto& blocks : unordered_partitions(set)) {
    Vec gp = fx;
    for (const auto& block : blocks) {
      Vec fp = u[0];
      for (int i : block) fp.insert(fp.end(), u[static_cast<std::size_t>(i)].begin(), u[static_cast<std::size_t>(i)].end());
      const Vec v = at(df[block.size()], fp);
      gp.insert(gp.end(), v.begin(), v.end());
    }
    rhs = vadd(rhs, at(dg[blocks.size()], gp));
  }
  return differ("f = " + show(f) + ", g = " + show(g) + ", n " + std::to_string(n) + ", at " + show(point), lhs, rhs);
}

Result iterated_derivative_partitions(Rng& rng, bool ordered) {
  const std::size_t n = pick(rng, 1, 4), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4, 3);
  const Tower t = random_tower(rng, n, d);
  const auto df = higher_derivatives(f, n);
  const Vec lhs = at(iterated_derivative(f, n), t.flat());
  Vec rhs(f.coarity(), Rational(0));
  const Word all = Word::ones(n);
  const auto partitions = ordered ? ordered_word_partitions(all) : unordered_word_partitions(all);
  for (const auto& words : partitions) {
    Vec p = span_vec(t.coord(0));
    for (const Word& w : words) {
      auto c = t.coord(w.bits());
      p.insert(p.end(), c.begin(), c.end());
    }
    Vec v = at(df[words.size()], p);
    if (ordered) v = vscale(Rational(1) / Rational(factorial(words.size())), v);
    rhs = vadd(rhs, v);
  }
  return differ("f = " + show(f) + ", n " + std::to_string(n) + ", tower " + show(t.flat()), lhs, rhs);
}

// ---------------------------------------------------------------------------
// Jets.

using J = Jet<Rational>;
using G = JetOfJets<Rational>;

Method random_method(Rng& rng) { return equivalent_methods()[pick(rng, 0, equivalent_methods().size() - 1)]; }

Result four_method_equivalence(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const J j = random_jet(rng, n, d);
  TaylorPlan plan(f);
  const J reference = plan.push(j, Method::Direct);
  for (Method m : equivalent_methods()) {
    if (auto bad = differ("f = " + show(f) + ", jet " + show(j.flat()) + ", direct vs " + std::string(method_name(m)),
                          reference.flat(), plan.push(j, m).flat()))
      return bad;
  }
  return std::nullopt;
}

Result jet_functor(Rng& rng, Method method) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2), e = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, e, 3);
  const SmoothMap g = random_polynomial_map(rng, e, pick(rng, 1, 2), 3);
  const J j = random_jet(rng, n, d);
  TaylorPlan pf(f), pg(g), pgf(compose(g, f));
  return differ("f = " + show(f) + ", g = " + show(g) + ", " + std::string(method_name(method)) + ", jet " +
                    show(j.flat()),
                pgf.push(j, method).flat(), pg.push(pf.push(j, method), method).flat());
}

Result jet_monad_unit(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const J j = random_jet(rng, n, d);
  if (auto bad = differ("jet " + show(j.flat()) + " (inner unit)", jet_mu(jet_eta_inner(j)).flat(), j.flat()))
    return bad;
  return differ("jet " + show(j.flat()) + " (outer unit)", jet_mu(jet_eta_outer(j)).flat(), j.flat());
}

Result jet_monad_associative(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const std::size_t s = n + 1;
  const Vec cube = random_vector(rng, s * s * s * d);
  auto index = [&](std::size_t i, std::size_t j, std::size_t k) { return ((i * s + j) * s + k) * d; };
  // Collapse outer two levels first, or inner two first.
  G outer(n, d), inner(n, d);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t c = 0; c < d; ++c) {
          const Rational& x = cube[index(i, j, k) + c];
          if (i + j < s) outer.at(i + j, k)[c] += x;
          if (j + k < s) inner.at(i, j + k)[c] += x;
        }
      }
    }
  }
  return differ("cube " + show(cube), jet_mu(outer).flat(), jet_mu(inner).flat());
}

Result base_point_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const J j = random_jet(rng, n, d);
  const Method m = random_method(rng);
  return differ("f = " + show(f) + ", jet " + show(j.flat()),
                span_vec(taylor_push(f, j, m).coeff(0)), at(f, span_vec(j.coeff(0))));
}

Result jet_unit_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const Vec x = random_vector(rng, d);
  const Method m = random_method(rng);
  return differ("f = " + show(f) + ", x " + show(x) + ", " + std::string(method_name(m)),
                taylor_push(f, jet_eta<Rational>(x, n), m).flat(), jet_eta<Rational>(at(f, x), n).flat());
}

Result jet_mult_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const G g = random_grid(rng, n, d);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", grid " + show(g.flat()), plan.push(jet_mu(g), Method::Operational).flat(),
                jet_mu(push_jet_of_jets(plan, g)).flat());
}

Result jet_scale_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const J j = random_jet(rng, n, d);
  const Rational r = random_rational(rng);
  const Method m = random_method(rng);
  return differ("f = " + show(f) + ", r " + r.to_string() + ", jet " + show(j.flat()),
                taylor_push(f, jet_scale(j, r), m).flat(), jet_scale(taylor_push(f, j, m), r).flat());
}

Result jet_swap_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const G g = random_grid(rng, n, d);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", grid " + show(g.flat()), push_jet_of_jets(plan, jet_swap(g)).flat(),
                jet_swap(push_jet_of_jets(plan, g)).flat());
}

Result jet_lift_natural(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const J j = random_jet(rng, n, d);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", jet " + show(j.flat()), push_jet_of_jets(plan, jet_lift(j)).flat(),
                jet_lift(plan.push(j, Method::Operational)).flat());
}

// Block (outer a, inner b) of T_n T_n f computed as the iterated tangent
// derivative at the nested Stree of the truncated grid.
Vec nested_block(TaylorPlan& plan, const G& g, std::size_t a, std::size_t b) {
  return at(plan.iterated(a + b), stree_nested(grid_truncate(g, a, b), b).flat());
}

Result jet_lift_block_identity(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const J j = random_jet(rng, n, d);
  TaylorPlan plan(f);
  const J tj = plan.push(j, Method::Tower);
  const G lifted = jet_lift(j);
  const Vec zero(f.coarity(), Rational(0));
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      const Vec expected = a == b ? span_vec(tj.coeff(a)) : zero;
      if (auto bad = differ("f = " + show(f) + ", jet " + show(j.flat()) + ", block (" + std::to_string(a) + "," +
                                std::to_string(b) + ")",
                            nested_block(plan, lifted, a, b), expected))
        return bad;
    }
  }
  return std::nullopt;
}

Result truncation_cone(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 5), m = pick(rng, 0, n), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const J j = random_jet(rng, n, d);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", m " + std::to_string(m) + ", jet " + show(j.flat()),
                jet_truncate(plan.push(j, Method::Operational), m).flat(),
                plan.push(jet_truncate(j, m), Method::Operational).flat());
}

Result direct_unit(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const Vec x = random_vector(rng, d);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", n " + std::to_string(n) + ", x " + show(x),
                at(plan.inductive_term(n), jet_eta<Rational>(x, n).flat()), Vec(f.coarity(), Rational(0)));
}

// t_a (t_b f) evaluated on the (a, b) truncation of a grid.
Vec term_of_term(TaylorPlan& plan, std::size_t a, std::size_t b, const G& g) {
  TaylorPlan inner(plan.inductive_term(b));
  return at(inner.inductive_term(a), grid_truncate(g, a, b).flat());
}

Result direct_mult(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const G g = random_grid(rng, n, d);
  TaylorPlan plan(f);
  const J collapsed = jet_mu(g);
  Vec rhs(f.coarity(), Rational(0));
  for (std::size_t i = 0; i <= n; ++i) rhs = vadd(rhs, term_of_term(plan, n - i, i, g));
  return differ("f = " + show(f) + ", grid " + show(g.flat()), at(plan.inductive_term(n), collapsed.flat()), rhs);
}

Result direct_swap(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 3);
  const G g = random_grid(rng, n, d);
  const std::size_t a = pick(rng, 0, n), b = pick(rng, 0, n);
  TaylorPlan plan(f);
  return differ("f = " + show(f) + ", grid " + show(g.flat()) + ", (" + std::to_string(a) + "," + std::to_string(b) + ")",
                term_of_term(plan, a, b, g), term_of_term(plan, b, a, jet_swap(g)));
}

Result direct_scale(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const SmoothMap f = random_polynomial_map(rng, d, pick(rng, 1, 2), 4);
  const J j = random_jet(rng, n, d);
  const Rational r = random_rational(rng);
  TaylorPlan plan(f);
  Rational rn(1);
  for (std::size_t k = 0; k < n; ++k) rn = rn * r;
  return differ("f = " + show(f) + ", r " + r.to_string() + ", jet " + show(j.flat()),
                at(plan.inductive_term(n), jet_scale(j, r).flat()), vscale(rn, at(plan.inductive_term(n), j.flat())));
}

// ---------------------------------------------------------------------------
// Stree.

Result stree_explicit(Rng& rng, const LawContext& ctx) {
  const std::size_t n = pick(rng, 0, 6), d = pick(rng, 1, 2);
  const J j = random_jet(rng, n, d);
  Tower closed(n, d);
  for (std::size_t w = 0; w < closed.size(); ++w) {
    const Word word(n, w);
    Rational factor = Rational(factorial(weight(word))) / Rational(position_factorial(word));
    if (ctx.inject_fault && weight(word) == 2) factor = factor + Rational(1);
    for (std::size_t c = 0; c < d; ++c) closed.coord(w)[c] = factor * j.coeff(weight(word))[c];
  }
  const std::string inst = "jet " + show(j.flat());
  if (auto bad = differ(inst + " (closed form vs stree)", closed.flat(), stree(j).flat())) return bad;
  return differ(inst + " (closed form vs inductive)", closed.flat(), stree_inductive(j).flat());
}

Result stree_monic(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 0, 5), d = pick(rng, 1, 2);
  const J a = random_jet(rng, n, d);
  J b = a;
  if (random_int(rng, 0, 1) == 1) b = random_jet(rng, n, d);
  const std::string inst = "jets " + show(a.flat()) + ", " + show(b.flat());
  if (auto bad = differ(inst + " (recovery)", stree_inverse(stree(a)).flat(), a.flat())) return bad;
  if ((stree(a) == stree(b)) != (a == b)) return inst + "; stree identifies distinct jets";
  return std::nullopt;
}

Result stree_unit_square(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 0, 5), d = pick(rng, 1, 3);
  const Vec x = random_vector(rng, d);
  return differ("x " + show(x) + ", n " + std::to_string(n), stree(jet_eta<Rational>(x, n)).flat(),
                tower_eta<Rational>(x, n).flat());
}

Result stree_mult_square(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const G g = random_grid(rng, n, d);
  return differ("grid " + show(g.flat()), stree(jet_mu(g)).flat(), tower_mu(stree_nested(flatten(g), n)).flat());
}

Result stree_scale_square(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 0, 5), d = pick(rng, 1, 3);
  const J j = random_jet(rng, n, d);
  const Rational r = random_rational(rng);
  return differ("jet " + show(j.flat()) + ", r " + r.to_string(), stree(jet_scale(j, r)).flat(),
                tower_scale(stree(j), r).flat());
}

Result stree_swap_square(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2);
  const std::size_t outer = pick(rng, 0, n), inner = pick(rng, 0, n);
  const G g = random_grid(rng, n, d);
  return differ("grid " + show(g.flat()) + ", outer " + std::to_string(outer) + ", inner " + std::to_string(inner),
                stree_nested(grid_truncate(jet_swap(g), inner, outer), outer).flat(),
                tower_swap(stree_nested(grid_truncate(g, outer, inner), inner), outer, inner).flat());
}

// ---------------------------------------------------------------------------
// Linear maps, strengths, Kleisli composition.

Result linear_coefficientwise(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 3);
  const Rational r = random_rational(rng);
  std::vector<SmoothMap> maps{random_linear_map(rng, d, pick(rng, 1, 3)), projection_map(d, {pick(rng, 0, d - 1)}),
                              SmoothMap(2 * d, {}), scale(r, identity_map(d))};
  std::vector<Expr> sum;
  for (std::size_t c = 0; c < d; ++c) sum.push_back(Expr::var(c) + Expr::var(d + c));
  maps[2] = SmoothMap(2 * d, sum);
  const Method m = random_method(rng);
  for (const auto& f : maps) {
    const J j = random_jet(rng, n, f.arity());
    if (auto bad = differ("f = " + show(f) + ", " + std::string(method_name(m)) + ", jet " + show(j.flat()),
                          taylor_push(f, j, m).flat(), apply_coefficientwise(f, j).flat()))
      return bad;
  }
  return std::nullopt;
}

Result strength_commutativity(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d0 = pick(rng, 1, 2), d1 = pick(rng, 1, 2);
  const SmoothMap f = random_polynomial_map(rng, d0 + d1, pick(rng, 1, 2), 3);
  const J a = random_jet(rng, n, d0), b = random_jet(rng, n, d1);
  const SmoothMap tf = taylor_map(f, n);
  const Vec expected = taylor_push(f, jet_pair(a, b), Method::Operational).flat();
  const std::string inst = "f = " + show(f) + ", a " + show(a.flat()) + ", b " + show(b.flat());

  const SmoothMap second_then_first = compose(tf, strength_map(d0, d1, n, 1));
  const J p = partial_push(second_then_first, d0, 0, a, std::span<const Rational>(b.flat()));
  if (auto bad = differ(inst + " (first argument outermost)", jet_mu(as_grid(p)).flat(), expected)) return bad;

  const SmoothMap first_then_second = compose(tf, strength_map(d0, d1, n, 0));
  const J q = partial_push(first_then_second, (n + 1) * d0, 1, b, std::span<const Rational>(a.flat()));
  return differ(inst + " (second argument outermost)", jet_mu(as_grid(q)).flat(), expected);
}

Result kleisli_composition(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3), d = pick(rng, 1, 2), e = pick(rng, 1, 2), k = pick(rng, 1, 2);
  const KleisliMap f{n, random_polynomial_map(rng, d, (n + 1) * e, 2, 2)};
  const KleisliMap g{n, random_polynomial_map(rng, e, (n + 1) * k, 2, 2)};
  const KleisliMap h{n, random_polynomial_map(rng, k, (n + 1) * e, 2, 2)};
  const Vec x = random_vector(rng, d);
  const std::string inst = "f = " + show(f.map) + ", g = " + show(g.map) + ", x " + show(x);

  const J fx = kleisli_apply<Rational>(f, x);
  const J manual = jet_mu(as_grid(taylor_push(g.map, fx, Method::Direct)));
  if (auto bad = differ(inst + " (mu o T g o f)", kleisli_apply<Rational>(kleisli_compose(g, f), x).flat(),
                        manual.flat()))
    return bad;
  if (auto bad = differ(inst + ", h = " + show(h.map) + " (associativity)",
                        kleisli_apply<Rational>(kleisli_compose(h, kleisli_compose(g, f)), x).flat(),
                        kleisli_apply<Rational>(kleisli_compose(kleisli_compose(h, g), f), x).flat()))
    return bad;
  const SmoothMap pf = random_polynomial_map(rng, d, e, 3), pg = random_polynomial_map(rng, e, k, 3);
  return differ("f = " + show(pf) + ", g = " + show(pg) + ", x " + show(x) + " (pure maps)",
                kleisli_apply<Rational>(kleisli_compose(kleisli_pure(pg, n), kleisli_pure(pf, n)), x).flat(),
                kleisli_apply<Rational>(kleisli_pure(compose(pg, pf), n), x).flat());
}

// ---------------------------------------------------------------------------
// Weighted relations.

FiniteSet small_set(Rng& rng, std::size_t max) {
  std::vector<std::string> labels;
  const std::size_t n = pick(rng, 1, max);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return FiniteSet::labeled(labels);
}

Result differ_w(const std::string& inst, const WMatrix& lhs, const WMatrix& rhs) {
  if (lhs.entries() == rhs.entries()) return std::nullopt;
  return inst + "; lhs " + show(lhs) + " rhs " + show(rhs);
}

Result wrel_closed_form(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3);
  const WMatrix f = random_wmatrix(rng, small_set(rng, 2), small_set(rng, 2), 3, 4);
  return differ_w("f = " + show(f) + ", n " + std::to_string(n), wrel_taylor(f, n), wrel_taylor_generic(f, n));
}

Result wrel_analytic(Rng& rng, const LawContext&) {
  const FiniteSet c = small_set(rng, 2), a = small_set(rng, 2), b = small_set(rng, 2);
  const WMatrix f = random_wmatrix(rng, a, b, 3, 4);
  const WMatrix x = random_wmatrix(rng, c, a, 2, 3);
  const WMatrix u = random_wmatrix(rng, c, a, 2, 3);
  if (wrel_check_analytic(f, x, u)) return std::nullopt;
  return "f = " + show(f) + ", x = " + show(x) + ", u = " + show(u);
}

Result wrel_functor(Rng& rng, const LawContext&) {
  const std::size_t n = pick(rng, 1, 3);
  const FiniteSet a = small_set(rng, 2), b = small_set(rng, 2), c = small_set(rng, 2);
  const WMatrix f = random_wmatrix(rng, a, b, 2, 3);
  const WMatrix g = random_wmatrix(rng, b, c, 3, 3);
  if (wrel_functoriality_check(g, f, n)) return std::nullopt;
  return "f = " + show(f) + ", g = " + show(g) + ", n " + std::to_string(n);
}

Result wrel_chain_rule(Rng& rng, const LawContext&) {
  const FiniteSet a = small_set(rng, 2), b = small_set(rng, 2), c = small_set(rng, 2);
  const WMatrix f = random_wmatrix(rng, a, b, 2, 3);
  const WMatrix g = random_wmatrix(rng, b, c, 3, 3);
  const WMatrix rhs = wrel_compose(
      wrel_derivative(g, 1), wrel_pair({wrel_compose(f, wrel_projection(a, 2, 0)), wrel_derivative(f, 1)}));
  return differ_w("f = " + show(f) + ", g = " + show(g), wrel_derivative(wrel_compose(g, f), 1), rhs);
}

// Polynomials in one variable as coefficient vectors.
Vec series_mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

WMatrix series_matrix(const Vec& coeffs) {
  const FiniteSet star = FiniteSet::singleton();
  WMatrix m(star, star);
  for (std::size_t k = 0; k < coeffs.size(); ++k) m.set(Multiset(std::vector<unsigned>{static_cast<unsigned>(k)}), 0, coeffs[k]);
  return m;
}

Result wrel_power_series(Rng& rng, const LawContext&) {
  auto draw = [&](std::size_t degree) {
    Vec c(degree + 1);
    for (auto& x : c) x = Rational(random_int(rng, 0, 3));
    return c;
  };
  const Vec f = draw(pick(rng, 0, 2)), g = draw(pick(rng, 0, 3));
  Vec composite{Rational(0)}, power{Rational(1)};
  for (const Rational& gk : g) {
    Vec term = power;
    for (auto& x : term) x = x * gk;
    if (term.size() > composite.size()) composite.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) composite[i] += term[i];
    power = series_mul(power, f);
  }
  const std::string inst = "f " + show(f) + ", g " + show(g);
  if (auto bad = differ_w(inst + " (composition)", wrel_compose(series_matrix(g), series_matrix(f)),
                          series_matrix(composite)))
    return bad;
  Vec derivative;
  for (std::size_t k = 1; k < g.size(); ++k) derivative.push_back(Rational(static_cast<long long>(k)) * g[k]);
  // D g over {*} + {*}: entry ([0*]^m + [1*]) = (m+1) g_{m+1}.
  WMatrix expected(FiniteSet::disjoint_union(FiniteSet::singleton(), 2), FiniteSet::singleton());
  for (std::size_t m = 0; m < derivative.size(); ++m) {
    expected.set(Multiset(std::vector<unsigned>{static_cast<unsigned>(m), 1}), 0, derivative[m]);
  }
  return differ_w(inst + " (derivative)", wrel_derivative(series_matrix(g), 1), expected);
}

// ---------------------------------------------------------------------------
// Float path.

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

Result float_finite_differences(Rng& rng, const LawContext&) {
  const Rational p = Rational(random_int(rng, 1, 4)) / Rational(2);
  const Rational q = Rational(random_int(rng, 1, 4)) / Rational(2);
  const double x = static_cast<double>(random_int(rng, -8, 8)) / 8.0;
  const Expr x0 = Expr::var(0);
  const SmoothMap f(1, {exp(Expr::constant(p) * x0) * sin(Expr::constant(q) * x0) + cos(x0 * x0)});
  const Jet<double> j(2, 1, {x, 1.0, 0.0});
  const Jet<double> t = taylor_push(f, j, Method::Operational);
  auto fx = [&](double v) { return eval<double>(f, std::vector<double>{v})[0]; };
  const double h1 = 1e-5, h2 = 1e-4;
  const double first = (fx(x + h1) - fx(x - h1)) / (2 * h1);
  const double second = (fx(x + h2) - 2 * fx(x) + fx(x - h2)) / (2 * h2 * h2);
  std::ostringstream inst;
  inst.precision(17);
  inst << "f = " << show(f) << ", x " << x << "; coefficients " << t.coeff(1)[0] << ", " << t.coeff(2)[0]
       << " differences " << first << ", " << second;
  if (!close(t.coeff(1)[0], first, 1e-6) || !close(t.coeff(2)[0], second, 1e-4)) return inst.str();
  return std::nullopt;
}

std::vector<Law> build_registry() {
  auto on = [](Result (*fn)(Rng&, bool), bool flag) {
    return [fn, flag](Rng& rng, const LawContext&) { return fn(rng, flag); };
  };
  auto with = [](Result (*fn)(Rng&, Method), Method m) {
    return [fn, m](Rng& rng, const LawContext&) { return fn(rng, m); };
  };
  return {
      {"derivative-chain-rule", "derivative", "D(g o f) = Dg o <f o pi0, Df>", derivative_chain_rule},
      {"derivative-additive", "derivative", "Df(x, u + v) = Df(x, u) + Df(x, v), Df(x, r u) = r Df(x, u)",
       derivative_additive},
      {"derivative-linear-in-direction", "derivative", "DDf(x, 0, 0, u) = Df(x, u)", derivative_linear_in_direction},
      {"derivative-symmetric", "derivative", "DDf(x, u, v, w) = DDf(x, v, u, w)", derivative_symmetric},
      {"derivative-of-pair", "derivative", "D<f, g> = <Df, Dg>", derivative_of_pair},
      {"higher-derivative-multilinear-symmetric", "derivative",
       "D^n f(x)(u_1..u_n) is symmetric and linear in each u_i", higher_derivative_multilinear_symmetric},
      {"second-derivative-decomposition", "derivative", "DDf(x, u, v, w) = D^2 f(x)(u, v) + Df(x, w)",
       second_derivative_decomposition},

      {"tower-functor", "tower", "T^n(g o f) = T^n g o T^n f", tower_functor},
      {"tower-unit-natural", "tower", "T^n f o eta = eta o f", tower_unit_natural},
      {"tower-mult-natural", "tower", "T^n f o mu = mu o T^2n f", tower_mult_natural},
      {"tower-swap-natural", "tower", "T^(n+m) f o swap = swap o T^(n+m) f", tower_swap_natural},
      {"tower-scale-natural", "tower", "T^n f o scale_r = scale_r o T^n f", tower_scale_natural},
      {"tower-lift-natural", "tower", "T^2n f o lift = lift o T^n f", tower_lift_natural},
      {"tower-monad-unit", "tower", "mu o eta_outer = mu o eta_inner = id", tower_monad_unit},
      {"tower-monad-associative", "tower", "mu o mu_outer = mu o mu_inner", tower_monad_associative},
      {"tower-distributive-unit-squares", "tower", "swap o eta_outer = eta_inner, swap o eta_inner = eta_outer",
       tower_distributive_unit_squares},
      {"tower-distributive-mult-squares", "tower",
       "swap o mu_outer = mu_inner o swap_outer o swap_inner, swap o mu_inner = mu_outer o swap_inner o swap_outer",
       tower_distributive_mult_squares},
      {"tower-yang-baxter", "tower", "swap_outer swap_inner swap_outer = swap_inner swap_outer swap_inner",
       tower_yang_baxter},

      {"faa-di-bruno", "chain rule", "D^n(g o f) = sum over set partitions of D^k g o <f, D^|B_i| f>",
       faa_di_bruno},
      {"iterated-derivative-unordered-partitions", "chain rule",
       "d^n f = sum over word partitions {w^1..w^k} of D^k f(t_0)(t_w^1, ..., t_w^k)", on(iterated_derivative_partitions, false)},
      {"iterated-derivative-ordered-partitions", "chain rule",
       "d^n f = sum over ordered word partitions of (1/k!) D^k f(t_0)(t_w^1, ..., t_w^k)",
       on(iterated_derivative_partitions, true)},

      {"four-method-equivalence", "jet", "direct = inductive = tower = operational", four_method_equivalence},
      {"jet-functor", "jet", "T_n(g o f) = T_n g o T_n f", [](Rng& rng, const LawContext&) {
         return jet_functor(rng, random_method(rng));
       }},
      {"bis-functor", "jet", "Tbar_n(g o f) = Tbar_n g o Tbar_n f", with(jet_functor, Method::Bis)},
      {"jet-monad-unit", "jet", "mu o eta_inner = mu o eta_outer = id", jet_monad_unit},
      {"jet-monad-associative", "jet", "mu o mu_outer = mu o mu_inner", jet_monad_associative},
      {"base-point-natural", "jet", "pi0 o T_n f = f o pi0", base_point_natural},
      {"jet-unit-natural", "jet", "T_n f o eta = eta o f", jet_unit_natural},
      {"jet-mult-natural", "jet", "T_n f o mu = mu o T_n T_n f", jet_mult_natural},
      {"jet-scale-natural", "jet", "T_n f o scale_r = scale_r o T_n f", jet_scale_natural},
      {"jet-swap-natural", "jet", "T_n T_n f o swap = swap o T_n T_n f", jet_swap_natural},
      {"jet-lift-natural", "jet", "T_n T_n f o lift = lift o T_n f", jet_lift_natural},
      {"jet-lift-block-identity", "jet", "block (i, j) of T_n T_n f (lift j) is delta_ij (T_n f)_i",
       jet_lift_block_identity},
      {"truncation-cone", "jet", "truncate_m o T_n f = T_m f o truncate_m", truncation_cone},
      {"direct-unit", "jet", "t_n f o eta = 0 for n >= 1", direct_unit},
      {"direct-mult", "jet", "t_n f o mu = sum_i t_(n-i) t_i f o truncate", direct_mult},
      {"direct-swap", "jet", "t_a t_b f = t_b t_a f o swap", direct_swap},
      {"direct-scale", "jet", "t_n f o scale_r = r^n t_n f", direct_scale},

      {"stree-explicit", "stree", "stree coordinate w = (|w|! / w!) c_|w|, also by the inductive route",
       stree_explicit},
      {"stree-monic", "stree", "stree a = stree b implies a = b", stree_monic},
      {"stree-unit-square", "stree", "stree o eta = eta", stree_unit_square},
      {"stree-mult-square", "stree", "stree o mu = mu o (stree . stree)", stree_mult_square},
      {"stree-scale-square", "stree", "stree o scale_r = scale_r o stree", stree_scale_square},
      {"stree-swap-square", "stree", "(stree . stree) o swap = swap o (stree . stree)", stree_swap_square},

      {"linear-maps-coefficientwise", "structure", "T_n l = l applied to each coefficient for linear l",
       linear_coefficientwise},
      {"strength-commutativity", "structure", "mu o T^0 T^1 f = mu o T^1 T^0 f = T_n f o pair",
       strength_commutativity},
      {"kleisli-composition", "structure", "g . f = mu o T_n g o f, associative, pure maps compose",
       kleisli_composition},

      {"wrel-taylor-closed-form", "wrel", "closed multinomial T_n f = composition-sum T_n f", wrel_closed_form},
      {"wrel-analytic", "wrel", "f o (x + u) = f o x + sum_k (1/k!) D^k f o <x, u, ..., u>", wrel_analytic},
      {"wrel-functor", "wrel", "T_n(g o f) = T_n g o T_n f", wrel_functor},
      {"wrel-chain-rule", "wrel", "D(g o f) = Dg o <f o pi0, Df>", wrel_chain_rule},
      {"wrel-power-series", "wrel", "on one point, composition and D are those of power series",
       wrel_power_series},

      {"float-finite-differences", "float", "coefficients 1 and 2 match central differences",
       float_finite_differences},
  };
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = build_registry();
  return registry;
}

std::vector<LawOutcome> run_laws(const LawRunOptions& options) {
  std::vector<LawOutcome> out;
  for (const Law& law : law_registry()) {
    if (!options.filter.empty() && law.name.find(options.filter) == std::string::npos) continue;
    LawOutcome outcome{law.name, law.group, law.statement, 0, true, {}};
    for (std::size_t k = 0; k < options.cases; ++k) {
      Rng rng(derive_seed(options.seed, law.name, k));
      Result failure;
      try {
        failure = law.check(rng, options.context);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      ++outcome.cases_run;
      if (failure) {
        outcome.passed = false;
        outcome.reproducer = "seed " + std::to_string(options.seed) + ", case " + std::to_string(k) + ": " + *failure;
        break;
      }
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

std::optional<Witness> bis_mu_square(const SmoothMap& f, const JetOfJets<Rational>& g) {
  TaylorPlan plan(f);
  const Vec lhs = plan.push(jet_mu(g), Method::Bis).flat();
  const Vec rhs = jet_mu(push_jet_of_jets(plan, g, Method::Bis, Method::Bis)).flat();
  if (lhs == rhs) return std::nullopt;
  return Witness{"f = " + show(f) + ", grid " + show(g.flat()), show(lhs), show(rhs)};
}

std::optional<Witness> find_bis_mu_witness(std::uint64_t seed, std::size_t attempts) {
  for (std::size_t k = 0; k < attempts; ++k) {
    Rng rng(derive_seed(seed, "bis-mu-witness", k));
    const SmoothMap f = random_polynomial_map(rng, 1, 1, 3, 2);
    const G g = random_grid(rng, 2, 1);
    if (auto w = bis_mu_square(f, g)) return w;
  }
  return std::nullopt;
}

std::optional<Witness> stree_lift_square(const Jet<Rational>& j) {
  const Vec lhs = stree_nested(flatten(jet_lift(j)), j.order()).flat();
  const Vec rhs = tower_lift(stree(j)).flat();
  if (lhs == rhs) return std::nullopt;
  return Witness{"jet " + show(j.flat()), show(lhs), show(rhs)};
}

}  // namespace taylor
