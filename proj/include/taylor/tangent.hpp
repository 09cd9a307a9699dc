#pragma once

/**
 * The tangent bundle functor T and the iterated tower T^n.
 *
 * A tower of level n over R^d stores 2^n vectors of length d in one flat
 * array; the coordinate of word w starts at offset w.bits() * d. Bit w_n
 * (the highest bit) selects the outermost tangent layer, so T(T^{n-1} f)
 * sees the low half of the array as its base point and the high half as
 * its tangent vector.
 *
 * The same flat array read as a tower of level n - k over R^{d 2^k} is the
 * element of S^{n-k}(S^k X) whose outer words are the high n - k bits.
 * `as_outer`/`from_outer` switch between the two readings, and
 * `map_inner` applies a transformation under the outer layers.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "taylor/combinatorics.hpp"
#include "taylor/error.hpp"
#include "taylor/expr.hpp"
#include "taylor/scalar.hpp"

namespace taylor {

inline constexpr std::size_t max_tower_level = 12;

inline void check_tower_level(std::size_t level) {
  if (level > max_tower_level) {
    throw DomainError("tower level " + std::to_string(level) + " exceeds the limit of " +
                      std::to_string(max_tower_level));
  }
}

template <Scalar T>
class TowerValue {
 public:
  TowerValue() = default;

  /// All-zero tower.
  TowerValue(std::size_t level, std::size_t dim) : level_(level), dim_(dim) {
    check_tower_level(level);
    coords_.assign((std::size_t{1} << level) * dim, T(0));
  }

  TowerValue(std::size_t level, std::size_t dim, std::vector<T> flat)
      : level_(level), dim_(dim), coords_(std::move(flat)) {
    check_tower_level(level);
    if (coords_.size() != (std::size_t{1} << level) * dim) {
      throw DomainError("tower of level " + std::to_string(level) + " over dimension " + std::to_string(dim) +
                        " needs " + std::to_string((std::size_t{1} << level) * dim) + " scalars");
    }
  }

  std::size_t level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return std::size_t{1} << level_; }
  const std::vector<T>& flat() const noexcept { return coords_; }

  std::span<const T> coord(std::size_t index) const { return {coords_.data() + index * dim_, dim_}; }
  std::span<T> coord(std::size_t index) { return {coords_.data() + index * dim_, dim_}; }

  friend bool operator==(const TowerValue&, const TowerValue&) = default;

 private:
  std::size_t level_ = 0;
  std::size_t dim_ = 0;
  std::vector<T> coords_;
};

/// The w-indexed coordinate.
template <Scalar T>
std::vector<T> proj_word(const TowerValue<T>& t, const Word& w) {
  if (w.length() != t.level()) {
    throw DomainError("word of length " + std::to_string(w.length()) + " on a tower of level " +
                      std::to_string(t.level()));
  }
  auto c = t.coord(w.bits());
  return {c.begin(), c.end()};
}

/// T f = <f o pi_0, df>: arity 2d, coarity 2e.
SmoothMap tangent_push(const SmoothMap& f);

/// T^n f: arity d 2^n, coarity e 2^n.
SmoothMap iterated_push(const SmoothMap& f, std::size_t n);

/// d^n f = pi_{1...1} o T^n f, arity d 2^n, coarity e. Built as the n-fold
/// total derivative.
SmoothMap iterated_derivative(const SmoothMap& f, std::size_t n);

/// d^0 f, ..., d^n f.
std::vector<SmoothMap> iterated_derivatives(const SmoothMap& f, std::size_t n);

/// Evaluates T^n f on a tower of level n.
template <Scalar T>
TowerValue<T> tower_push(const SmoothMap& tn_f, std::size_t n, const TowerValue<T>& t) {
  if (t.level() != n) throw DomainError("tower_push: level mismatch");
  std::vector<T> out = eval<T>(tn_f, t.flat());
  const std::size_t e = out.size() >> n;
  return TowerValue<T>(n, e, std::move(out));
}

/// Coordinate 0...0 is x, all others zero.
template <Scalar T>
TowerValue<T> tower_eta(std::span<const T> x, std::size_t n) {
  TowerValue<T> out(n, x.size());
  std::copy(x.begin(), x.end(), out.coord(0).begin());
  return out;
}

/// S^n S^n -> S^n: coordinate w is the sum over splits2(w) of the input
/// coordinate whose inner word is one part and outer word the other. The
/// split list contains both orders of every pair, so the sum does not depend
/// on which part is read as inner.
template <Scalar T>
TowerValue<T> tower_mu(const TowerValue<T>& t) {
  if (t.level() % 2 != 0) throw DomainError("tower_mu needs an even level");
  const std::size_t n = t.level() / 2;
  const std::size_t d = t.dim();
  TowerValue<T> out(n, d);
  for (std::size_t w = 0; w < out.size(); ++w) {
    auto dst = out.coord(w);
    for (const auto& [inner, outer] : splits2(Word(n, w))) {
      auto src = t.coord(inner.bits() + (outer.bits() << n));
      for (std::size_t c = 0; c < d; ++c) dst[c] += src[c];
    }
  }
  return out;
}

/// S^n S^m -> S^m S^n: output coordinate (u inner, v outer) is input
/// coordinate (v inner, u outer), with |u| = n and |v| = m.
template <Scalar T>
TowerValue<T> tower_swap(const TowerValue<T>& t, std::size_t n, std::size_t m) {
  if (t.level() != n + m) throw DomainError("tower_swap: level is not n + m");
  const std::size_t d = t.dim();
  TowerValue<T> out(n + m, d);
  for (std::size_t u = 0; u < (std::size_t{1} << n); ++u) {
    for (std::size_t v = 0; v < (std::size_t{1} << m); ++v) {
      auto src = t.coord(v + (u << m));
      std::copy(src.begin(), src.end(), out.coord(u + (v << n)).begin());
    }
  }
  return out;
}

/// Coordinate w multiplied by r^|w|.
template <Scalar T>
TowerValue<T> tower_scale(const TowerValue<T>& t, const T& r) {
  std::vector<T> powers{T(1)};
  for (std::size_t k = 1; k <= t.level(); ++k) powers.push_back(powers.back() * r);
  TowerValue<T> out = t;
  for (std::size_t w = 0; w < t.size(); ++w) {
    const T& p = powers[weight(Word(t.level(), w))];
    for (T& x : out.coord(w)) x = x * p;
  }
  return out;
}

/// S^n -> S^n S^n: coordinate (u inner, v outer) is delta_{uv} times
/// coordinate u.
template <Scalar T>
TowerValue<T> tower_lift(const TowerValue<T>& t) {
  const std::size_t n = t.level();
  TowerValue<T> out(2 * n, t.dim());
  for (std::size_t u = 0; u < t.size(); ++u) {
    auto src = t.coord(u);
    std::copy(src.begin(), src.end(), out.coord(u + (u << n)).begin());
  }
  return out;
}

/// Reads a level-L tower as a level (L - inner_level) tower over
/// R^{d 2^inner_level}.
template <Scalar T>
TowerValue<T> as_outer(const TowerValue<T>& t, std::size_t inner_level) {
  if (inner_level > t.level()) throw DomainError("as_outer: inner level exceeds tower level");
  return TowerValue<T>(t.level() - inner_level, t.dim() << inner_level, t.flat());
}

/// Inverse of `as_outer`.
template <Scalar T>
TowerValue<T> from_outer(const TowerValue<T>& t, std::size_t inner_level) {
  if (t.dim() % (std::size_t{1} << inner_level) != 0) throw DomainError("from_outer: dimension mismatch");
  return TowerValue<T>(t.level() + inner_level, t.dim() >> inner_level, t.flat());
}

/// Applies `f` to each level-`inner_level` block under the outer layers.
/// `f` must map blocks to towers of one common level over the same dim.
template <Scalar T>
TowerValue<T> map_inner(const TowerValue<T>& t, std::size_t inner_level,
                        const std::function<TowerValue<T>(const TowerValue<T>&)>& f) {
  if (inner_level > t.level()) throw DomainError("map_inner: inner level exceeds tower level");
  const std::size_t outer_level = t.level() - inner_level;
  const std::size_t block = (std::size_t{1} << inner_level) * t.dim();
  std::vector<T> flat;
  std::size_t result_level = 0;
  std::size_t result_dim = 0;
  for (std::size_t v = 0; v < (std::size_t{1} << outer_level); ++v) {
    std::vector<T> in(t.flat().begin() + v * block, t.flat().begin() + (v + 1) * block);
    TowerValue<T> r = f(TowerValue<T>(inner_level, t.dim(), std::move(in)));
    if (v == 0) {
      result_level = r.level();
      result_dim = r.dim();
    } else if (r.level() != result_level || r.dim() != result_dim) {
      throw DomainError("map_inner: blocks mapped to different shapes");
    }
    flat.insert(flat.end(), r.flat().begin(), r.flat().end());
  }
  return TowerValue<T>(result_level + outer_level, result_dim, std::move(flat));
}

}  // namespace taylor
