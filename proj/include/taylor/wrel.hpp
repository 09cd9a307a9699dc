#pragma once

/**
 * Desk-scale weighted relational model.
 *
 * A morphism A -> B is a matrix indexed by (finite multiset over A,
 * element of B) with nonnegative rational entries and finite support.
 * Over A = B = {*} a matrix is the power series sum_k f_{k[*],*} x^k.
 *
 * Every operation checks the configured bounds and throws BoundError
 * instead of truncating.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "taylor/error.hpp"
#include "taylor/scalar.hpp"

namespace taylor {

struct WrelBounds {
  /// Largest multiset size allowed anywhere.
  std::size_t max_degree = 6;
  /// Largest user-declared base set.
  std::size_t max_set = 4;
};

/// A finite set of string labels. Elements are referred to by index.
class FiniteSet {
 public:
  FiniteSet() = default;
  /// A user-declared base set; throws BoundError above `bounds.max_set`.
  static FiniteSet labeled(std::vector<std::string> labels, const WrelBounds& bounds = {});
  static FiniteSet singleton() { return labeled({"*"}); }

  /// copies copies of `base`, element (k, a) at index k * |base| + a,
  /// labeled "k.a".
  static FiniteSet disjoint_union(const FiniteSet& base, std::size_t copies);
  /// A followed by B, labeled "0.a" and "1.b".
  static FiniteSet sum(const FiniteSet& a, const FiniteSet& b);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  explicit FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  std::vector<std::string> labels_;
};

/// A finite multiset stored as one count per element of its base set.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::size_t base_size) : counts_(base_size, 0) {}
  explicit Multiset(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
  /// [a]
  static Multiset singleton(std::size_t base_size, std::size_t a);

  std::size_t base_size() const noexcept { return counts_.size(); }
  unsigned count(std::size_t a) const { return counts_.at(a); }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }
  std::size_t size() const;
  /// prod count!.
  BigInt factorial() const;
  bool empty() const { return size() == 0; }

  Multiset operator+(const Multiset& other) const;
  /// Elements listed with repetition in increasing order.
  std::vector<std::size_t> elements() const;
  std::string to_string(const FiniteSet& base) const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<unsigned> counts_;
};

/// All multisets over a base of `base_size` elements with size <= max_size.
std::vector<Multiset> multisets_up_to(std::size_t base_size, std::size_t max_size);

class WMatrix {
 public:
  using Key = std::pair<Multiset, std::size_t>;

  WMatrix() = default;
  WMatrix(FiniteSet domain, FiniteSet codomain, WrelBounds bounds = {});

  const FiniteSet& domain() const noexcept { return domain_; }
  const FiniteSet& codomain() const noexcept { return codomain_; }
  const WrelBounds& bounds() const noexcept { return bounds_; }
  const std::map<Key, Rational>& entries() const noexcept { return entries_; }

  Rational at(const Multiset& m, std::size_t b) const;
  /// Adds `value` to entry (m, b). Negative results and oversize multisets
  /// are rejected.
  void add(const Multiset& m, std::size_t b, const Rational& value);
  void set(const Multiset& m, std::size_t b, const Rational& value);

  bool is_zero() const { return entries_.empty(); }
  /// Largest multiset size in the support (0 for the zero matrix).
  std::size_t degree() const;

  std::string to_string() const;

  friend bool operator==(const WMatrix& a, const WMatrix& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.entries_ == b.entries_;
  }

 private:
  FiniteSet domain_;
  FiniteSet codomain_;
  WrelBounds bounds_;
  std::map<Key, Rational> entries_;
};

/// id_{[a], a} = 1.
WMatrix wrel_identity(const FiniteSet& a, const WrelBounds& bounds = {});
/// The matrix of the i-th injection-projection copies -> base: entry
/// ([(i, a)], a) = 1 on the `copies`-fold disjoint union.
WMatrix wrel_projection(const FiniteSet& base, std::size_t copies, std::size_t i, const WrelBounds& bounds = {});
/// <f_0, ..., f_k>: same domain, codomain the disjoint union of the
/// codomains (all codomains equal).
WMatrix wrel_pair(const std::vector<WMatrix>& parts);
WMatrix wrel_sum(const WMatrix& f, const WMatrix& g);
WMatrix wrel_scale(const Rational& r, const WMatrix& f);

/// (g o f)_{m,c} = sum_p g_{p,c} sum over ordered (m_1..m_k) with
/// m_1 + ... + m_k = m of prod_i f_{m_i, b_i}, where p = [b_1, ..., b_k].
WMatrix wrel_compose(const WMatrix& g, const WMatrix& f);

/// The n-th derivative on the (n+1)-fold union: entry
/// (m + [(1,a_1)] + ... + [(n,a_n)], b) = ((m + [a_1..a_n])! / m!) f_{m+[a_1..a_n], b}.
WMatrix wrel_derivative(const WMatrix& f, std::size_t n);

/// T_n f by the closed multinomial formula.
WMatrix wrel_taylor(const WMatrix& f, std::size_t n);

/// T_n f assembled from derivatives and projections by the composition sum
/// pi_j T_n f = sum_k sum_{i_1+..+i_k=j} (1/k!) D^k f o <pi_0, pi_{i_1}, ..., pi_{i_k}>.
WMatrix wrel_taylor_generic(const WMatrix& f, std::size_t n);

/// f o (x + u) against f o x + sum_{k>=1} (1/k!) D^k f o <x, u, ..., u>.
bool wrel_check_analytic(const WMatrix& f, const WMatrix& x, const WMatrix& u);

/// T_n(g o f) against T_n g o T_n f.
bool wrel_functoriality_check(const WMatrix& g, const WMatrix& f, std::size_t n);

}  // namespace taylor
