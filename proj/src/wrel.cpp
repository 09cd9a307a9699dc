#include "taylor/wrel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "taylor/combinatorics.hpp"

namespace taylor {

FiniteSet FiniteSet::labeled(std::vector<std::string> labels, const WrelBounds& bounds) {
  if (labels.size() > bounds.max_set) {
    throw BoundError("finitary bound exceeded: set of " + std::to_string(labels.size()) +
                     " elements, limit " + std::to_string(bounds.max_set));
  }
  return FiniteSet(std::move(labels));
}

FiniteSet FiniteSet::disjoint_union(const FiniteSet& base, std::size_t copies) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < copies; ++k) {
    for (const auto& l : base.labels_) labels.push_back(std::to_string(k) + "." + l);
  }
  return FiniteSet(std::move(labels));
}

FiniteSet FiniteSet::sum(const FiniteSet& a, const FiniteSet& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels_) labels.push_back("0." + l);
  for (const auto& l : b.labels_) labels.push_back("1." + l);
  return FiniteSet(std::move(labels));
}

Multiset Multiset::singleton(std::size_t base_size, std::size_t a) {
  Multiset m(base_size);
  m.counts_.at(a) = 1;
  return m;
}

std::size_t Multiset::size() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

BigInt Multiset::factorial() const {
  BigInt r = 1;
  for (unsigned c : counts_) r *= taylor::factorial(c);
  return r;
}

Multiset Multiset::operator+(const Multiset& other) const {
  if (other.counts_.size() != counts_.size()) throw DomainError("multiset sum over different bases");
  Multiset out = *this;
  for (std::size_t i = 0; i < counts_.size(); ++i) out.counts_[i] += other.counts_[i];
  return out;
}

std::vector<std::size_t> Multiset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < counts_.size(); ++a) out.insert(out.end(), counts_[a], a);
  return out;
}

std::string Multiset::to_string(const FiniteSet& base) const {
  std::string s = "[";
  bool first = true;
  for (std::size_t a : elements()) {
    if (!first) s += ",";
    s += base.label(a);
    first = false;
  }
  return s + "]";
}

std::vector<Multiset> multisets_up_to(std::size_t base_size, std::size_t max_size) {
  std::vector<Multiset> out;
  std::vector<unsigned> counts(base_size, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == base_size) {
      out.emplace_back(counts);
      return;
    }
    for (unsigned c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
    counts[i] = 0;
  };
  rec(0, max_size);
  std::sort(out.begin(), out.end(), [](const Multiset& a, const Multiset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

WMatrix::WMatrix(FiniteSet domain, FiniteSet codomain, WrelBounds bounds)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), bounds_(bounds) {}

Rational WMatrix::at(const Multiset& m, std::size_t b) const {
  auto it = entries_.find({m, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

void WMatrix::add(const Multiset& m, std::size_t b, const Rational& value) {
  if (value.is_zero()) return;
  set(m, b, at(m, b) + value);
}

void WMatrix::set(const Multiset& m, std::size_t b, const Rational& value) {
  if (m.base_size() != domain_.size()) throw DomainError("multiset base does not match the matrix domain");
  if (b >= codomain_.size()) throw DomainError("codomain index out of range");
  if (value.sign() < 0) throw DomainError("weighted relations have nonnegative entries");
  if (value.is_zero()) {
    entries_.erase({m, b});
    return;
  }
  if (m.size() > bounds_.max_degree) {
    throw BoundError("finitary bound exceeded: multiset of size " + std::to_string(m.size()) + ", limit " +
                     std::to_string(bounds_.max_degree));
  }
  entries_[{m, b}] = value;
}

std::size_t WMatrix::degree() const {
  std::size_t d = 0;
  for (const auto& [key, v] : entries_) d = std::max(d, key.first.size());
  return d;
}

std::string WMatrix::to_string() const {
  std::ostringstream out;
  for (const auto& [key, v] : entries_) {
    out << key.first.to_string(domain_) << " -> " << codomain_.label(key.second) << ": " << v.to_string() << "\n";
  }
  return out.str();
}

namespace {

WrelBounds merge(const WrelBounds& a, const WrelBounds& b) {
  return {std::max(a.max_degree, b.max_degree), std::max(a.max_set, b.max_set)};
}

void check_same_shape(const WMatrix& f, const WMatrix& g, const char* what) {
  if (f.domain().size() != g.domain().size() || f.codomain().size() != g.codomain().size()) {
    throw DomainError(std::string(what) + ": shapes differ");
  }
}

}  // namespace

WMatrix wrel_identity(const FiniteSet& a, const WrelBounds& bounds) {
  WMatrix id(a, a, bounds);
  for (std::size_t i = 0; i < a.size(); ++i) id.set(Multiset::singleton(a.size(), i), i, Rational(1));
  return id;
}

WMatrix wrel_projection(const FiniteSet& base, std::size_t copies, std::size_t i, const WrelBounds& bounds) {
  if (i >= copies) throw DomainError("projection index out of range");
  const FiniteSet u = FiniteSet::disjoint_union(base, copies);
  WMatrix p(u, base, bounds);
  for (std::size_t a = 0; a < base.size(); ++a) p.set(Multiset::singleton(u.size(), i * base.size() + a), a, Rational(1));
  return p;
}

WMatrix wrel_pair(const std::vector<WMatrix>& parts) {
  if (parts.empty()) throw DomainError("wrel_pair needs at least one matrix");
  const std::size_t nb = parts[0].codomain().size();
  WrelBounds bounds = parts[0].bounds();
  for (const auto& p : parts) {
    if (p.domain().size() != parts[0].domain().size() || p.codomain().size() != nb) {
      throw DomainError("wrel_pair: shapes differ");
    }
    bounds = merge(bounds, p.bounds());
  }
  WMatrix out(parts[0].domain(), FiniteSet::disjoint_union(parts[0].codomain(), parts.size()), bounds);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& [key, v] : parts[k].entries()) out.set(key.first, k * nb + key.second, v);
  }
  return out;
}

WMatrix wrel_sum(const WMatrix& f, const WMatrix& g) {
  check_same_shape(f, g, "wrel_sum");
  WMatrix out(f.domain(), f.codomain(), merge(f.bounds(), g.bounds()));
  for (const auto& [key, v] : f.entries()) out.add(key.first, key.second, v);
  for (const auto& [key, v] : g.entries()) out.add(key.first, key.second, v);
  return out;
}

WMatrix wrel_scale(const Rational& r, const WMatrix& f) {
  WMatrix out(f.domain(), f.codomain(), f.bounds());
  for (const auto& [key, v] : f.entries()) out.add(key.first, key.second, r * v);
  return out;
}

WMatrix wrel_compose(const WMatrix& g, const WMatrix& f) {
  if (g.domain().size() != f.codomain().size()) throw DomainError("wrel_compose: g's domain is not f's codomain");
  WMatrix out(f.domain(), g.codomain(), merge(f.bounds(), g.bounds()));

  // f's support grouped by codomain element.
  std::vector<std::vector<std::pair<Multiset, Rational>>> column(f.codomain().size());
  for (const auto& [key, v] : f.entries()) column[key.second].emplace_back(key.first, v);

  for (const auto& [gkey, gv] : g.entries()) {
    const std::vector<std::size_t> slots = gkey.first.elements();
    std::function<void(std::size_t, const Multiset&, const Rational&)> rec =
        [&](std::size_t i, const Multiset& acc, const Rational& weight) {
          if (i == slots.size()) {
            out.add(acc, gkey.second, gv * weight);
            return;
          }
          for (const auto& [m, v] : column[slots[i]]) rec(i + 1, acc + m, weight * v);
        };
    rec(0, Multiset(f.domain().size()), Rational(1));
  }
  return out;
}

WMatrix wrel_derivative(const WMatrix& f, std::size_t n) {
  const std::size_t na = f.domain().size();
  WMatrix out(FiniteSet::disjoint_union(f.domain(), n + 1), f.codomain(), f.bounds());
  for (const auto& [key, v] : f.entries()) {
    const Multiset& whole = key.first;
    const BigInt whole_factorial = whole.factorial();
    // Choose a_1..a_n in order, removing each from what remains of `whole`.
    std::vector<unsigned> remaining = whole.counts();
    std::vector<std::size_t> chosen;
    std::function<void()> rec = [&]() {
      if (chosen.size() == n) {
        std::vector<unsigned> counts((n + 1) * na, 0);
        for (std::size_t a = 0; a < na; ++a) counts[a] = remaining[a];
        for (std::size_t k = 0; k < n; ++k) counts[(k + 1) * na + chosen[k]] += 1;
        const Multiset rest(remaining);
        out.set(Multiset(counts), key.second, Rational(whole_factorial, rest.factorial()) * v);
        return;
      }
      for (std::size_t a = 0; a < na; ++a) {
        if (remaining[a] == 0) continue;
        --remaining[a];
        chosen.push_back(a);
        rec();
        chosen.pop_back();
        ++remaining[a];
      }
    };
    rec();
  }
  return out;
}

WMatrix wrel_taylor(const WMatrix& f, std::size_t n) {
  const std::size_t na = f.domain().size();
  const std::size_t nb = f.codomain().size();
  WMatrix out(FiniteSet::disjoint_union(f.domain(), n + 1), FiniteSet::disjoint_union(f.codomain(), n + 1),
              f.bounds());
  for (const auto& [key, v] : f.entries()) {
    const Multiset& whole = key.first;
    const BigInt whole_factorial = whole.factorial();
    // Split each element's count among the n+1 slots.
    std::vector<unsigned> counts((n + 1) * na, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a, std::size_t degree) {
      if (degree > n) return;
      if (a == na) {
        const Multiset m(counts);
        out.set(m, degree * nb + key.second, Rational(whole_factorial, m.factorial()) * v);
        return;
      }
      std::function<void(std::size_t, unsigned, std::size_t)> split = [&](std::size_t k, unsigned left,
                                                                            std::size_t deg) {
        if (k == n) {
          counts[k * na + a] = left;
          rec(a + 1, deg + k * left);
          counts[k * na + a] = 0;
          return;
        }
        for (unsigned c = 0; c <= left; ++c) {
          counts[k * na + a] = c;
          split(k + 1, left - c, deg + k * c);
        }
        counts[k * na + a] = 0;
      };
      split(0, whole.count(a), degree);
    };
    rec(0, 0);
  }
  return out;
}

WMatrix wrel_taylor_generic(const WMatrix& f, std::size_t n) {
  const FiniteSet& a = f.domain();
  std::vector<WMatrix> coefficients;
  std::vector<WMatrix> derivatives;
  for (std::size_t k = 0; k <= n; ++k) derivatives.push_back(wrel_derivative(f, k));
  std::vector<WMatrix> projections;
  for (std::size_t i = 0; i <= n; ++i) projections.push_back(wrel_projection(a, n + 1, i, f.bounds()));

  for (std::size_t j = 0; j <= n; ++j) {
    WMatrix coeff(FiniteSet::disjoint_union(a, n + 1), f.codomain(), f.bounds());
    if (j == 0) {
      coeff = wrel_compose(derivatives[0], projections[0]);
    }
    for (const auto& parts : compositions(j)) {
      std::vector<WMatrix> tuple{projections[0]};
      for (std::size_t i : parts) tuple.push_back(projections[i]);
      const WMatrix term = wrel_compose(derivatives[parts.size()], wrel_pair(tuple));
      coeff = wrel_sum(coeff, wrel_scale(Rational(1) / Rational(factorial(parts.size())), term));
    }
    coefficients.push_back(std::move(coeff));
  }
  return wrel_pair(coefficients);
}

bool wrel_check_analytic(const WMatrix& f, const WMatrix& x, const WMatrix& u) {
  check_same_shape(x, u, "wrel_check_analytic");
  const WMatrix lhs = wrel_compose(f, wrel_sum(x, u));
  WMatrix rhs = wrel_compose(f, x);
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    std::vector<WMatrix> tuple{x};
    tuple.insert(tuple.end(), k, u);
    const WMatrix term = wrel_compose(wrel_derivative(f, k), wrel_pair(tuple));
    rhs = wrel_sum(rhs, wrel_scale(Rational(1) / Rational(factorial(k)), term));
  }
  return lhs.entries() == rhs.entries();
}

bool wrel_functoriality_check(const WMatrix& g, const WMatrix& f, std::size_t n) {
  const WMatrix lhs = wrel_taylor(wrel_compose(g, f), n);
  const WMatrix rhs = wrel_compose(wrel_taylor(g, n), wrel_taylor(f, n));
  return lhs.entries() == rhs.entries();
}

}  // namespace taylor
