#include <gtest/gtest.h>

#include <map>
#include <random>

#include "taylor/combinatorics.hpp"
#include "taylor/wrel.hpp"

using taylor::FiniteSet;
using taylor::Multiset;
using taylor::Rational;
using taylor::WMatrix;

namespace {

// Multivariate polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<unsigned>, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Poly poly_add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  return a;
}

Poly poly_const(std::size_t vars, const Rational& c) {
  Poly p;
  if (!c.is_zero()) p[std::vector<unsigned>(vars, 0)] = c;
  return p;
}

// g(f_0, ..., f_k) with g a polynomial in k variables.
Poly poly_substitute(const Poly& g, const std::vector<Poly>& f, std::size_t vars) {
  Poly out;
  for (const auto& [e, c] : g) {
    Poly term = poly_const(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = poly_mul(term, f[i]);
    }
    out = poly_add(out, term);
  }
  return out;
}

FiniteSet base(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return FiniteSet::labeled(labels);
}

WMatrix from_polys(const FiniteSet& dom, const FiniteSet& cod, const std::vector<Poly>& polys) {
  WMatrix m(dom, cod);
  for (std::size_t b = 0; b < polys.size(); ++b) {
    for (const auto& [e, c] : polys[b]) m.set(Multiset(e), b, c);
  }
  return m;
}

std::vector<Poly> to_polys(const WMatrix& m) {
  std::vector<Poly> out(m.codomain().size());
  for (const auto& [key, v] : m.entries()) out[key.second][key.first.counts()] = v;
  return out;
}

Poly random_poly(std::mt19937_64& rng, std::size_t vars, std::size_t degree) {
  Poly p;
  std::uniform_int_distribution<int> coeff(0, 3);
  std::uniform_int_distribution<unsigned> exp(0, static_cast<unsigned>(degree));
  for (int t = 0; t < 3; ++t) {
    std::vector<unsigned> e(vars, 0);
    unsigned left = static_cast<unsigned>(degree);
    for (auto& x : e) {
      x = std::min(left, exp(rng));
      left -= x;
    }
    const int c = coeff(rng);
    if (c != 0) p[e] += Rational(c);
  }
  return p;
}

// One-variable series (c_0, c_1, ...) as a matrix {*} -> {*}.
WMatrix series(std::initializer_list<long long> cs) {
  const FiniteSet star = FiniteSet::singleton();
  WMatrix m(star, star);
  unsigned k = 0;
  for (long long c : cs) m.set(Multiset(std::vector<unsigned>{k++}), 0, Rational(c));
  return m;
}

}  // namespace

TEST(Multiset, Basics) {
  const Multiset m(std::vector<unsigned>{2, 0, 1});
  EXPECT_EQ(m.size(), 3U);
  EXPECT_EQ(m.factorial(), 2);
  EXPECT_EQ(m.elements(), (std::vector<std::size_t>{0, 0, 2}));
  EXPECT_EQ(m.to_string(base(3)), "[a,a,c]");
  EXPECT_EQ((m + Multiset::singleton(3, 1)).counts(), (std::vector<unsigned>{2, 1, 1}));
  // 3 elements, size <= 2: 1 + 3 + 6.
  EXPECT_EQ(taylor::multisets_up_to(3, 2).size(), 10U);
}

TEST(FiniteSet, BoundsAndUnions) {
  EXPECT_THROW(base(5), taylor::BoundError);
  const FiniteSet u = FiniteSet::disjoint_union(base(2), 3);
  EXPECT_EQ(u.size(), 6U);
  EXPECT_EQ(u.label(3), "1.b");
  EXPECT_EQ(FiniteSet::sum(base(1), base(2)).labels(), (std::vector<std::string>{"0.a", "1.a", "1.b"}));
}

TEST(WMatrix, RejectsNegativeAndOversize) {
  WMatrix m(base(1), base(1));
  EXPECT_THROW(m.set(Multiset(std::vector<unsigned>{1}), 0, Rational(-1)), taylor::DomainError);
  EXPECT_THROW(m.set(Multiset(std::vector<unsigned>{7}), 0, Rational(1)), taylor::BoundError);
  const WMatrix cube = series({0, 0, 0, 1});
  EXPECT_THROW(taylor::wrel_compose(cube, cube), taylor::BoundError);
}

TEST(Wrel, ComposeAsPowerSeries) {
  // x^2 o x^3 = x^6
  const WMatrix sq = series({0, 0, 1});
  const WMatrix cube = series({0, 0, 0, 1});
  EXPECT_EQ(taylor::wrel_compose(sq, cube).entries(), series({0, 0, 0, 0, 0, 0, 1}).entries());
  // (1 + y)^2 o (1 + x) = 4 + 4x + x^2
  EXPECT_EQ(taylor::wrel_compose(series({1, 2, 1}), series({1, 1})).entries(), series({4, 4, 1}).entries());
  const WMatrix id = taylor::wrel_identity(FiniteSet::singleton());
  EXPECT_EQ(taylor::wrel_compose(id, sq).entries(), sq.entries());
  EXPECT_EQ(taylor::wrel_compose(sq, id).entries(), sq.entries());
}

TEST(Wrel, ComposeMatchesPolynomialSubstitution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteSet a = base(2);
    const FiniteSet b = base(2);
    const FiniteSet c = base(1);
    const std::vector<Poly> f{random_poly(rng, 2, 2), random_poly(rng, 2, 2)};
    const std::vector<Poly> g{random_poly(rng, 2, 3)};
    const WMatrix composite = taylor::wrel_compose(from_polys(b, c, g), from_polys(a, b, f));
    EXPECT_EQ(to_polys(composite)[0], poly_substitute(g[0], f, 2));
  }
}

TEST(Wrel, DerivativeOfSeries) {
  // D^1 of sum c_k x^k: entry ([0*]^m + [1*]) = (m+1) c_{m+1}.
  const WMatrix f = series({5, 1, 2, 3});
  const WMatrix d = taylor::wrel_derivative(f, 1);
  EXPECT_EQ(d.at(Multiset(std::vector<unsigned>{0, 1}), 0), Rational(1));
  EXPECT_EQ(d.at(Multiset(std::vector<unsigned>{1, 1}), 0), Rational(4));
  EXPECT_EQ(d.at(Multiset(std::vector<unsigned>{2, 1}), 0), Rational(9));
  EXPECT_EQ(d.entries().size(), 3U);
  const WMatrix d2 = taylor::wrel_derivative(f, 2);
  EXPECT_EQ(d2.at(Multiset(std::vector<unsigned>{1, 1, 1}), 0), Rational(18));
  EXPECT_EQ(d2.at(Multiset(std::vector<unsigned>{0, 1, 1}), 0), Rational(4));
  EXPECT_TRUE(taylor::wrel_derivative(f, 4).is_zero());
}

TEST(Wrel, TaylorMatchesEpsilonExpansion) {
  // T_n f component i = coefficient of eps^i in f(x_0 + x_1 eps + ... + x_n eps^n).
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t na = 2;
      const std::vector<Poly> f{random_poly(rng, na, 3), random_poly(rng, na, 3)};
      const WMatrix t = taylor::wrel_taylor(from_polys(base(na), base(2), f), n);
      const std::size_t vars = (n + 1) * na + 1;  // last variable is eps
      std::vector<Poly> inputs;
      for (std::size_t a = 0; a < na; ++a) {
        Poly s;
        for (std::size_t k = 0; k <= n; ++k) {
          std::vector<unsigned> e(vars, 0);
          e[k * na + a] = 1;
          e[vars - 1] = static_cast<unsigned>(k);
          s[e] = Rational(1);
        }
        inputs.push_back(s);
      }
      const auto got = to_polys(t);
      for (std::size_t b = 0; b < 2; ++b) {
        const Poly full = poly_substitute(f[b], inputs, vars);
        std::vector<Poly> by_power(n + 1);
        for (const auto& [e, c] : full) {
          if (e.back() > n) continue;
          by_power[e.back()][std::vector<unsigned>(e.begin(), e.end() - 1)] = c;
        }
        for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(got[i * 2 + b], by_power[i]) << "n=" << n << " i=" << i;
      }
      EXPECT_EQ(t, taylor::wrel_taylor_generic(from_polys(base(na), base(2), f), n));
    }
  }
}

TEST(Wrel, AnalyticAndFunctorial) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Poly> f{random_poly(rng, 2, 3)};
    const std::vector<Poly> x{random_poly(rng, 1, 2), random_poly(rng, 1, 2)};
    const std::vector<Poly> u{random_poly(rng, 1, 2), random_poly(rng, 1, 2)};
    EXPECT_TRUE(taylor::wrel_check_analytic(from_polys(base(2), base(1), f), from_polys(base(1), base(2), x),
                                            from_polys(base(1), base(2), u)));
    const std::vector<Poly> g{random_poly(rng, 1, 2), random_poly(rng, 1, 3)};
    for (std::size_t n = 1; n <= 3; ++n) {
      EXPECT_TRUE(taylor::wrel_functoriality_check(from_polys(base(2), base(1), f),
                                                   from_polys(base(1), base(2), g), n));
    }
  }
}
