#include "taylor/random.hpp"

namespace taylor {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the label, then a splitmix64 finalizer.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1) + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long random_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational random_rational(Rng& rng) {
  const long long p = random_int(rng, -9, 9);
  const long long q = random_int(rng, 1, 4);
  return Rational(p) / Rational(q);
}

Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

std::vector<Rational> random_vector(Rng& rng, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng));
  return out;
}

Expr random_polynomial(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t max_terms) {
  const auto terms = static_cast<std::size_t>(random_int(rng, 1, static_cast<long long>(max_terms)));
  Expr sum;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto degree = static_cast<unsigned>(random_int(rng, 0, max_degree));
    std::vector<unsigned> exponents(arity, 0);
    for (unsigned k = 0; k < degree && arity > 0; ++k) {
      exponents[static_cast<std::size_t>(random_int(rng, 0, static_cast<long long>(arity) - 1))] += 1;
    }
    Expr term = Expr::constant(random_nonzero_rational(rng));
    for (std::size_t i = 0; i < arity; ++i) {
      if (exponents[i] == 1) term = term * Expr::var(i);
      if (exponents[i] > 1) term = term * pow(Expr::var(i), exponents[i]);
    }
    sum = sum + term;
  }
  return sum;
}

SmoothMap random_polynomial_map(Rng& rng, std::size_t arity, std::size_t coarity, unsigned max_degree,
                                std::size_t max_terms) {
  std::vector<Expr> body;
  for (std::size_t c = 0; c < coarity; ++c) body.push_back(random_polynomial(rng, arity, max_degree, max_terms));
  return SmoothMap(arity, std::move(body));
}

SmoothMap random_linear_map(Rng& rng, std::size_t arity, std::size_t coarity) {
  std::vector<Expr> body;
  for (std::size_t c = 0; c < coarity; ++c) {
    Expr sum;
    for (std::size_t i = 0; i < arity; ++i) sum = sum + Expr::constant(random_rational(rng)) * Expr::var(i);
    body.push_back(sum);
  }
  return SmoothMap(arity, std::move(body));
}

Jet<Rational> random_jet(Rng& rng, std::size_t order, std::size_t dim) {
  return Jet<Rational>(order, dim, random_vector(rng, (order + 1) * dim));
}

JetOfJets<Rational> random_grid(Rng& rng, std::size_t order, std::size_t dim) {
  return JetOfJets<Rational>(order, dim, random_vector(rng, (order + 1) * (order + 1) * dim));
}

TowerValue<Rational> random_tower(Rng& rng, std::size_t level, std::size_t dim) {
  return TowerValue<Rational>(level, dim, random_vector(rng, (std::size_t{1} << level) * dim));
}

WMatrix random_wmatrix(Rng& rng, const FiniteSet& domain, const FiniteSet& codomain, std::size_t max_degree,
                       std::size_t max_entries, const WrelBounds& bounds) {
  WMatrix m(domain, codomain, bounds);
  const auto entries = static_cast<std::size_t>(random_int(rng, 0, static_cast<long long>(max_entries)));
  for (std::size_t e = 0; e < entries; ++e) {
    std::vector<unsigned> counts(domain.size(), 0);
    const auto size = random_int(rng, 0, static_cast<long long>(max_degree));
    for (long long k = 0; k < size; ++k) {
      counts[static_cast<std::size_t>(random_int(rng, 0, static_cast<long long>(domain.size()) - 1))] += 1;
    }
    const auto b = static_cast<std::size_t>(random_int(rng, 0, static_cast<long long>(codomain.size()) - 1));
    m.set(Multiset(counts), b, Rational(random_int(rng, 1, 3)));
  }
  return m;
}

}  // namespace taylor
