#pragma once

/**
 * Seeded generators for the property suites. All draws come from one
 * mt19937_64, so a seed reproduces a case exactly.
 */

#include <cstdint>
#include <random>
#include <string>

#include "taylor/expr.hpp"
#include "taylor/jet.hpp"
#include "taylor/scalar.hpp"
#include "taylor/tangent.hpp"
#include "taylor/wrel.hpp"

namespace taylor {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream label and an index.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

/// Uniform in [lo, hi].
long long random_int(Rng& rng, long long lo, long long hi);

/// p / q with p in [-9, 9] and q in [1, 4].
Rational random_rational(Rng& rng);
/// Same, never zero.
Rational random_nonzero_rational(Rng& rng);

std::vector<Rational> random_vector(Rng& rng, std::size_t n);

/// A polynomial in variables x0..x{arity-1} with at most `max_terms`
/// monomials of total degree <= max_degree and random rational coefficients.
Expr random_polynomial(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t max_terms = 4);

/// R^arity -> R^coarity, one random polynomial per output.
SmoothMap random_polynomial_map(Rng& rng, std::size_t arity, std::size_t coarity, unsigned max_degree,
                                std::size_t max_terms = 4);

/// A linear map (every monomial of degree exactly 1).
SmoothMap random_linear_map(Rng& rng, std::size_t arity, std::size_t coarity);

Jet<Rational> random_jet(Rng& rng, std::size_t order, std::size_t dim);
JetOfJets<Rational> random_grid(Rng& rng, std::size_t order, std::size_t dim);
TowerValue<Rational> random_tower(Rng& rng, std::size_t level, std::size_t dim);

/// Entries are small nonnegative integers, supported on multisets of size
/// <= max_degree, at most max_entries of them.
WMatrix random_wmatrix(Rng& rng, const FiniteSet& domain, const FiniteSet& codomain, std::size_t max_degree,
                       std::size_t max_entries, const WrelBounds& bounds = {});

}  // namespace taylor
