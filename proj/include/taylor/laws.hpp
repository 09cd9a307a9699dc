#pragma once

/**
 * Registry of named algebraic laws checked on seeded random instances.
 *
 * Each case draws its instance from its own generator seeded by
 * derive_seed(seed, law name, case index), so filtering laws or changing the
 * case count never changes the instances a law sees.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "taylor/random.hpp"

namespace taylor {

struct LawContext {
  /// Corrupts one Stree weight so that the stree-explicit law fails.
  bool inject_fault = false;
};

/// A failing case returns a description of its instance.
using LawCheck = std::function<std::optional<std::string>(Rng&, const LawContext&)>;

struct Law {
  std::string name;
  std::string group;
  /// The identity being checked.
  std::string statement;
  LawCheck check;
};

const std::vector<Law>& law_registry();

struct LawOutcome {
  std::string name;
  std::string group;
  std::string statement;
  std::size_t cases_run = 0;
  bool passed = true;
  /// Empty when passed.
  std::string reproducer;
};

struct LawRunOptions {
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  /// Substring filter on law names; empty runs everything.
  std::string filter;
  LawContext context;
};

std::vector<LawOutcome> run_laws(const LawRunOptions& options);

/// A case checked by a negative control: the identity must fail.
struct Witness {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

/// Searches seeded instances for a map f and grid G where the
/// coefficient-free expansion breaks multiplication naturality at order 2:
/// Tbar f (mu G) != mu (Tbar Tbar f (G)).
std::optional<Witness> find_bis_mu_witness(std::uint64_t seed, std::size_t attempts = 200);

/// Evaluates the bis mu-naturality square at order 2 on a given instance;
/// returns a witness when the two sides differ.
std::optional<Witness> bis_mu_square(const SmoothMap& f, const JetOfJets<Rational>& g);

/// (Stree . Stree) o lift against lift o Stree on one jet; returns a
/// witness when they differ.
std::optional<Witness> stree_lift_square(const Jet<Rational>& j);

}  // namespace taylor
