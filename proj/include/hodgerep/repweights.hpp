#pragma once

// Weight systems of irreducible highest-weight modules.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hodgerep/rational.hpp"
#include "hodgerep/rootdata.hpp"

namespace hodgerep {

struct WeightSystemOptions {
  /// Refuse to build weight systems of representations larger than this.
  std::uint64_t max_dim = 1'000'000;
};

struct WeightSystem {
  LieType type;
  Weight highest;
  /// Dominant weights with multiplicities, in order of increasing depth below the highest weight.
  std::vector<std::pair<Weight, std::uint64_t>> dominant;
  /// Every weight in every chamber.
  std::unordered_map<Weight, std::uint64_t, WeightHash> multiplicities;
  std::uint64_t dimension = 0;

  /// Zero for weights that do not occur.
  std::uint64_t multiplicity(const Weight& w) const;
};

/// Weyl dimension formula. Throws DomainError for non-dominant mu.
BigInt weyl_dim(LieType type, const Weight& mu);

/// Freudenthal recursion on dominant weights, extended to all chambers by orbits.
/// Throws DomainError for non-dominant mu and ResourceError above options.max_dim.
WeightSystem weight_system(LieType type, const Weight& mu, const WeightSystemOptions& options = {});

/// The unique dominant weight in the Weyl orbit of w.
Weight dominant_conjugate(LieType type, const Weight& w);

/// The Weyl orbit of w, sorted.
std::vector<Weight> weyl_orbit(LieType type, const Weight& w);

}  // namespace hodgerep
