#pragma once

// Enumeration of level-1 and level-3 Hodge tuples and canonicalization under diagram automorphisms.

#include <iterator>
#include <utility>
#include <vector>

#include "hodgerep/hodgecore.hpp"
#include "hodgerep/products.hpp"

namespace hodgerep {

struct SearchConfig {
  int max_rank = 8;
  std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  /// Hodge level, 1 or 3.
  int level = 3;
  bool include_products = false;
  /// Rank bound for product factors; 0 means max_rank.
  int product_max_rank = 0;
  int max_weight_coord_sum = 3;
  /// Drop non-canonical tuples instead of marking them.
  bool dedupe_automorphisms = false;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  WeightSystemOptions weights;

  /// Throws DomainError on an inconsistent configuration.
  void validate() const;
};

struct Classification {
  std::vector<HodgeTuple> simple;
  std::vector<ProductTuple> products;
};

/// Sorted, shape-valid tuples. ResourceError names the offending candidate.
Classification enumerate_level(const SearchConfig& config);

/// Least (E, mu) in the orbit of the diagram automorphism group, compared as
/// (sorted E nodes, sparse mu pairs).
std::pair<GradingElement, Weight> canonical_pair(LieType type, const GradingElement& E, const Weight& mu);

/// Applies canonical_pair and recomputes the fields that depend on node labels.
HodgeTuple canonicalize(const HodgeTuple& t);

/// Canonicalizes each factor, then sorts the factors.
std::vector<FactorSpec> canonicalize_factors(std::vector<FactorSpec> factors);

/// Total orders used for deterministic output.
bool simple_less(const HodgeTuple& a, const HodgeTuple& b);
bool product_less(const ProductTuple& a, const ProductTuple& b);

}  // namespace hodgerep
