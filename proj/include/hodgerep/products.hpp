#pragma once

// Tensor products U_1 x ... x U_k over semisimple g = g_1 + ... + g_k (k = 2 or 3).

#include <string>
#include <vector>

#include "hodgerep/hodgecore.hpp"

namespace hodgerep {

struct FactorSpec {
  LieType type;
  GradingElement E;
  Weight mu;

  auto operator<=>(const FactorSpec&) const = default;
};

struct ProductTuple {
  std::vector<FactorSpec> factors;
  Rational c;
  /// Target Hodge level (always 3).
  int level = 3;
  /// Sum of the factor spans.
  Rational span;
  Rational mu_of_E;
  std::vector<Rational> factor_spans;
  std::vector<Reality> factor_realities;
  /// tensor_reality of the factor realities, before accounting for the center.
  Reality reality_ss = Reality::complex;
  Reality reality = Reality::complex;
  EigenDecomp eigen;
  HodgeVector hodge;
  std::vector<RealFormDescriptor> real_forms;
  bool canonical = true;
};

/// Eigenvalues add, dimensions multiply.
EigenDecomp convolve_eigen(const std::vector<EigenDecomp>& decomps);

/// Any complex factor makes the product complex; otherwise the parity of quaternionic factors decides.
Reality tensor_reality(const std::vector<Reality>& types);

/// Factor spans sorted ascending; true for (1,1), (1,2) and (1,1,1).
bool is_admissible_pattern(std::vector<Rational> spans);

struct ProductAnalysis {
  ProductTuple tuple;
  bool valid = false;
  std::string reason;
};

/// Non-throwing pipeline. Factors are used in the given order.
ProductAnalysis analyze_product(const std::vector<FactorSpec>& factors, const WeightSystemOptions& options = {});
/// Same, reusing precomputed factor eigen decompositions (one per factor, in order).
ProductAnalysis analyze_product(const std::vector<FactorSpec>& factors, const std::vector<EigenDecomp>& eigens);

/// Throws DomainError for inadmissible factor patterns or a factor whose top eigenspace is not one-dimensional,
/// and ShapeError when the assembled vector is not (1,a,a,1).
ProductTuple combine(const std::vector<FactorSpec>& factors, const WeightSystemOptions& options = {});

/// Sorted by family letter, rank, mu, then E.
std::vector<FactorSpec> canonical_factor_order(std::vector<FactorSpec> factors);

/// "A1xD4"
std::string product_name(const std::vector<FactorSpec>& factors);

}  // namespace hodgerep
