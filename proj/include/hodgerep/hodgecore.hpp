#pragma once

// Per-candidate analysis: level, E-eigenspaces, reality, center charge and Hodge numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodgerep/rational.hpp"
#include "hodgerep/repweights.hpp"
#include "hodgerep/rootdata.hpp"

namespace hodgerep {

enum class Reality { real, complex, quaternionic };

std::string_view to_string(Reality r);
Reality parse_reality(std::string_view text);

/// E_ss = sum of A^i over the nodes i with coeffs[i] == 1.
struct GradingElement {
  std::vector<int> coeffs;

  GradingElement() = default;
  explicit GradingElement(std::vector<int> c) : coeffs(std::move(c)) {}
  /// From 0-based node indices.
  static GradingElement from_nodes(int rank, const std::vector<int>& nodes);

  int rank() const { return static_cast<int>(coeffs.size()); }
  /// 0-based nodes with coefficient 1.
  std::vector<int> support() const;
  bool contains(int node) const { return coeffs[static_cast<std::size_t>(node)] == 1; }
  /// Throws DomainError unless every entry is 0/1, at least one is 1, and the length matches.
  void validate(int rank) const;

  auto operator<=>(const GradingElement&) const = default;
};

/// Eigenvalues strictly decreasing, dimensions positive.
struct EigenDecomp {
  std::vector<std::pair<Rational, std::uint64_t>> levels;

  std::uint64_t total() const;
  /// Top minus bottom eigenvalue; zero when empty.
  Rational span() const;
  std::vector<std::uint64_t> dims() const;
  bool operator==(const EigenDecomp& o) const { return levels == o.levels; }
};

struct HodgeVector {
  std::vector<std::uint64_t> dims;

  bool is_palindromic() const;
  /// (1, a, a, 1) with a >= 1.
  bool is_cy3() const;
  /// (a, a) with a >= 1.
  bool is_weight_one() const;
  /// Shape check for the Hodge level n (1 or 3).
  bool valid_for(int n) const;
  bool operator==(const HodgeVector& o) const { return dims == o.dims; }
};

struct RealFormDescriptor {
  /// 0-based painted nodes (= support of E).
  std::vector<int> painted;
  std::optional<std::string> name;

  bool operator==(const RealFormDescriptor& o) const = default;
};

struct HodgeTuple {
  LieType type;
  GradingElement E;
  Weight mu;
  Rational c;
  /// Target Hodge level n.
  int level = 3;
  /// (mu + mu*)(E), the E-eigenvalue span of U.
  Rational span;
  Rational mu_of_E;
  /// Reality with respect to the real semisimple part, and with respect to the reductive algebra.
  Reality reality_ss = Reality::complex;
  Reality reality = Reality::complex;
  EigenDecomp eigen;
  HodgeVector hodge;
  RealFormDescriptor real_form;
  /// False when a diagram automorphism maps (E, mu) to a smaller representative.
  bool canonical = true;
};

/// (mu + mu*)(E).
Rational level(LieType type, const Weight& mu, const GradingElement& E);

/// mu(E) = sum of the root coordinates of mu over supp(E).
Rational mu_of_E(LieType type, const Weight& mu, const GradingElement& E);

/// Grouping of the weight system by lambda(E).
EigenDecomp eigenspace_dims(const WeightSystem& ws, const GradingElement& E);
EigenDecomp eigenspace_dims(LieType type, const Weight& mu, const GradingElement& E,
                            const WeightSystemOptions& options = {});

/// supp(mu) is contained in supp(E).
bool extremal_dim_is_one(const Weight& mu, const GradingElement& E);

/// Reality of U with respect to the semisimple real form painted by E.
/// Throws ConsistencyError if mu(H_phi) is not integral for a self-dual mu.
Reality reality_type(LieType type, const Weight& mu, const GradingElement& E);

/// Reality with the center taken into account: a span below the Hodge level forces a nonzero charge,
/// so the representation is complex with respect to the reductive algebra.
Reality effective_reality(Reality reality_ss, const Rational& span, int level_n);

/// n/2 - mu(E) for complex reality, zero otherwise.
Rational center_charge(int level_n, const Rational& mu_of_E, Reality reality);

/// Raw assembly without shape validation. Returns nullopt when an eigenvalue falls outside [-n/2, n/2]
/// or off the half-integer grid, with the reason in *why.
std::optional<HodgeVector> assemble_hodge(const EigenDecomp& decomp, Reality reality, const Rational& c, int level_n,
                                          std::string* why = nullptr);

/// Assembled and validated Hodge vector; throws ShapeError carrying the offending vector.
HodgeVector hodge_vector(const EigenDecomp& decomp, Reality reality, const Rational& c, int level_n);

RealFormDescriptor real_form(LieType type, const GradingElement& E);

/// Full pipeline for one candidate. The tuple is always filled in; valid/reason report shape validity.
struct Analysis {
  HodgeTuple tuple;
  bool valid = false;
  std::string reason;
};

Analysis analyze(LieType type, const Weight& mu, const GradingElement& E, int level_n,
                 const WeightSystemOptions& options = {});
Analysis analyze(const WeightSystem& ws, const GradingElement& E, int level_n);

}  // namespace hodgerep
