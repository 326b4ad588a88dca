#pragma once

// Catalog of the simple Lie types A..G in Bourbaki numbering.
//
// Conventions used throughout the library:
//   * cartan(i, j) = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
//     alpha_i written in the fundamental-weight basis.
//   * weights are integer vectors in the fundamental-weight basis.
//   * root coordinates of a weight are transpose(inverse_cartan) * coords.
//   * the invariant form is normalized so that short roots have squared length 2;
//     symmetrizer[i] = (alpha_i, alpha_i) / 2.
//   * node indices are 0-based in the API and 1-based in text I/O.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hodgerep/rational.hpp"

namespace hodgerep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline constexpr Family kAllFamilies[] = {Family::A, Family::B, Family::C, Family::D,
                                          Family::E, Family::F, Family::G};

struct LieType {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const LieType&) const = default;

  /// "C3", "E6", ...
  std::string name() const;
  /// Inverse of name(); validates rank bounds.
  static LieType parse(std::string_view text);
};

/// Minimum and maximum admissible rank of a family (maximum is 0 for unbounded).
int min_rank(Family f);
int max_rank(Family f);
bool is_valid(LieType t);
/// Throws InvalidTypeError when the rank is out of bounds.
void validate(LieType t);

/// Dominant-or-not integral weight in the fundamental basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  static Weight fundamental(int rank, int node);

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool is_dominant() const;
  bool is_zero() const;
  /// 0-based indices with a nonzero coefficient.
  std::vector<int> support() const;
  int coord_sum() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;

  auto operator<=>(const Weight&) const = default;

  std::string to_string() const;  // "(0, 0, 1)"
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : w.coords) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

using IntMatrix = std::vector<std::vector<int>>;

struct RootSystemData {
  LieType type;
  IntMatrix cartan;
  RationalMatrix inverse_cartan;
  /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  /// The same roots in the fundamental-weight basis.
  std::vector<Weight> positive_roots_fundamental;
  Weight weyl_vector;
  std::vector<int> symmetrizer;

  /// Gram matrix of the fundamental weights scaled by form_scale into integers:
  /// form_scale * (omega_i, omega_j) = scaled_gram[i][j].
  std::vector<std::vector<std::int64_t>> scaled_gram;
  std::int64_t form_scale = 1;

  int rank() const { return type.rank; }
  std::size_t num_positive_roots() const { return positive_roots.size(); }
  /// alpha_i in the fundamental basis (row i of the Cartan matrix).
  Weight simple_root(int i) const { return Weight(cartan[static_cast<std::size_t>(i)]); }

  /// form_scale * (a, b) for weights a, b.
  std::int64_t scaled_inner(const Weight& a, const Weight& b) const;
  /// (lambda, beta) for a weight and a root in simple-root coordinates; always an integer.
  std::int64_t pair_with_root(const Weight& lambda, const std::vector<int>& beta) const;
};

/// Immutable catalog entry, constructed once per type and shared; safe for concurrent reads.
const RootSystemData& root_system(LieType type);

/// Dimension of the Lie algebra of this type.
int algebra_dimension(LieType type);

RationalVector weight_to_root_coords(LieType type, const Weight& w);
/// Inverse of weight_to_root_coords: root coordinates back to fundamental coordinates.
RationalVector root_to_weight_coords(LieType type, const RationalVector& root_coords);

/// The node permutation induced by -w0 (identity for most types).
std::vector<int> dual_permutation(LieType type);
/// mu* = -w0(mu).
Weight dual_weight(LieType type, const Weight& mu);
bool is_self_dual(LieType type, const Weight& mu);

/// mu + mu* in simple-root coordinates, from the per-type tabulated closed forms.
RationalVector mu_plus_mu_star_closed_form(LieType type, const Weight& mu);

/// All Dynkin-diagram automorphisms as node permutations (identity first).
std::vector<std::vector<int>> diagram_automorphisms(LieType type);

/// Applies a node permutation: result[perm[i]] = v[i].
template <typename T>
std::vector<T> permute_nodes(const std::vector<T>& v, const std::vector<int>& perm) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(perm[i])] = v[i];
  return out;
}

}  // namespace hodgerep
