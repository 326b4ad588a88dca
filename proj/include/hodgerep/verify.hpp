#pragma once

// Reconciliation of the embedded expected-results table against recomputation.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hodgerep/classify.hpp"
#include "hodgerep/expected.hpp"

namespace hodgerep {

struct VerifyOptions {
  /// "all" or one of known_tables().
  std::string scope = "all";
  /// Bound for the parameter R in single-factor rows.
  int max_rank = 8;
  /// Bound for R in product rows.
  int product_max_rank = 4;
  /// Also enumerate and report canonical tuples that no row accounts for.
  bool include_computed_only = true;
  unsigned threads = 0;
  WeightSystemOptions weights;
  /// Overrides the embedded table when set.
  std::optional<std::string> expected_file;
};

/// One concrete instantiation of a row.
struct InstanceResult {
  std::vector<std::pair<std::string, long>> params;
  std::vector<FactorSpec> factors;
  std::string algebra;

  std::vector<Rational> expected_h;
  Rational expected_c;
  std::string expected_reality;
  std::optional<std::string> expected_reality_ss;
  std::optional<std::string> expected_real_form;

  std::vector<std::uint64_t> h;
  Rational c;
  Rational span;
  Reality reality = Reality::complex;
  Reality reality_ss = Reality::complex;
  std::string real_form;
  bool valid = false;
  std::string reason;

  /// Subset of {level, shape, h, c, reality, reality_ss, real_form}, in that order.
  std::vector<std::string> diffs;
  /// Every diff field is covered by an allow entry whose oracle equals the computed value.
  bool allowlisted = false;
  std::string justification;

  bool matches() const { return diffs.empty(); }
};

struct RowResult {
  ExpectedRow row;
  std::vector<InstanceResult> instances;
  /// Union of the instance diff fields.
  std::vector<std::string> diffs;

  std::size_t mismatch_count() const;
  /// True when every mismatching instance is allowlisted.
  bool allowlisted() const;
};

struct ComputedOnly {
  std::string table;
  std::variant<HodgeTuple, ProductTuple> tuple;
  /// Set when the record is a row instance under the B2 = C2 isomorphism, e.g. "prop3.3 item 7".
  std::string alias_of;
};

struct ReconciliationReport {
  std::string scope;
  int max_rank = 8;
  int product_max_rank = 4;
  /// Each row lands in exactly one of these three lists.
  std::vector<RowResult> matches;
  std::vector<RowResult> mismatches;
  std::vector<RowResult> paper_only;
  std::vector<ComputedOnly> computed_only;

  /// No mismatch outside the allowlist.
  bool clean() const;
  /// All rows in table order, then item order.
  std::vector<const RowResult*> rows() const;
};

/// Throws ConfigError for an unknown scope or unreadable table file.
ReconciliationReport verify_paper(const VerifyOptions& options = {});
ReconciliationReport verify_paper(const ExpectedTable& table, const VerifyOptions& options);

/// Concrete instances of one row with R bound to rank_bound; rows whose `when` fails or whose ranks
/// leave the family bounds are skipped.
std::vector<InstanceResult> instantiate(const ExpectedRow& row, int rank_bound);

/// "A4{1,3}" style painted-set label, or the name when known.
std::string real_form_label(LieType type, const RealFormDescriptor& rf);

}  // namespace hodgerep
