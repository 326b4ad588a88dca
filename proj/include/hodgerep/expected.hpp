#pragma once

// Expected-results table: one record per published row, plus a known-discrepancy allowlist.
//
// The file is JSON Lines. The first non-blank line must be the version header
// "#hodgerep-expected v1"; later lines starting with '#' are comments. Each record has a "kind":
//
//   row    table, item, level (1 or 3), params [[name, lo_expr, hi_expr], ...], optional when,
//          factors [{family, rank, E: [node_expr...], mu: ["node_expr:coef_expr"...]}],
//          c, reality, optional reality_ss, h: [expr...], optional real_form (template with {expr}),
//          optional real_form_printed, optional remark_pairs, optional note
//   allow  table, item, optional when, fields {h: [expr...], c, reality, reality_ss, real_form},
//          justification
//
// Expressions use the language in expr.hpp; the identifier R is the rank bound of the run.

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace hodgerep {

struct ParamRange {
  std::string name;
  std::string lo;
  std::string hi;
};

struct FactorTemplate {
  char family = 'A';
  std::string rank;
  std::vector<std::string> E;
  /// (node expression, coefficient expression)
  std::vector<std::pair<std::string, std::string>> mu;
};

struct ExpectedRow {
  std::string table;
  int item = 0;
  int level = 3;
  std::vector<ParamRange> params;
  std::string when;
  std::vector<FactorTemplate> factors;
  std::string c;
  std::string reality;
  std::optional<std::string> reality_ss;
  std::vector<std::string> h;
  std::optional<std::string> real_form;
  std::optional<std::string> real_form_printed;
  std::vector<std::vector<int>> remark_pairs;
  std::string note;
};

struct AllowEntry {
  std::string table;
  int item = 0;
  std::string when;
  std::optional<std::vector<std::string>> h;
  std::optional<std::string> c;
  std::optional<std::string> reality;
  std::optional<std::string> reality_ss;
  std::optional<std::string> real_form;
  std::string justification;
};

struct ExpectedTable {
  int version = 1;
  std::vector<ExpectedRow> rows;
  std::vector<AllowEntry> allow;
};

/// Throws ConfigError with the offending line number on malformed input.
ExpectedTable parse_expected(std::istream& in);
ExpectedTable parse_expected_text(const std::string& text);
/// Throws ConfigError when the file cannot be read.
ExpectedTable load_expected_file(const std::string& path);
/// The table compiled into the library.
const std::string& embedded_expected_text();
const ExpectedTable& embedded_expected();

/// Table identifiers in presentation order.
const std::vector<std::string>& known_tables();

}  // namespace hodgerep
