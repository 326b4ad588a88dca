#pragma once

// Flat output records and the json / markdown / csv renderings used by the CLI and bindings.

#include <string>
#include <string_view>
#include <vector>

#include "hodgerep/classify.hpp"
#include "hodgerep/verify.hpp"

namespace hodgerep {

enum class Format { json, markdown, csv, text };

std::string_view to_string(Format f);
/// Throws ParseError for unknown names.
Format parse_format(std::string_view text);

struct OutputRecord {
  /// "C3" or "A1xD4"
  std::string algebra;
  /// Per factor: 1-based painted nodes and fundamental coefficients.
  std::vector<std::vector<int>> E;
  std::vector<std::vector<int>> mu;
  /// Rationals as "p/q" (or "p" when integral).
  std::string c;
  int level = 3;
  std::string span;
  std::string reality;
  std::string reality_ss;
  std::vector<std::uint64_t> hodge;
  /// Names joined by "+", or painted-set labels such as "A4{1,3}" where no name is known.
  std::string real_form;
  bool canonical = true;

  bool operator==(const OutputRecord&) const = default;
};

OutputRecord to_record(const HodgeTuple& t);
OutputRecord to_record(const ProductTuple& t);

/// Single-factor records use flat E and mu lists; products use one list per factor.
std::string to_json(const OutputRecord& r);
/// Throws ParseError on malformed input.
OutputRecord record_from_json(std::string_view text);

/// Factor specs recovered from a record (for recomputation).
std::vector<FactorSpec> record_factors(const OutputRecord& r);

std::string render_records(const std::vector<OutputRecord>& records, Format format);
std::string render_report(const ReconciliationReport& report, Format format);

}  // namespace hodgerep
