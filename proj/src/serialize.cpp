#include "hodgerep/serialize.hpp"

#include <json.hpp>

#include <sstream>

#include "hodgerep/errors.hpp"

namespace hodgerep {

namespace {

using nlohmann::ordered_json;

std::vector<int> one_based(const GradingElement& E) {
  std::vector<int> out;
  for (int i : E.support()) out.push_back(i + 1);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

template <typename T>
std::string tuple_text(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, Rational>) {
      parts.push_back(to_string(x));
    } else {
      parts.push_back(std::to_string(x));
    }
  }
  return "(" + join(parts, ",") + ")";
}

std::string nested_text(const std::vector<std::vector<int>>& v) {
  std::vector<std::string> parts;
  for (const auto& f : v) parts.push_back(tuple_text(f));
  return join(parts, ";");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::vector<std::string> q;
  for (const auto& f : fields) q.push_back(csv_field(f));
  return join(q, ",") + "\n";
}

std::string md_line(const std::vector<std::string>& fields) {
  std::string s = "|";
  for (const auto& f : fields) {
    std::string cell = f;
    for (std::size_t p = 0; (p = cell.find('|', p)) != std::string::npos; p += 2) cell.replace(p, 1, "\\|");
    s += " " + cell + " |";
  }
  return s + "\n";
}

std::string md_header(const std::vector<std::string>& cols) {
  std::string s = md_line(cols) + "|";
  for (std::size_t i = 0; i < cols.size(); ++i) s += "---|";
  return s + "\n";
}

ordered_json record_json(const OutputRecord& r) {
  ordered_json j;
  j["algebra"] = r.algebra;
  if (r.E.size() == 1) {
    j["E"] = r.E[0];
    j["mu"] = r.mu[0];
  } else {
    j["E"] = r.E;
    j["mu"] = r.mu;
  }
  j["c"] = r.c;
  j["level"] = r.level;
  j["span"] = r.span;
  j["reality"] = r.reality;
  j["reality_ss"] = r.reality_ss;
  j["hodge"] = r.hodge;
  j["real_form"] = r.real_form;
  j["canonical"] = r.canonical;
  return j;
}

const std::vector<std::string> kRecordColumns{"algebra", "E", "mu", "c", "level", "span", "reality",
                                              "reality_ss", "hodge", "real_form", "canonical"};

std::vector<std::string> record_cells(const OutputRecord& r) {
  return {r.algebra, nested_text(r.E), nested_text(r.mu), r.c, std::to_string(r.level), r.span, r.reality,
          r.reality_ss, tuple_text(r.hodge), r.real_form, r.canonical ? "yes" : "no"};
}

// Symbolic rendering of a row: parameters stay unexpanded.
std::string row_algebra(const ExpectedRow& row) {
  std::vector<std::string> parts;
  for (const auto& f : row.factors) {
    const bool numeric = f.rank.find_first_not_of("0123456789") == std::string::npos;
    parts.push_back(std::string(1, f.family) + (numeric ? f.rank : "_" + f.rank));
  }
  return join(parts, "x");
}

std::string row_E(const ExpectedRow& row) {
  std::vector<std::string> parts;
  for (const auto& f : row.factors) {
    std::vector<std::string> nodes;
    for (const auto& e : f.E) nodes.push_back("A^" + e);
    parts.push_back(join(nodes, "+"));
  }
  return join(parts, "; ");
}

std::string row_mu(const ExpectedRow& row) {
  std::vector<std::string> parts;
  for (const auto& f : row.factors) {
    std::vector<std::string> terms;
    for (const auto& [node, coef] : f.mu) terms.push_back((coef == "1" ? "" : coef + "*") + "w" + node);
    parts.push_back(join(terms, "+"));
  }
  return join(parts, "; ");
}

std::string row_h(const ExpectedRow& row) { return "(" + join(row.h, ", ") + ")"; }

std::string row_status(const RowResult& r) {
  if (r.instances.empty()) return "paper-only";
  if (r.mismatch_count() == 0) return "match";
  return r.allowlisted() ? "mismatch (allowlisted)" : "mismatch";
}

std::string params_text(const InstanceResult& i) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : i.params) parts.push_back(k + "=" + std::to_string(v));
  return join(parts, " ");
}

std::string factors_E(const InstanceResult& i) {
  std::vector<std::vector<int>> v;
  for (const auto& f : i.factors) v.push_back(one_based(f.E));
  return nested_text(v);
}

std::string factors_mu(const InstanceResult& i) {
  std::vector<std::vector<int>> v;
  for (const auto& f : i.factors) v.push_back(f.mu.coords);
  return nested_text(v);
}

ordered_json instance_json(const InstanceResult& i) {
  ordered_json j;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : i.params) params[k] = v;
  j["params"] = params;
  j["algebra"] = i.algebra;
  ordered_json E = ordered_json::array(), mu = ordered_json::array();
  for (const auto& f : i.factors) {
    E.push_back(one_based(f.E));
    mu.push_back(f.mu.coords);
  }
  j["E"] = E;
  j["mu"] = mu;
  std::vector<std::string> eh;
  for (const auto& q : i.expected_h) eh.push_back(to_string(q));
  j["expected"] = {{"h", eh},
                   {"c", to_string(i.expected_c)},
                   {"reality", i.expected_reality},
                   {"reality_ss", i.expected_reality_ss ? ordered_json(*i.expected_reality_ss) : ordered_json()},
                   {"real_form", i.expected_real_form ? ordered_json(*i.expected_real_form) : ordered_json()}};
  j["computed"] = {{"h", i.h},
                   {"c", to_string(i.c)},
                   {"span", to_string(i.span)},
                   {"reality", std::string(to_string(i.reality))},
                   {"reality_ss", std::string(to_string(i.reality_ss))},
                   {"real_form", i.real_form},
                   {"valid", i.valid},
                   {"reason", i.reason}};
  j["diffs"] = i.diffs;
  j["allowlisted"] = i.allowlisted;
  if (i.allowlisted) j["justification"] = i.justification;
  return j;
}

ordered_json row_json(const RowResult& r) {
  ordered_json j;
  j["table"] = r.row.table;
  j["item"] = r.row.item;
  j["status"] = row_status(r);
  j["algebra"] = row_algebra(r.row);
  j["E"] = row_E(r.row);
  j["mu"] = row_mu(r.row);
  j["c"] = r.row.c;
  j["reality"] = r.row.reality;
  j["h"] = row_h(r.row);
  j["real_form"] = r.row.real_form ? ordered_json(*r.row.real_form) : ordered_json();
  if (r.row.real_form_printed) j["real_form_printed"] = *r.row.real_form_printed;
  j["instances"] = r.instances.size();
  j["mismatching_instances"] = r.mismatch_count();
  j["diffs"] = r.diffs;
  ordered_json bad = ordered_json::array();
  for (const auto& i : r.instances)
    if (!i.matches()) bad.push_back(instance_json(i));
  j["mismatch_details"] = bad;
  if (!r.row.note.empty()) j["note"] = r.row.note;
  return j;
}

OutputRecord computed_record(const ComputedOnly& c) {
  return std::visit([](const auto& t) { return to_record(t); }, c.tuple);
}

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::markdown: return "markdown";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "json";
}

Format parse_format(std::string_view text) {
  for (Format f : {Format::json, Format::markdown, Format::csv, Format::text})
    if (to_string(f) == text) return f;
  throw ParseError("unknown format '" + std::string(text) + "' (json, markdown, csv, text)");
}

OutputRecord to_record(const HodgeTuple& t) {
  OutputRecord r;
  r.algebra = t.type.name();
  r.E = {one_based(t.E)};
  r.mu = {t.mu.coords};
  r.c = to_string(t.c);
  r.level = t.level;
  r.span = to_string(t.span);
  r.reality = to_string(t.reality);
  r.reality_ss = to_string(t.reality_ss);
  r.hodge = t.hodge.dims;
  r.real_form = real_form_label(t.type, t.real_form);
  r.canonical = t.canonical;
  return r;
}

OutputRecord to_record(const ProductTuple& t) {
  OutputRecord r;
  r.algebra = product_name(t.factors);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    r.E.push_back(one_based(t.factors[i].E));
    r.mu.push_back(t.factors[i].mu.coords);
    labels.push_back(real_form_label(t.factors[i].type, t.real_forms[i]));
  }
  r.c = to_string(t.c);
  r.level = t.level;
  r.span = to_string(t.span);
  r.reality = to_string(t.reality);
  r.reality_ss = to_string(t.reality_ss);
  r.hodge = t.hodge.dims;
  r.real_form = join(labels, "+");
  r.canonical = t.canonical;
  return r;
}

std::string to_json(const OutputRecord& r) { return record_json(r).dump(); }

OutputRecord record_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    OutputRecord r;
    r.algebra = j.at("algebra").get<std::string>();
    const auto& E = j.at("E");
    const auto& mu = j.at("mu");
    const bool nested = !E.empty() && E[0].is_array();
    if (nested) {
      r.E = E.get<std::vector<std::vector<int>>>();
      r.mu = mu.get<std::vector<std::vector<int>>>();
    } else {
      r.E = {E.get<std::vector<int>>()};
      r.mu = {mu.get<std::vector<int>>()};
    }
    r.c = j.at("c").get<std::string>();
    r.level = j.at("level").get<int>();
    r.span = j.at("span").get<std::string>();
    r.reality = j.at("reality").get<std::string>();
    r.reality_ss = j.at("reality_ss").get<std::string>();
    r.hodge = j.at("hodge").get<std::vector<std::uint64_t>>();
    r.real_form = j.at("real_form").get<std::string>();
    r.canonical = j.at("canonical").get<bool>();
    if (r.E.size() != r.mu.size()) throw ParseError("E and mu have different factor counts");
    return r;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad record: ") + e.what());
  }
}

std::vector<FactorSpec> record_factors(const OutputRecord& r) {
  std::vector<FactorSpec> out;
  std::vector<std::string> names;
  std::string cur;
  for (char ch : r.algebra) {
    if (ch == 'x') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  names.push_back(cur);
  if (names.size() != r.E.size()) throw ParseError("algebra '" + r.algebra + "' does not match the factor count");
  for (std::size_t i = 0; i < names.size(); ++i) {
    const LieType type = LieType::parse(names[i]);
    std::vector<int> nodes;
    for (int n : r.E[i]) nodes.push_back(n - 1);
    if (static_cast<int>(r.mu[i].size()) != type.rank) throw ParseError("mu length does not match " + names[i]);
    out.push_back({type, GradingElement::from_nodes(type.rank, nodes), Weight(r.mu[i])});
  }
  return out;
}

std::string render_records(const std::vector<OutputRecord>& records, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : records) arr.push_back(record_json(r));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::markdown:
      out << md_header(kRecordColumns);
      for (const auto& r : records) out << md_line(record_cells(r));
      break;
    case Format::csv:
      out << csv_line(kRecordColumns);
      for (const auto& r : records) out << csv_line(record_cells(r));
      break;
    case Format::text:
      for (const auto& r : records) {
        out << r.algebra << "  E=" << nested_text(r.E) << "  mu=" << nested_text(r.mu) << "  c=" << r.c
            << "  " << r.reality << "  h=" << tuple_text(r.hodge) << "  " << r.real_form
            << (r.canonical ? "" : "  [non-canonical]") << "\n";
      }
      break;
  }
  return out.str();
}

std::string render_report(const ReconciliationReport& report, Format format) {
  std::ostringstream out;
  const auto rows = report.rows();
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["scope"] = report.scope;
      j["max_rank"] = report.max_rank;
      j["product_max_rank"] = report.product_max_rank;
      j["clean"] = report.clean();
      j["counts"] = {{"matches", report.matches.size()},
                     {"mismatches", report.mismatches.size()},
                     {"paper_only", report.paper_only.size()},
                     {"computed_only", report.computed_only.size()}};
      ordered_json arr = ordered_json::array();
      for (const auto* r : rows) arr.push_back(row_json(*r));
      j["rows"] = arr;
      ordered_json extra = ordered_json::array();
      for (const auto& c : report.computed_only) {
        ordered_json e = record_json(computed_record(c));
        e["table"] = c.table;
        e["alias_of"] = c.alias_of.empty() ? ordered_json() : ordered_json(c.alias_of);
        extra.push_back(e);
      }
      j["computed_only"] = extra;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::markdown: {
      out << "# Reconciliation (scope " << report.scope << ", R = " << report.max_rank << ", products R = "
          << report.product_max_rank << ")\n\n";
      out << md_header({"table", "item", "algebra", "E", "mu", "c", "reality", "h", "real form", "instances",
                        "status", "diff"});
      for (const auto* r : rows) {
        std::string label = r->row.real_form.value_or("");
        if (r->row.real_form_printed) label += " (printed " + *r->row.real_form_printed + ")";
        out << md_line({r->row.table, std::to_string(r->row.item), row_algebra(r->row), row_E(r->row),
                        row_mu(r->row), r->row.c, r->row.reality, row_h(r->row), label,
                        std::to_string(r->instances.size()), row_status(*r), join(r->diffs, ",")});
      }
      bool any = false;
      for (const auto* r : rows) {
        for (const auto& i : r->instances) {
          if (i.matches()) continue;
          if (!any) {
            out << "\n## Mismatching instances\n\n";
            out << md_header({"table", "item", "params", "algebra", "E", "mu", "expected h", "computed h",
                              "expected c", "computed c", "expected reality", "computed reality", "diff",
                              "allowlisted"});
            any = true;
          }
          out << md_line({r->row.table, std::to_string(r->row.item), params_text(i), i.algebra, factors_E(i),
                          factors_mu(i), tuple_text(i.expected_h), tuple_text(i.h), to_string(i.expected_c),
                          to_string(i.c), i.expected_reality, std::string(to_string(i.reality)),
                          join(i.diffs, ","), i.allowlisted ? "yes: " + i.justification : "no"});
        }
      }
      if (!report.computed_only.empty()) {
        out << "\n## Computed only\n\n";
        std::vector<std::string> cols{"table"};
        cols.insert(cols.end(), kRecordColumns.begin(), kRecordColumns.end());
        cols.push_back("alias of");
        out << md_header(cols);
        for (const auto& c : report.computed_only) {
          auto cells = record_cells(computed_record(c));
          cells.insert(cells.begin(), c.table);
          cells.push_back(c.alias_of.empty() ? "" : c.alias_of + " via B2 = C2");
          out << md_line(cells);
        }
      }
      out << "\n" << report.matches.size() << " match, " << report.mismatches.size() << " mismatch, "
          << report.paper_only.size() << " paper-only, " << report.computed_only.size() << " computed-only; "
          << (report.clean() ? "clean" : "NOT clean") << "\n";
      break;
    }
    case Format::csv: {
      out << csv_line({"table", "item", "status", "params", "algebra", "E", "mu", "expected_h", "computed_h",
                       "expected_c", "computed_c", "expected_reality", "computed_reality", "expected_real_form",
                       "computed_real_form", "diff", "allowlisted"});
      for (const auto* r : rows) {
        if (r->instances.empty()) {
          out << csv_line({r->row.table, std::to_string(r->row.item), row_status(*r), "", row_algebra(r->row),
                           row_E(r->row), row_mu(r->row), row_h(r->row), "", r->row.c, "", r->row.reality, "",
                           r->row.real_form.value_or(""), "", "", ""});
        }
        for (const auto& i : r->instances) {
          out << csv_line({r->row.table, std::to_string(r->row.item), i.matches() ? "match" : "mismatch",
                           params_text(i), i.algebra, factors_E(i), factors_mu(i), tuple_text(i.expected_h),
                           tuple_text(i.h), to_string(i.expected_c), to_string(i.c), i.expected_reality,
                           std::string(to_string(i.reality)), i.expected_real_form.value_or(""), i.real_form,
                           join(i.diffs, ";"), i.allowlisted ? "yes" : "no"});
        }
      }
      break;
    }
    case Format::text: {
      for (const auto* r : rows) {
        out << r->row.table << " item " << r->row.item << ": " << row_status(*r) << " (" << r->instances.size()
            << " instances";
        if (!r->diffs.empty()) out << "; diff " << join(r->diffs, ",");
        out << ")\n";
        for (const auto& i : r->instances) {
          if (i.matches()) continue;
          out << "  " << i.algebra << " " << params_text(i) << "  expected h=" << tuple_text(i.expected_h)
              << " c=" << to_string(i.expected_c) << " " << i.expected_reality << "  computed h=" << tuple_text(i.h)
              << " c=" << to_string(i.c) << " " << to_string(i.reality)
              << (i.allowlisted ? "  [allowlisted]" : "") << "\n";
        }
      }
      for (const auto& c : report.computed_only) {
        const OutputRecord r = computed_record(c);
        out << "computed only (" << c.table << "): " << r.algebra << " E=" << nested_text(r.E)
            << " mu=" << nested_text(r.mu) << " h=" << tuple_text(r.hodge) << " " << r.reality;
        if (!c.alias_of.empty()) out << "  [" << c.alias_of << " via B2 = C2]";
        out << "\n";
      }
      out << (report.clean() ? "clean" : "NOT clean") << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace hodgerep
