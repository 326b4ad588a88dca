#include "hodgerep/expected.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hodgerep/errors.hpp"

namespace hodgerep {

namespace {

using nlohmann::json;

constexpr std::string_view kHeader = "#hodgerep-expected v";

std::string need_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ConfigError(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

std::optional<std::string> opt_string(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw ConfigError(std::string("missing array field '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw ConfigError(std::string("entries of '") + key + "' must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

FactorTemplate parse_factor(const json& j) {
  FactorTemplate f;
  const std::string fam = need_string(j, "family");
  if (fam.size() != 1 || fam[0] < 'A' || fam[0] > 'G') throw ConfigError("bad family '" + fam + "'");
  f.family = fam[0];
  f.rank = need_string(j, "rank");
  f.E = string_list(j, "E");
  for (const auto& term : string_list(j, "mu")) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw ConfigError("mu term '" + term + "' must look like node:coef");
    f.mu.emplace_back(term.substr(0, colon), term.substr(colon + 1));
  }
  return f;
}

ExpectedRow parse_row(const json& j) {
  ExpectedRow r;
  r.table = need_string(j, "table");
  r.item = j.at("item").get<int>();
  r.level = j.value("level", 3);
  if (r.level != 1 && r.level != 3) throw ConfigError("level must be 1 or 3");
  if (j.contains("params")) {
    for (const auto& p : j["params"]) {
      if (!p.is_array() || p.size() != 3) throw ConfigError("params entries are [name, lo, hi]");
      r.params.push_back({p[0].get<std::string>(), p[1].get<std::string>(), p[2].get<std::string>()});
    }
  }
  r.when = j.value("when", std::string());
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    throw ConfigError("row needs a nonempty 'factors' array");
  for (const auto& f : j["factors"]) r.factors.push_back(parse_factor(f));
  if (r.factors.size() > 3) throw ConfigError("at most 3 factors");
  r.c = need_string(j, "c");
  r.reality = need_string(j, "reality");
  r.reality_ss = opt_string(j, "reality_ss");
  r.h = string_list(j, "h");
  r.real_form = opt_string(j, "real_form");
  r.real_form_printed = opt_string(j, "real_form_printed");
  if (j.contains("remark_pairs")) r.remark_pairs = j["remark_pairs"].get<std::vector<std::vector<int>>>();
  r.note = j.value("note", std::string());
  return r;
}

AllowEntry parse_allow(const json& j) {
  AllowEntry a;
  a.table = need_string(j, "table");
  a.item = j.at("item").get<int>();
  a.when = j.value("when", std::string());
  if (!j.contains("fields") || !j["fields"].is_object()) throw ConfigError("allow entry needs a 'fields' object");
  const json& f = j["fields"];
  if (f.contains("h")) a.h = string_list(f, "h");
  a.c = opt_string(f, "c");
  a.reality = opt_string(f, "reality");
  a.reality_ss = opt_string(f, "reality_ss");
  a.real_form = opt_string(f, "real_form");
  a.justification = need_string(j, "justification");
  return a;
}

}  // namespace

ExpectedTable parse_expected(std::istream& in) {
  ExpectedTable table;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      if (line.rfind(kHeader, 0) != 0) throw ConfigError("line " + std::to_string(lineno) + ": missing version header");
      try {
        table.version = std::stoi(line.substr(kHeader.size()));
      } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(lineno) + ": bad version header");
      }
      if (table.version != 1) throw ConfigError("unsupported expected-results version " + std::to_string(table.version));
      header = true;
      continue;
    }
    if (line[0] == '#') continue;
    try {
      const json j = json::parse(line);
      const std::string kind = need_string(j, "kind");
      if (kind == "row") {
        table.rows.push_back(parse_row(j));
      } else if (kind == "allow") {
        table.allow.push_back(parse_allow(j));
      } else {
        throw ConfigError("unknown record kind '" + kind + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const json::exception& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header) throw ConfigError("expected-results file is empty");
  return table;
}

ExpectedTable parse_expected_text(const std::string& text) {
  std::istringstream in(text);
  return parse_expected(in);
}

ExpectedTable load_expected_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read expected-results file '" + path + "'");
  return parse_expected(in);
}

const ExpectedTable& embedded_expected() {
  static const ExpectedTable table = parse_expected_text(embedded_expected_text());
  return table;
}

const std::vector<std::string>& known_tables() {
  static const std::vector<std::string> ids{"thm2.1", "prop3.1", "prop3.3", "prop3.5", "prop3.7", "prop3.9", "prop3.11"};
  return ids;
}

}  // namespace hodgerep
