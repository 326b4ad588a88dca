#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hodgerep/classify.hpp"
#include "hodgerep/errors.hpp"
#include "hodgerep/serialize.hpp"
#include "hodgerep/verify.hpp"

namespace {

using namespace hodgerep;

constexpr int kExitMismatch = 1;
constexpr int kExitShape = 2;
constexpr int kExitUsage = 64;
constexpr int kExitResource = 70;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    if (tok.empty()) throw ParseError(std::string("empty entry in ") + what + " '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(std::string("bad integer '") + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

// Products: "A1xD4" with --E "1;1" and --mu "1;1,0,0,0".
std::vector<FactorSpec> parse_factors(const std::string& algebra, const std::string& E, const std::string& mu) {
  const auto names = split(algebra, 'x');
  const auto Es = split(E, ';');
  const auto mus = split(mu, ';');
  if (Es.size() != names.size() || mus.size() != names.size())
    throw ParseError("--E and --mu need one ';'-separated group per factor of " + algebra);
  std::vector<FactorSpec> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const LieType type = LieType::parse(names[i]);
    std::vector<int> nodes;
    for (int n : parse_ints(Es[i], "--E")) {
      if (n < 1 || n > type.rank) throw ParseError("node " + std::to_string(n) + " out of range for " + type.name());
      nodes.push_back(n - 1);
    }
    const auto coeffs = parse_ints(mus[i], "--mu");
    if (static_cast<int>(coeffs.size()) != type.rank)
      throw ParseError("--mu for " + type.name() + " needs " + std::to_string(type.rank) + " coefficients");
    Weight w(coeffs);
    if (!w.is_dominant() || w.is_zero()) throw ParseError("--mu must be a nonzero dominant weight");
    out.push_back({type, GradingElement::from_nodes(type.rank, nodes), w});
  }
  if (out.size() > 3) throw ParseError("at most three factors");
  return out;
}

std::string eigen_table(const EigenDecomp& e) {
  std::string s = "  E-eigenvalue  dim\n";
  for (const auto& [v, d] : e.levels) {
    std::string val = to_string(v);
    s += "  " + val + std::string(val.size() < 12 ? 12 - val.size() : 1, ' ') + "  " + std::to_string(d) + "\n";
  }
  return s;
}

int cmd_inspect(const std::string& algebra, const std::string& E, const std::string& mu, std::optional<int> level_n,
                Format format) {
  const auto factors = parse_factors(algebra, E, mu);
  OutputRecord rec;
  EigenDecomp eigen;
  bool valid = false;
  std::string reason;
  if (factors.size() == 1) {
    const auto& f = factors[0];
    const Rational span = level(f.type, f.mu, f.E);
    const int n = level_n.value_or(span == 1 ? 1 : 3);
    if (n != 1 && n != 3) throw ParseError("--level must be 1 or 3");
    const Analysis a = analyze(f.type, f.mu, f.E, n);
    rec = to_record(a.tuple);
    eigen = a.tuple.eigen;
    valid = a.valid;
    reason = a.reason;
  } else {
    if (level_n && *level_n != 3) throw ParseError("products are only analyzed at level 3");
    const ProductAnalysis a = analyze_product(factors);
    rec = to_record(a.tuple);
    eigen = a.tuple.eigen;
    valid = a.valid;
    reason = a.reason;
  }
  if (format == Format::text) {
    std::cout << "algebra     " << rec.algebra << "\n"
              << "E           " << E << "\n"
              << "mu          " << mu << "\n"
              << "target      level " << rec.level << "\n"
              << "span        " << rec.span << "\n"
              << "reality     " << rec.reality << " (semisimple part: " << rec.reality_ss << ")\n"
              << "c           " << rec.c << "\n"
              << "hodge       (";
    for (std::size_t i = 0; i < rec.hodge.size(); ++i) std::cout << (i ? "," : "") << rec.hodge[i];
    std::cout << ")\n"
              << "real form   " << rec.real_form << "\n"
              << "eigenspaces of U\n"
              << eigen_table(eigen) << (valid ? "shape-valid\n" : "shape-invalid: " + reason + "\n");
  } else {
    std::cout << render_records({rec}, format);
    if (!valid) std::cerr << "shape-invalid: " << reason << "\n";
  }
  return valid ? 0 : kExitShape;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> out;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    bool ok = false;
    for (Family f : kAllFamilies) {
      if (static_cast<char>(f) == ch) {
        out.push_back(f);
        ok = true;
      }
    }
    if (!ok) throw ParseError(std::string("unknown family '") + ch + "'");
  }
  if (out.empty()) throw ParseError("--families is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and reconciliation of level-1 and level-3 Hodge representations"};
  app.require_subcommand(1);

  std::string format_text = "text";
  std::string algebra, E, mu;
  std::optional<int> level_n;
  auto* inspect = app.add_subcommand("inspect", "Analyze one (algebra, E, mu) candidate");
  inspect->add_option("algebra", algebra, "e.g. C3 or A1xD4")->required();
  inspect->add_option("--E", E, "1-based painted nodes, comma separated; ';' between product factors")->required();
  inspect->add_option("--mu", mu, "fundamental coefficients, comma separated; ';' between factors")->required();
  inspect->add_option("--level", level_n, "target Hodge level (1 or 3); default from the span");
  inspect->add_option("--format", format_text, "text, json, markdown or csv");

  int level3 = 3;
  int max_rank = 8;
  int product_max_rank = 0;
  int weight_sum = 3;
  std::string families = "ABCDEFG";
  bool products = false;
  bool dedupe = false;
  unsigned threads = 0;
  auto* classify = app.add_subcommand("classify", "Enumerate Hodge tuples");
  classify->add_option("--level", level3, "1 or 3");
  classify->add_option("--max-rank", max_rank, "largest rank searched");
  classify->add_option("--product-max-rank", product_max_rank, "largest factor rank for products (0: --max-rank)");
  classify->add_option("--families", families, "subset of ABCDEFG");
  classify->add_option("--max-weight-sum", weight_sum, "bound on the coordinate sum of mu");
  classify->add_flag("--products", products, "include tensor products of 2 or 3 simple factors");
  classify->add_flag("--dedupe", dedupe, "drop tuples that are not canonical under diagram automorphisms");
  classify->add_option("--threads", threads, "worker threads (0: hardware concurrency)");
  classify->add_option("--format", format_text, "text, json, markdown or csv");

  std::string scope = "all";
  std::string expected_file;
  int verify_rank = 8;
  int verify_product_rank = 4;
  bool no_computed_only = false;
  auto* verify = app.add_subcommand("verify-paper", "Reconcile the expected-results table against recomputation");
  verify->add_option("--scope", scope, "all, thm2.1, prop3.1, prop3.3, prop3.5, prop3.7, prop3.9 or prop3.11");
  verify->add_option("--max-rank", verify_rank, "rank bound R for single-factor rows");
  verify->add_option("--product-max-rank", verify_product_rank, "rank bound R for product rows");
  verify->add_option("--expected-file", expected_file, "override the embedded expected-results file");
  verify->add_flag("--no-computed-only", no_computed_only, "skip the search for unaccounted tuples");
  verify->add_option("--threads", threads, "worker threads (0: hardware concurrency)");
  verify->add_option("--format", format_text, "text, json, markdown or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    if (*inspect) return cmd_inspect(algebra, E, mu, level_n, format);
    if (*classify) {
      SearchConfig cfg;
      cfg.level = level3;
      cfg.max_rank = max_rank;
      cfg.product_max_rank = product_max_rank;
      cfg.families = parse_families(families);
      cfg.max_weight_coord_sum = weight_sum;
      cfg.include_products = products;
      cfg.dedupe_automorphisms = dedupe;
      cfg.threads = threads;
      const Classification c = enumerate_level(cfg);
      std::vector<OutputRecord> records;
      for (const auto& t : c.simple) records.push_back(to_record(t));
      for (const auto& p : c.products) records.push_back(to_record(p));
      std::cout << render_records(records, format);
      return 0;
    }
    VerifyOptions opts;
    opts.scope = scope;
    opts.max_rank = verify_rank;
    opts.product_max_rank = verify_product_rank;
    opts.include_computed_only = !no_computed_only;
    opts.threads = threads;
    if (!expected_file.empty()) opts.expected_file = expected_file;
    const ReconciliationReport report = verify_paper(opts);
    std::cout << render_report(report, format);
    return report.clean() ? 0 : kExitMismatch;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
