#include "hodgerep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hodgerep/errors.hpp"
#include "hodgerep/expr.hpp"

namespace hodgerep {

namespace {

bool is_product_table(const std::string& table) {
  return table == "prop3.7" || table == "prop3.9" || table == "prop3.11";
}

int table_rank(const std::string& table) {
  const auto& ids = known_tables();
  return static_cast<int>(std::find(ids.begin(), ids.end(), table) - ids.begin());
}

Family family_of(char c) {
  for (Family f : kAllFamilies)
    if (static_cast<char>(f) == c) return f;
  throw ConfigError(std::string("unknown family '") + c + "'");
}

ExprEnv make_env(const std::vector<std::pair<std::string, long>>& params, int rank_bound) {
  ExprEnv env;
  env["R"] = rank_bound;
  for (const auto& [k, v] : params) env[k] = v;
  return env;
}

std::optional<FactorSpec> build_factor(const FactorTemplate& t, const ExprEnv& env, int rank_bound) {
  const LieType type{family_of(t.family), static_cast<int>(evaluate_int(t.rank, env))};
  if (!is_valid(type) || type.rank > rank_bound) return std::nullopt;
  std::vector<int> nodes;
  for (const auto& e : t.E) {
    const long node = evaluate_int(e, env);
    if (node < 1 || node > type.rank) return std::nullopt;
    nodes.push_back(static_cast<int>(node - 1));
  }
  Weight mu = Weight::zero(type.rank);
  for (const auto& [node_expr, coef_expr] : t.mu) {
    const long node = evaluate_int(node_expr, env);
    if (node < 1 || node > type.rank) return std::nullopt;
    mu[static_cast<std::size_t>(node - 1)] += static_cast<int>(evaluate_int(coef_expr, env));
  }
  return FactorSpec{type, GradingElement::from_nodes(type.rank, nodes), mu};
}

using WeightCache = std::map<std::pair<LieType, Weight>, WeightSystem>;

const WeightSystem& cached_weights(WeightCache& cache, const FactorSpec& f, const WeightSystemOptions& options) {
  auto key = std::make_pair(f.type, f.mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, weight_system(f.type, f.mu, options)).first;
  return it->second;
}

bool span_admissible(const Rational& span, int n) {
  if (n == 1) return span == 1;
  return span == 1 || span == 2 || span == 3;
}

void compute(InstanceResult& inst, int n, WeightCache& cache, const WeightSystemOptions& options) {
  if (inst.factors.size() == 1) {
    const FactorSpec& f = inst.factors[0];
    const Analysis a = analyze(cached_weights(cache, f, options), f.E, n);
    const HodgeTuple& t = a.tuple;
    inst.h = t.hodge.dims;
    inst.c = t.c;
    inst.span = t.span;
    inst.reality = t.reality;
    inst.reality_ss = t.reality_ss;
    inst.real_form = real_form_label(f.type, t.real_form);
    inst.valid = a.valid;
    inst.reason = a.reason;
    // Level one has no support condition; level three needs a one-dimensional top eigenspace.
    if (!span_admissible(t.span, n) || (n == 3 && !extremal_dim_is_one(f.mu, f.E))) {
      inst.diffs.push_back("level");
    } else if (!a.valid) {
      inst.diffs.push_back("shape");
    }
  } else {
    std::vector<EigenDecomp> eigens;
    for (const auto& f : inst.factors) eigens.push_back(eigenspace_dims(cached_weights(cache, f, options), f.E));
    const ProductAnalysis a = analyze_product(inst.factors, eigens);
    const ProductTuple& t = a.tuple;
    inst.h = t.hodge.dims;
    inst.c = t.c;
    inst.span = t.span;
    inst.reality = t.reality;
    inst.reality_ss = t.reality_ss;
    std::string label;
    for (std::size_t i = 0; i < inst.factors.size(); ++i) {
      if (i) label += "+";
      label += real_form_label(inst.factors[i].type, t.real_forms[i]);
    }
    inst.real_form = label;
    inst.valid = a.valid;
    inst.reason = a.reason;
    bool extremal = true;
    for (const auto& f : inst.factors) extremal = extremal && extremal_dim_is_one(f.mu, f.E);
    if (!is_admissible_pattern(t.factor_spans) || !extremal) {
      inst.diffs.push_back("level");
    } else if (!a.valid) {
      inst.diffs.push_back("shape");
    }
  }

  std::vector<Rational> got(inst.h.begin(), inst.h.end());
  if (got != inst.expected_h) inst.diffs.push_back("h");
  if (inst.c != inst.expected_c) inst.diffs.push_back("c");
  if (to_string(inst.reality) != inst.expected_reality) inst.diffs.push_back("reality");
  if (inst.expected_reality_ss && to_string(inst.reality_ss) != *inst.expected_reality_ss)
    inst.diffs.push_back("reality_ss");
  if (inst.expected_real_form && inst.real_form != *inst.expected_real_form) inst.diffs.push_back("real_form");
}

// Every diff field needs an oracle in one applicable allow entry, and the computed value must equal it.
void apply_allowlist(InstanceResult& inst, const ExpectedRow& row, const std::vector<AllowEntry>& allow,
                     int rank_bound) {
  if (inst.diffs.empty()) return;
  const ExprEnv env = make_env(inst.params, rank_bound);
  for (const AllowEntry& a : allow) {
    if (a.table != row.table || a.item != row.item) continue;
    if (!a.when.empty() && !evaluate_bool(a.when, env)) continue;
    bool ok = true;
    for (const std::string& d : inst.diffs) {
      if (d == "h" && a.h) {
        std::vector<Rational> oracle;
        for (const auto& e : *a.h) oracle.push_back(evaluate_number(e, env));
        ok = ok && oracle == std::vector<Rational>(inst.h.begin(), inst.h.end());
      } else if (d == "c" && a.c) {
        ok = ok && evaluate_number(*a.c, env) == inst.c;
      } else if (d == "reality" && a.reality) {
        ok = ok && evaluate_string(*a.reality, env) == to_string(inst.reality);
      } else if (d == "reality_ss" && a.reality_ss) {
        ok = ok && evaluate_string(*a.reality_ss, env) == to_string(inst.reality_ss);
      } else if (d == "real_form" && a.real_form) {
        ok = ok && expand_template(*a.real_form, env) == inst.real_form;
      } else {
        ok = false;
      }
    }
    if (ok) {
      inst.allowlisted = true;
      inst.justification = a.justification;
      return;
    }
  }
}

using SimpleKey = std::tuple<LieType, GradingElement, Weight>;

SimpleKey simple_key(const FactorSpec& f) {
  auto [E, mu] = canonical_pair(f.type, f.E, f.mu);
  return {f.type, E, mu};
}

// B2 and C2 are the same algebra with the two nodes exchanged.
std::optional<FactorSpec> low_rank_alias(const FactorSpec& f) {
  if (f.type.rank != 2 || (f.type.family != Family::B && f.type.family != Family::C)) return std::nullopt;
  const std::vector<int> swap{1, 0};
  const LieType other{f.type.family == Family::B ? Family::C : Family::B, 2};
  return FactorSpec{other, GradingElement(permute_nodes(f.E.coeffs, swap)), Weight(permute_nodes(f.mu.coords, swap))};
}

std::string slice_of(const HodgeTuple& t) {
  if (t.level == 1) return "thm2.1";
  if (t.span == 1) return "prop3.1";
  if (t.span == 2) return "prop3.3";
  return "prop3.5";
}

std::string slice_of(const ProductTuple& t) {
  if (t.factors.size() == 3) return "prop3.11";
  std::vector<Rational> s = t.factor_spans;
  std::sort(s.begin(), s.end());
  return s[1] == 1 ? "prop3.7" : "prop3.9";
}

}  // namespace

std::size_t RowResult::mismatch_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& i) { return !i.matches(); }));
}

bool RowResult::allowlisted() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const InstanceResult& i) { return i.matches() || i.allowlisted; });
}

bool ReconciliationReport::clean() const {
  return std::all_of(mismatches.begin(), mismatches.end(), [](const RowResult& r) { return r.allowlisted(); });
}

std::vector<const RowResult*> ReconciliationReport::rows() const {
  std::vector<const RowResult*> out;
  for (const auto* list : {&matches, &mismatches, &paper_only})
    for (const auto& r : *list) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const RowResult* a, const RowResult* b) {
    return std::make_pair(table_rank(a->row.table), a->row.item) < std::make_pair(table_rank(b->row.table), b->row.item);
  });
  return out;
}

std::string real_form_label(LieType type, const RealFormDescriptor& rf) {
  if (rf.name) return *rf.name;
  std::string s = type.name() + "{";
  for (std::size_t i = 0; i < rf.painted.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rf.painted[i] + 1);
  }
  return s + "}";
}

std::vector<InstanceResult> instantiate(const ExpectedRow& row, int rank_bound) {
  std::vector<InstanceResult> out;
  std::vector<std::pair<std::string, long>> params;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    ExprEnv env = make_env(params, rank_bound);
    if (k < row.params.size()) {
      const ParamRange& p = row.params[k];
      const long lo = evaluate_int(p.lo, env);
      const long hi = evaluate_int(p.hi, env);
      for (long v = lo; v <= hi; ++v) {
        params.emplace_back(p.name, v);
        rec(k + 1);
        params.pop_back();
      }
      return;
    }
    if (!row.when.empty() && !evaluate_bool(row.when, env)) return;
    InstanceResult inst;
    inst.params = params;
    for (const auto& ft : row.factors) {
      auto f = build_factor(ft, env, rank_bound);
      if (!f) return;
      inst.factors.push_back(std::move(*f));
    }
    inst.algebra = product_name(inst.factors);
    for (const auto& e : row.h) inst.expected_h.push_back(evaluate_number(e, env));
    inst.expected_c = evaluate_number(row.c, env);
    inst.expected_reality = evaluate_string(row.reality, env);
    if (row.reality_ss) inst.expected_reality_ss = evaluate_string(*row.reality_ss, env);
    if (row.real_form) inst.expected_real_form = expand_template(*row.real_form, env);
    out.push_back(std::move(inst));
  };
  rec(0);
  return out;
}

ReconciliationReport verify_paper(const VerifyOptions& options) {
  if (options.expected_file) return verify_paper(load_expected_file(*options.expected_file), options);
  return verify_paper(embedded_expected(), options);
}

ReconciliationReport verify_paper(const ExpectedTable& table, const VerifyOptions& options) {
  const auto& ids = known_tables();
  if (options.scope != "all" && std::find(ids.begin(), ids.end(), options.scope) == ids.end())
    throw ConfigError("unknown scope '" + options.scope + "'");
  if (options.max_rank < 1 || options.product_max_rank < 1) throw DomainError("rank bounds must be at least 1");
  auto in_scope = [&](const std::string& t) { return options.scope == "all" || options.scope == t; };

  ReconciliationReport report;
  report.scope = options.scope;
  report.max_rank = options.max_rank;
  report.product_max_rank = options.product_max_rank;

  WeightCache cache;
  std::map<SimpleKey, std::string> simple_keys;
  std::map<std::vector<FactorSpec>, std::string> product_keys;

  for (const ExpectedRow& row : table.rows) {
    if (!in_scope(row.table)) continue;
    const int bound = is_product_table(row.table) ? options.product_max_rank : options.max_rank;
    RowResult rr;
    rr.row = row;
    try {
      rr.instances = instantiate(row, bound);
      for (auto& inst : rr.instances) {
        compute(inst, row.level, cache, options.weights);
        apply_allowlist(inst, row, table.allow, bound);
        const std::string label = row.table + " item " + std::to_string(row.item);
        if (inst.factors.size() == 1) {
          simple_keys.emplace(simple_key(inst.factors[0]), label);
        } else {
          product_keys.emplace(canonicalize_factors(inst.factors), label);
        }
      }
    } catch (const ParseError& e) {
      throw ConfigError(row.table + " item " + std::to_string(row.item) + ": " + e.what());
    }
    for (const auto& inst : rr.instances)
      for (const auto& d : inst.diffs)
        if (std::find(rr.diffs.begin(), rr.diffs.end(), d) == rr.diffs.end()) rr.diffs.push_back(d);
    if (rr.instances.empty()) {
      report.paper_only.push_back(std::move(rr));
    } else if (rr.mismatch_count() == 0) {
      report.matches.push_back(std::move(rr));
    } else {
      report.mismatches.push_back(std::move(rr));
    }
  }

  if (options.include_computed_only) {
    auto run = [&](int level, bool products) {
      SearchConfig cfg;
      cfg.max_rank = options.max_rank;
      cfg.level = level;
      cfg.include_products = products;
      cfg.product_max_rank = options.product_max_rank;
      cfg.dedupe_automorphisms = true;
      cfg.threads = options.threads;
      cfg.weights = options.weights;
      const Classification c = enumerate_level(cfg);
      for (const auto& t : c.simple) {
        const std::string slice = slice_of(t);
        if (!in_scope(slice) || simple_keys.count({t.type, t.E, t.mu})) continue;
        ComputedOnly co{slice, t, {}};
        if (auto a = low_rank_alias({t.type, t.E, t.mu})) {
          auto it = simple_keys.find(simple_key(*a));
          if (it != simple_keys.end()) co.alias_of = it->second;
        }
        report.computed_only.push_back(std::move(co));
      }
      for (const auto& p : c.products) {
        const std::string slice = slice_of(p);
        if (!in_scope(slice) || product_keys.count(p.factors)) continue;
        ComputedOnly co{slice, p, {}};
        std::vector<FactorSpec> aliased = p.factors;
        bool changed = false;
        for (auto& f : aliased) {
          if (auto a = low_rank_alias(f)) {
            f = *a;
            changed = true;
          }
        }
        if (changed) {
          auto it = product_keys.find(canonicalize_factors(aliased));
          if (it != product_keys.end()) co.alias_of = it->second;
        }
        report.computed_only.push_back(std::move(co));
      }
    };
    if (in_scope("thm2.1")) run(1, false);
    const bool simple3 = in_scope("prop3.1") || in_scope("prop3.3") || in_scope("prop3.5");
    const bool prod3 = in_scope("prop3.7") || in_scope("prop3.9") || in_scope("prop3.11");
    if (simple3 || prod3) run(3, prod3);
    std::stable_sort(report.computed_only.begin(), report.computed_only.end(),
                     [](const ComputedOnly& a, const ComputedOnly& b) { return table_rank(a.table) < table_rank(b.table); });
  }

  auto by_item = [](const RowResult& a, const RowResult& b) {
    return std::make_pair(table_rank(a.row.table), a.row.item) < std::make_pair(table_rank(b.row.table), b.row.item);
  };
  std::sort(report.matches.begin(), report.matches.end(), by_item);
  std::sort(report.mismatches.begin(), report.mismatches.end(), by_item);
  std::sort(report.paper_only.begin(), report.paper_only.end(), by_item);
  return report;
}

}  // namespace hodgerep
