#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "hodgerep/classify.hpp"
#include "hodgerep/errors.hpp"
#include "hodgerep/serialize.hpp"
#include "hodgerep/verify.hpp"

namespace py = pybind11;
using namespace hodgerep;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::object fraction(const std::string& s) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(s);
}

GradingElement grading(LieType type, const std::vector<int>& nodes) {
  std::vector<int> zero_based;
  for (int n : nodes) {
    if (n < 1 || n > type.rank) throw DomainError("node " + std::to_string(n) + " out of range for " + type.name());
    zero_based.push_back(n - 1);
  }
  return GradingElement::from_nodes(type.rank, zero_based);
}

py::dict record_dict(const OutputRecord& r) {
  py::dict d;
  d["algebra"] = r.algebra;
  if (r.E.size() == 1) {
    d["E"] = r.E[0];
    d["mu"] = r.mu[0];
  } else {
    d["E"] = r.E;
    d["mu"] = r.mu;
  }
  d["c"] = fraction(r.c);
  d["level"] = r.level;
  d["span"] = fraction(r.span);
  d["reality"] = r.reality;
  d["reality_ss"] = r.reality_ss;
  d["hodge"] = py::tuple(py::cast(r.hodge));
  d["real_form"] = r.real_form;
  d["canonical"] = r.canonical;
  return d;
}

py::list eigen_list(const EigenDecomp& e) {
  py::list out;
  for (const auto& [v, d] : e.levels) out.append(py::make_tuple(fraction(v), d));
  return out;
}

py::dict analyze_py(const std::string& algebra, const std::vector<int>& E, const std::vector<int>& mu,
                    std::optional<int> level_n) {
  const LieType type = LieType::parse(algebra);
  const GradingElement g = grading(type, E);
  const Weight w(mu);
  const int n = level_n.value_or(level(type, w, g) == 1 ? 1 : 3);
  const Analysis a = analyze(type, w, g, n);
  py::dict d = record_dict(to_record(a.tuple));
  d["eigenspaces"] = eigen_list(a.tuple.eigen);
  d["valid"] = a.valid;
  d["reason"] = a.reason;
  return d;
}

py::dict analyze_product_py(const std::vector<std::tuple<std::string, std::vector<int>, std::vector<int>>>& factors) {
  std::vector<FactorSpec> specs;
  for (const auto& [name, E, mu] : factors) {
    const LieType type = LieType::parse(name);
    specs.push_back({type, grading(type, E), Weight(mu)});
  }
  const ProductAnalysis a = analyze_product(specs);
  py::dict d = record_dict(to_record(a.tuple));
  d["eigenspaces"] = eigen_list(a.tuple.eigen);
  d["valid"] = a.valid;
  d["reason"] = a.reason;
  return d;
}

py::list classify_py(int level_n, int max_rank, const std::string& families, bool products, int product_max_rank,
                     int max_weight_sum, bool dedupe, unsigned threads) {
  SearchConfig cfg;
  cfg.level = level_n;
  cfg.max_rank = max_rank;
  cfg.families.clear();
  for (char ch : families) {
    bool ok = false;
    for (Family f : kAllFamilies)
      if (static_cast<char>(f) == ch) {
        cfg.families.push_back(f);
        ok = true;
      }
    if (!ok) throw ParseError(std::string("unknown family '") + ch + "'");
  }
  cfg.include_products = products;
  cfg.product_max_rank = product_max_rank;
  cfg.max_weight_coord_sum = max_weight_sum;
  cfg.dedupe_automorphisms = dedupe;
  cfg.threads = threads;
  Classification c;
  {
    py::gil_scoped_release release;
    c = enumerate_level(cfg);
  }
  py::list out;
  for (const auto& t : c.simple) out.append(record_dict(to_record(t)));
  for (const auto& p : c.products) out.append(record_dict(to_record(p)));
  return out;
}

py::object verify_py(const std::string& scope, int max_rank, int product_max_rank, bool computed_only,
                     std::optional<std::string> expected_file) {
  VerifyOptions opts;
  opts.scope = scope;
  opts.max_rank = max_rank;
  opts.product_max_rank = product_max_rank;
  opts.include_computed_only = computed_only;
  opts.expected_file = std::move(expected_file);
  std::string text;
  {
    py::gil_scoped_release release;
    text = render_report(verify_paper(opts), Format::json);
  }
  return py::module_::import("json").attr("loads")(text);
}

py::dict weight_system_py(const std::string& algebra, const std::vector<int>& mu) {
  const WeightSystem ws = weight_system(LieType::parse(algebra), Weight(mu));
  std::vector<std::pair<Weight, std::uint64_t>> items(ws.multiplicities.begin(), ws.multiplicities.end());
  std::sort(items.begin(), items.end());
  py::dict d;
  for (const auto& [w, m] : items) d[py::tuple(py::cast(w.coords))] = m;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of level-1 and level-3 Hodge representations";

  py::register_exception<InvalidTypeError>(m, "InvalidTypeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_RuntimeError);

  m.def("analyze", &analyze_py, py::arg("algebra"), py::arg("E"), py::arg("mu"), py::arg("level") = py::none(),
        "Level, reality, center charge, eigenspaces and Hodge numbers of one candidate; nodes are 1-based.");
  m.def("analyze_product", &analyze_product_py, py::arg("factors"),
        "Same for a product given as [(algebra, E, mu), ...].");
  m.def("classify", &classify_py, py::arg("level") = 3, py::arg("max_rank") = 8, py::arg("families") = "ABCDEFG",
        py::arg("products") = false, py::arg("product_max_rank") = 0, py::arg("max_weight_sum") = 3,
        py::arg("dedupe") = false, py::arg("threads") = 0u);
  m.def("verify_paper", &verify_py, py::arg("scope") = "all", py::arg("max_rank") = 8,
        py::arg("product_max_rank") = 4, py::arg("computed_only") = true, py::arg("expected_file") = py::none(),
        "Reconciliation report as a dict (the json rendering).");
  m.def("weight_system", &weight_system_py, py::arg("algebra"), py::arg("mu"),
        "Weight multiplicities keyed by fundamental coordinates.");
  m.def(
      "weyl_dim", [](const std::string& algebra, const std::vector<int>& mu) {
        return py::int_(py::str(weyl_dim(LieType::parse(algebra), Weight(mu)).get_str()));
      },
      py::arg("algebra"), py::arg("mu"));
  m.def(
      "mu_plus_mu_star", [](const std::string& algebra, const std::vector<int>& mu) {
        py::list out;
        for (const auto& q : weight_to_root_coords(LieType::parse(algebra), Weight(mu) + dual_weight(LieType::parse(algebra), Weight(mu))))
          out.append(fraction(q));
        return out;
      },
      py::arg("algebra"), py::arg("mu"), "mu + mu* in simple-root coordinates.");
  m.def(
      "canonicalize", [](const std::string& algebra, const std::vector<int>& E, const std::vector<int>& mu) {
        const LieType type = LieType::parse(algebra);
        auto [g, w] = canonical_pair(type, grading(type, E), Weight(mu));
        std::vector<int> nodes;
        for (int i : g.support()) nodes.push_back(i + 1);
        return py::make_tuple(nodes, w.coords);
      },
      py::arg("algebra"), py::arg("E"), py::arg("mu"));
}
