#include "hodgerep/products.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "hodgerep/errors.hpp"

namespace hodgerep {

EigenDecomp convolve_eigen(const std::vector<EigenDecomp>& decomps) {
  std::map<Rational, std::uint64_t, std::greater<>> acc{{Rational(0), 1}};
  for (const auto& d : decomps) {
    std::map<Rational, std::uint64_t, std::greater<>> next;
    for (const auto& [a, m] : acc)
      for (const auto& [b, n] : d.levels) next[a + b] += m * n;
    acc = std::move(next);
  }
  EigenDecomp out;
  for (const auto& [v, d] : acc)
    if (d != 0) out.levels.emplace_back(v, d);
  return out;
}

Reality tensor_reality(const std::vector<Reality>& types) {
  int quaternionic = 0;
  for (Reality r : types) {
    if (r == Reality::complex) return Reality::complex;
    if (r == Reality::quaternionic) ++quaternionic;
  }
  return quaternionic % 2 == 1 ? Reality::quaternionic : Reality::real;
}

bool is_admissible_pattern(std::vector<Rational> spans) {
  std::sort(spans.begin(), spans.end());
  const std::vector<std::vector<int>> allowed{{1, 1}, {1, 2}, {1, 1, 1}};
  for (const auto& p : allowed) {
    if (p.size() != spans.size()) continue;
    if (std::equal(p.begin(), p.end(), spans.begin(), [](int a, const Rational& b) { return b == a; })) return true;
  }
  return false;
}

ProductAnalysis analyze_product(const std::vector<FactorSpec>& factors, const std::vector<EigenDecomp>& eigens) {
  if (factors.size() < 2 || factors.size() > 3) throw DomainError("products need 2 or 3 simple factors");
  if (eigens.size() != factors.size()) throw DomainError("one eigen decomposition per factor is required");

  ProductAnalysis a;
  ProductTuple& t = a.tuple;
  t.factors = factors;
  t.span = 0;
  t.mu_of_E = 0;
  bool extremal = true;
  for (const auto& f : factors) {
    const Rational s = level(f.type, f.mu, f.E);
    t.factor_spans.push_back(s);
    t.span += s;
    t.mu_of_E += mu_of_E(f.type, f.mu, f.E);
    t.factor_realities.push_back(reality_type(f.type, f.mu, f.E));
    t.real_forms.push_back(real_form(f.type, f.E));
    extremal = extremal && extremal_dim_is_one(f.mu, f.E);
  }
  t.reality_ss = tensor_reality(t.factor_realities);
  t.reality = effective_reality(t.reality_ss, t.span, t.level);
  t.c = center_charge(t.level, t.mu_of_E, t.reality);
  t.eigen = convolve_eigen(eigens);

  std::string why;
  auto h = assemble_hodge(t.eigen, t.reality, t.c, t.level, &why);
  if (h) t.hodge = *h;
  if (!is_admissible_pattern(t.factor_spans)) {
    a.reason = "factor spans do not form one of the patterns (1,1), (1,2), (1,1,1)";
  } else if (!extremal) {
    a.reason = "a factor has a top eigenspace of dimension greater than 1";
  } else if (!h) {
    a.reason = why;
  } else if (!t.hodge.is_cy3()) {
    a.reason = "Hodge vector is not of the form (1,a,a,1)";
  } else {
    a.valid = true;
  }
  return a;
}

ProductAnalysis analyze_product(const std::vector<FactorSpec>& factors, const WeightSystemOptions& options) {
  std::vector<EigenDecomp> eigens;
  for (const auto& f : factors) eigens.push_back(eigenspace_dims(f.type, f.mu, f.E, options));
  return analyze_product(factors, eigens);
}

ProductTuple combine(const std::vector<FactorSpec>& factors, const WeightSystemOptions& options) {
  ProductAnalysis a = analyze_product(factors, options);
  if (a.valid) return std::move(a.tuple);
  if (!is_admissible_pattern(a.tuple.factor_spans)) throw DomainError(a.reason);
  for (const auto& f : factors)
    if (!extremal_dim_is_one(f.mu, f.E)) throw DomainError(a.reason);
  throw ShapeError(a.reason, a.tuple.hodge.dims);
}

std::vector<FactorSpec> canonical_factor_order(std::vector<FactorSpec> factors) {
  std::sort(factors.begin(), factors.end(), [](const FactorSpec& a, const FactorSpec& b) {
    return std::tie(a.type, a.mu, a.E) < std::tie(b.type, b.mu, b.E);
  });
  return factors;
}

std::string product_name(const std::vector<FactorSpec>& factors) {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "x";
    s += f.type.name();
  }
  return s;
}

}  // namespace hodgerep
