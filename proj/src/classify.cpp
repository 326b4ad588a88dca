#include "hodgerep/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <tuple>

#include "hodgerep/errors.hpp"

namespace hodgerep {

namespace {

using SparseKey = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;

SparseKey sparse_key(const GradingElement& E, const Weight& mu) {
  SparseKey k;
  k.first = E.support();
  for (int i : mu.support()) k.second.emplace_back(i, mu[static_cast<std::size_t>(i)]);
  return k;
}

// Runs fn(i) for i in [0, n) on a small pool; the first failing index (lowest) is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Dominant weights with 1 <= coordinate sum <= bound, in lexicographic order.
std::vector<Weight> small_dominant_weights(int rank, int bound) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      if (!w.is_zero()) out.push_back(w);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w[static_cast<std::size_t>(pos)] = c;
      rec(pos + 1, left - c);
    }
    w[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

// P[i][j] = j-th simple-root coordinate of omega_i + omega_i*, always an integer.
std::vector<std::vector<long>> level_matrix(LieType type) {
  const int r = type.rank;
  std::vector<std::vector<long>> p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const Weight w = Weight::fundamental(r, i);
    for (const Rational& q : weight_to_root_coords(type, w + dual_weight(type, w))) {
      if (!is_integer(q)) throw ConsistencyError("mu + mu* is not in the root lattice for " + type.name());
      p[static_cast<std::size_t>(i)].push_back(q.get_num().get_si());
    }
  }
  return p;
}

struct Candidate {
  LieType type;
  Weight mu;
  std::vector<GradingElement> gradings;
};

// All (type, mu, E) with the requested spans, grouped by (type, mu) so each weight system is built once.
std::vector<Candidate> collect(const std::vector<Family>& families, int rank_bound, int coord_bound,
                               const std::function<bool(long span, bool extremal)>& keep) {
  std::vector<Candidate> out;
  for (Family f : families) {
    const int hi = max_rank(f) == 0 ? rank_bound : std::min(rank_bound, max_rank(f));
    for (int r = min_rank(f); r <= hi; ++r) {
      const LieType type{f, r};
      const auto p = level_matrix(type);
      for (const Weight& mu : small_dominant_weights(r, coord_bound)) {
        Candidate c{type, mu, {}};
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
          std::vector<int> coeffs(static_cast<std::size_t>(r));
          for (int j = 0; j < r; ++j) coeffs[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
          GradingElement E(std::move(coeffs));
          long span = 0;
          for (int i = 0; i < r; ++i) {
            if (mu[static_cast<std::size_t>(i)] == 0) continue;
            long row = 0;
            for (int j : E.support()) row += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            span += mu[static_cast<std::size_t>(i)] * row;
          }
          if (keep(span, extremal_dim_is_one(mu, E))) c.gradings.push_back(std::move(E));
        }
        if (!c.gradings.empty()) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

struct FactorData {
  FactorSpec spec;
  EigenDecomp eigen;
  Rational span;
};

WeightSystem build_weights(const Candidate& c, const WeightSystemOptions& options) {
  try {
    return weight_system(c.type, c.mu, options);
  } catch (const ResourceError& e) {
    throw ResourceError("candidate " + c.type.name() + " mu=" + c.mu.to_string() + ": " + e.what(), e.dimension());
  }
}

}  // namespace

void SearchConfig::validate() const {
  if (max_rank < 1) throw DomainError("max_rank must be at least 1");
  if (level != 1 && level != 3) throw DomainError("level must be 1 or 3");
  if (max_weight_coord_sum < 1) throw DomainError("max_weight_coord_sum must be at least 1");
  if (product_max_rank < 0) throw DomainError("product_max_rank must be nonnegative");
  if (include_products && level != 3) throw DomainError("products are only classified at level 3");
}

std::pair<GradingElement, Weight> canonical_pair(LieType type, const GradingElement& E, const Weight& mu) {
  std::pair<GradingElement, Weight> best{E, mu};
  SparseKey best_key = sparse_key(E, mu);
  for (const auto& perm : diagram_automorphisms(type)) {
    GradingElement e2(permute_nodes(E.coeffs, perm));
    Weight m2(permute_nodes(mu.coords, perm));
    SparseKey k = sparse_key(e2, m2);
    if (k < best_key) {
      best_key = std::move(k);
      best = {std::move(e2), std::move(m2)};
    }
  }
  return best;
}

HodgeTuple canonicalize(const HodgeTuple& t) {
  HodgeTuple out = t;
  auto [E, mu] = canonical_pair(t.type, t.E, t.mu);
  out.E = std::move(E);
  out.mu = std::move(mu);
  out.real_form = real_form(out.type, out.E);
  out.canonical = true;
  return out;
}

std::vector<FactorSpec> canonicalize_factors(std::vector<FactorSpec> factors) {
  for (auto& f : factors) {
    auto [E, mu] = canonical_pair(f.type, f.E, f.mu);
    f.E = std::move(E);
    f.mu = std::move(mu);
  }
  return canonical_factor_order(std::move(factors));
}

bool simple_less(const HodgeTuple& a, const HodgeTuple& b) {
  return std::forward_as_tuple(a.level, a.type, sparse_key(a.E, a.mu)) <
         std::forward_as_tuple(b.level, b.type, sparse_key(b.E, b.mu));
}

bool product_less(const ProductTuple& a, const ProductTuple& b) {
  auto key = [](const ProductTuple& t) {
    std::vector<std::pair<LieType, SparseKey>> k;
    for (const auto& f : t.factors) k.emplace_back(f.type, sparse_key(f.E, f.mu));
    return std::make_pair(t.factors.size(), k);
  };
  return key(a) < key(b);
}

Classification enumerate_level(const SearchConfig& config) {
  config.validate();
  const int n = config.level;
  Classification result;

  auto simple_keep = [n](long span, bool extremal) {
    if (n == 1) return span == 1;
    return extremal && span >= 1 && span <= 3;
  };
  const auto candidates = collect(config.families, config.max_rank, config.max_weight_coord_sum, simple_keep);

  std::vector<std::vector<HodgeTuple>> found(candidates.size());
  parallel_for(candidates.size(), config.threads, [&](std::size_t idx) {
    const Candidate& c = candidates[idx];
    // A span-3 candidate survives only when real, which needs a self-dual weight.
    std::vector<const GradingElement*> todo;
    for (const auto& E : c.gradings) {
      if (n == 3 && level(c.type, c.mu, E) == 3 && reality_type(c.type, c.mu, E) != Reality::real) continue;
      todo.push_back(&E);
    }
    if (todo.empty()) return;
    const WeightSystem ws = build_weights(c, config.weights);
    for (const GradingElement* E : todo) {
      Analysis a = analyze(ws, *E, n);
      if (!a.valid) continue;
      a.tuple.canonical = canonical_pair(c.type, a.tuple.E, a.tuple.mu) == std::make_pair(a.tuple.E, a.tuple.mu);
      if (config.dedupe_automorphisms && !a.tuple.canonical) continue;
      found[idx].push_back(std::move(a.tuple));
    }
  });
  for (auto& v : found)
    for (auto& t : v) result.simple.push_back(std::move(t));
  std::sort(result.simple.begin(), result.simple.end(), simple_less);

  if (config.include_products) {
    const int pr = config.product_max_rank == 0 ? config.max_rank : config.product_max_rank;
    auto factor_keep = [](long span, bool extremal) { return extremal && (span == 1 || span == 2); };
    const auto fcands = collect(config.families, pr, config.max_weight_coord_sum, factor_keep);
    std::vector<std::vector<FactorData>> fdata(fcands.size());
    parallel_for(fcands.size(), config.threads, [&](std::size_t idx) {
      const Candidate& c = fcands[idx];
      const WeightSystem ws = build_weights(c, config.weights);
      for (const auto& E : c.gradings)
        fdata[idx].push_back({FactorSpec{c.type, E, c.mu}, eigenspace_dims(ws, E), level(c.type, c.mu, E)});
    });
    std::vector<FactorData> ones, twos;
    for (auto& v : fdata)
      for (auto& f : v) (f.span == 1 ? ones : twos).push_back(std::move(f));
    auto by_spec = [](const FactorData& a, const FactorData& b) {
      return std::tie(a.spec.type, a.spec.mu, a.spec.E) < std::tie(b.spec.type, b.spec.mu, b.spec.E);
    };
    std::sort(ones.begin(), ones.end(), by_spec);
    std::sort(twos.begin(), twos.end(), by_spec);

    std::vector<std::vector<const FactorData*>> combos;
    for (std::size_t i = 0; i < ones.size(); ++i) {
      for (std::size_t j = i; j < ones.size(); ++j) {
        combos.push_back({&ones[i], &ones[j]});
        for (std::size_t k = j; k < ones.size(); ++k) combos.push_back({&ones[i], &ones[j], &ones[k]});
      }
      for (const auto& t : twos) combos.push_back({&ones[i], &t});
    }
    std::vector<std::optional<ProductTuple>> pfound(combos.size());
    parallel_for(combos.size(), config.threads, [&](std::size_t idx) {
      std::vector<FactorData> parts;
      for (const FactorData* f : combos[idx]) parts.push_back(*f);
      std::sort(parts.begin(), parts.end(), by_spec);
      std::vector<FactorSpec> specs;
      std::vector<EigenDecomp> eigens;
      for (auto& p : parts) {
        specs.push_back(p.spec);
        eigens.push_back(p.eigen);
      }
      ProductAnalysis a = analyze_product(specs, eigens);
      if (!a.valid) return;
      a.tuple.canonical = canonicalize_factors(specs) == specs;
      if (config.dedupe_automorphisms && !a.tuple.canonical) return;
      pfound[idx] = std::move(a.tuple);
    });
    for (auto& p : pfound)
      if (p) result.products.push_back(std::move(*p));
    std::sort(result.products.begin(), result.products.end(), product_less);
  }
  return result;
}

}  // namespace hodgerep
