#include "hodgerep/repweights.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "hodgerep/errors.hpp"

namespace hodgerep {

namespace {

void require_dominant(LieType type, const Weight& mu) {
  if (mu.rank() != type.rank) throw DomainError("weight " + mu.to_string() + " has wrong length for " + type.name());
  if (!mu.is_dominant()) throw DomainError("highest weight " + mu.to_string() + " is not dominant");
}

Weight reflect(const RootSystemData& rs, const Weight& w, std::size_t i) {
  Weight out = w;
  const int c = w[i];
  if (c == 0) return out;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out[k] -= c * rs.cartan[i][k];
  return out;
}

}  // namespace

std::uint64_t WeightSystem::multiplicity(const Weight& w) const {
  auto it = multiplicities.find(w);
  return it == multiplicities.end() ? 0 : it->second;
}

BigInt weyl_dim(LieType type, const Weight& mu) {
  require_dominant(type, mu);
  const auto& rs = root_system(type);
  const Weight shifted = mu + rs.weyl_vector;
  BigInt num = 1, den = 1;
  for (const auto& beta : rs.positive_roots) {
    num *= BigInt(static_cast<long>(rs.pair_with_root(shifted, beta)));
    den *= BigInt(static_cast<long>(rs.pair_with_root(rs.weyl_vector, beta)));
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension is not integral for " + type.name() + " " + mu.to_string());
  return num / den;
}

Weight dominant_conjugate(LieType type, const Weight& w) {
  const auto& rs = root_system(type);
  Weight cur = w;
  for (;;) {
    auto it = std::find_if(cur.coords.begin(), cur.coords.end(), [](int c) { return c < 0; });
    if (it == cur.coords.end()) return cur;
    cur = reflect(rs, cur, static_cast<std::size_t>(it - cur.coords.begin()));
  }
}

std::vector<Weight> weyl_orbit(LieType type, const Weight& w) {
  const auto& rs = root_system(type);
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < cur.coords.size(); ++i) {
      if (cur[i] == 0) continue;
      Weight next = reflect(rs, cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

WeightSystem weight_system(LieType type, const Weight& mu, const WeightSystemOptions& options) {
  require_dominant(type, mu);
  const BigInt dim = weyl_dim(type, mu);
  if (dim > BigInt(std::to_string(options.max_dim)))
    throw ResourceError(type.name() + " " + mu.to_string() + " exceeds the weight-system size guard", dim.get_str());

  const auto& rs = root_system(type);
  std::vector<int> heights;
  for (const auto& beta : rs.positive_roots) {
    int h = 0;
    for (int c : beta) h += c;
    heights.push_back(h);
  }

  // Dominant weights below mu: closed under subtracting positive roots within the dominant chamber.
  std::map<Weight, int> depth{{mu, 0}};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight lambda = std::move(queue.front());
    queue.pop_front();
    const int d = depth[lambda];
    for (std::size_t b = 0; b < rs.positive_roots_fundamental.size(); ++b) {
      Weight nu = lambda - rs.positive_roots_fundamental[b];
      if (!nu.is_dominant() || depth.count(nu)) continue;
      depth.emplace(nu, d + heights[b]);
      queue.push_back(std::move(nu));
    }
  }
  std::vector<std::pair<int, Weight>> order;
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());

  const Weight rho = rs.weyl_vector;
  const Weight mu_rho = mu + rho;
  const __int128 top_norm = rs.scaled_inner(mu_rho, mu_rho);

  WeightSystem ws;
  ws.type = type;
  ws.highest = mu;
  std::unordered_map<Weight, std::uint64_t, WeightHash> dominant_mult;
  for (const auto& [d, lambda] : order) {
    std::uint64_t m = 1;
    if (d > 0) {
      __int128 acc = 0;
      for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
        const Weight& beta_w = rs.positive_roots_fundamental[b];
        Weight up = lambda;
        for (;;) {
          up += beta_w;
          auto it = dominant_mult.find(dominant_conjugate(type, up));
          if (it == dominant_mult.end()) break;
          acc += static_cast<__int128>(rs.pair_with_root(up, rs.positive_roots[b])) * static_cast<__int128>(it->second);
        }
      }
      const Weight lr = lambda + rho;
      const __int128 denom = top_norm - rs.scaled_inner(lr, lr);
      const __int128 numer = 2 * acc * rs.form_scale;
      if (denom <= 0 || numer % denom != 0)
        throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " + lambda.to_string());
      m = static_cast<std::uint64_t>(numer / denom);
    }
    if (m == 0) continue;
    dominant_mult.emplace(lambda, m);
    ws.dominant.emplace_back(lambda, m);
  }

  for (const auto& [lambda, m] : ws.dominant) {
    for (auto& w : weyl_orbit(type, lambda)) {
      ws.dimension += m;
      ws.multiplicities.emplace(std::move(w), m);
    }
  }
  if (BigInt(std::to_string(ws.dimension)) != dim)
    throw ConsistencyError("multiplicities of " + type.name() + " " + mu.to_string() + " do not sum to the Weyl dimension");
  return ws;
}

}  // namespace hodgerep
