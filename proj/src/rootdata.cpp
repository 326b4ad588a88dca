#include "hodgerep/rootdata.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "hodgerep/errors.hpp"

namespace hodgerep {

// ---------------------------------------------------------------------------
// LieType / Weight basics
// ---------------------------------------------------------------------------

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("algebra must be a family letter followed by a rank: '" + std::string(text) + "'");
  const char letter = text[0];
  if (letter < 'A' || letter > 'G') throw ParseError("unknown family '" + std::string(1, letter) + "'");
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') throw ParseError("bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 1000) throw ParseError("rank too large in '" + std::string(text) + "'");
  }
  LieType t{static_cast<Family>(letter), rank};
  validate(t);
  return t;
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank(Family f) {
  switch (f) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return 0;
  }
}

bool is_valid(LieType t) {
  if (t.rank < min_rank(t.family)) return false;
  const int hi = max_rank(t.family);
  return hi == 0 || t.rank <= hi;
}

void validate(LieType t) {
  if (!is_valid(t)) throw InvalidTypeError("rank out of bounds for type " + t.name());
}

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.coords.at(static_cast<std::size_t>(node)) = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::vector<int> Weight::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

int Weight::coord_sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& c : w.coords) c = -c;
  return w;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Catalog construction
// ---------------------------------------------------------------------------

namespace {

// Gram matrix (alpha_i, alpha_j) of the simple roots, short roots of squared length 2.
IntMatrix simple_root_gram(LieType t) {
  const int r = t.rank;
  const auto n = static_cast<std::size_t>(r);
  IntMatrix g(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 4;
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1, -2);
      break;
    case Family::C:
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, -1);
      edge(r - 2, r - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1, -1);
      edge(r - 3, r - 1, -1);
      break;
    case Family::E: {
      const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (const auto& e : edges)
        if (e[0] < r && e[1] < r) edge(e[0], e[1], -1);
      break;
    }
    case Family::F:
      g[0][0] = g[1][1] = 4;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case Family::G:
      g[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return g;
}

// String algorithm: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
// largest k with beta - k alpha_i a root.
std::vector<std::vector<int>> generate_positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (std::vector<int> down = beta;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& b : layer) known.insert(b);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

std::unique_ptr<RootSystemData> build(LieType t) {
  auto data = std::make_unique<RootSystemData>();
  data->type = t;
  const auto n = static_cast<std::size_t>(t.rank);
  const IntMatrix gram = simple_root_gram(t);

  data->symmetrizer.resize(n);
  for (std::size_t i = 0; i < n; ++i) data->symmetrizer[i] = gram[i][i] / 2;

  data->cartan.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data->cartan[i][j] = 2 * gram[i][j] / gram[j][j];

  RationalMatrix c(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = data->cartan[i][j];
  data->inverse_cartan = invert(c);

  data->positive_roots = generate_positive_roots(data->cartan);
  for (const auto& beta : data->positive_roots) {
    Weight w = Weight::zero(t.rank);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) w[k] += beta[j] * data->cartan[j][k];
    data->positive_roots_fundamental.push_back(std::move(w));
  }

  Weight twice_rho = Weight::zero(t.rank);
  for (const auto& w : data->positive_roots_fundamental) twice_rho += w;
  data->weyl_vector = Weight::zero(t.rank);
  for (std::size_t i = 0; i < n; ++i) {
    if (twice_rho[i] % 2 != 0) throw ConsistencyError("half-sum of positive roots is not integral");
    data->weyl_vector[i] = twice_rho[i] / 2;
  }

  // (omega_i, omega_j) = rootcoord_i(omega_j) * d_i = inverse_cartan[j][i] * d_i.
  RationalMatrix g(n, RationalVector(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = data->inverse_cartan[j][i] * data->symmetrizer[i];
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), g[i][j].get_den_mpz_t());
    }
  data->form_scale = scale.get_si();
  data->scaled_gram.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = g[i][j] * scale;
      data->scaled_gram[i][j] = v.get_num().get_si();
    }
  return data;
}

}  // namespace

std::int64_t RootSystemData::scaled_inner(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  const auto n = static_cast<std::size_t>(rank());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += scaled_gram[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

std::int64_t RootSystemData::pair_with_root(const Weight& lambda, const std::vector<int>& beta) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    s += static_cast<std::int64_t>(lambda[j]) * beta[j] * symmetrizer[j];
  return s;
}

const RootSystemData& root_system(LieType type) {
  validate(type);
  static std::mutex mutex;
  static std::map<LieType, std::unique_ptr<RootSystemData>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, build(type)).first;
  return *it->second;
}

int algebra_dimension(LieType t) {
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 2);
    case Family::B:
    case Family::C: return r * (2 * r + 1);
    case Family::D: return r * (2 * r - 1);
    case Family::E: return r == 6 ? 78 : r == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

RationalVector weight_to_root_coords(LieType type, const Weight& w) {
  const auto& rs = root_system(type);
  const auto n = static_cast<std::size_t>(type.rank);
  if (w.coords.size() != n) throw DomainError("weight length does not match rank of " + type.name());
  RationalVector out(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0) out[j] += rs.inverse_cartan[i][j] * w[i];
  return out;
}

RationalVector root_to_weight_coords(LieType type, const RationalVector& root_coords) {
  const auto& rs = root_system(type);
  const auto n = static_cast<std::size_t>(type.rank);
  RationalVector out(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out[k] += root_coords[j] * rs.cartan[j][k];
  return out;
}

// ---------------------------------------------------------------------------
// Duality and diagram symmetries
// ---------------------------------------------------------------------------

std::vector<int> dual_permutation(LieType type) {
  validate(type);
  const int r = type.rank;
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = r - 1 - i;
      break;
    case Family::D:
      if (r % 2 == 1) std::swap(perm[static_cast<std::size_t>(r - 2)], perm[static_cast<std::size_t>(r - 1)]);
      break;
    case Family::E:
      if (r == 6) {
        std::swap(perm[0], perm[5]);
        std::swap(perm[2], perm[4]);
      }
      break;
    default:
      break;
  }
  return perm;
}

Weight dual_weight(LieType type, const Weight& mu) {
  if (mu.rank() != type.rank) throw DomainError("weight length does not match rank of " + type.name());
  return Weight(permute_nodes(mu.coords, dual_permutation(type)));
}

bool is_self_dual(LieType type, const Weight& mu) { return dual_weight(type, mu) == mu; }

std::vector<std::vector<int>> diagram_automorphisms(LieType type) {
  validate(type);
  const int r = type.rank;
  std::vector<int> id(static_cast<std::size_t>(r));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  switch (type.family) {
    case Family::A:
      if (r >= 2) {
        std::vector<int> rev(id.rbegin(), id.rend());
        out.push_back(rev);
      }
      break;
    case Family::D:
      if (r == 4) {
        // Triality permutes the three outer nodes {0, 2, 3} around the center 1.
        std::vector<int> outer{0, 2, 3};
        std::vector<int> images = outer;
        std::sort(images.begin(), images.end());
        while (std::next_permutation(images.begin(), images.end())) {
          std::vector<int> p = id;
          for (std::size_t k = 0; k < 3; ++k) p[static_cast<std::size_t>(outer[k])] = images[k];
          out.push_back(p);
        }
      } else {
        std::vector<int> p = id;
        std::swap(p[static_cast<std::size_t>(r - 2)], p[static_cast<std::size_t>(r - 1)]);
        out.push_back(p);
      }
      break;
    case Family::E:
      if (r == 6) out.push_back(dual_permutation(type));
      break;
    default:
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tabulated closed forms for mu + mu* in simple-root coordinates
// ---------------------------------------------------------------------------

namespace {

// 1-based accumulation helper: acc[node - 1] += coeff.
struct RootAccumulator {
  RationalVector v;
  explicit RootAccumulator(int rank) : v(static_cast<std::size_t>(rank), Rational(0)) {}
  void add(int node, const Rational& coeff) { v[static_cast<std::size_t>(node - 1)] += coeff; }
  void add_row(const Rational& scale, std::initializer_list<int> row) {
    int node = 1;
    for (int c : row) add(node++, scale * c);
  }
};

RationalVector closed_form_a(int r, const Weight& mu) {
  RootAccumulator acc(r);
  for (int i = 1; i <= r; ++i) {
    const int coeff = mu[static_cast<std::size_t>(i - 1)];
    if (coeff == 0) continue;
    const int m = std::min(i, r + 1 - i);
    for (int l = 1; l <= m; ++l) acc.add(l, Rational(coeff * l));
    for (int k = m + 1; k <= r - m; ++k) acc.add(k, Rational(coeff * m));
    // The mirrored sum reaches node m itself when 2m = r + 1; that node is already counted.
    for (int l = 1; l <= m; ++l)
      if (r + 1 - l > m) acc.add(r + 1 - l, Rational(coeff * l));
  }
  return acc.v;
}

RationalVector closed_form_b(int r, const Weight& mu) {
  RootAccumulator acc(r);
  for (int i = 1; i <= r - 1; ++i) {
    const Rational s = 2 * mu[static_cast<std::size_t>(i - 1)];
    if (s == 0) continue;
    for (int j = 1; j < i; ++j) acc.add(j, s * j);
    for (int j = i; j <= r; ++j) acc.add(j, s * i);
  }
  const Rational s = mu[static_cast<std::size_t>(r - 1)];
  for (int j = 1; j <= r; ++j) acc.add(j, s * j);
  return acc.v;
}

RationalVector closed_form_c(int r, const Weight& mu) {
  RootAccumulator acc(r);
  for (int i = 1; i <= r; ++i) {
    const Rational s = 2 * mu[static_cast<std::size_t>(i - 1)];
    if (s == 0) continue;
    for (int j = 1; j < i; ++j) acc.add(j, s * j);
    for (int j = i; j <= r - 1; ++j) acc.add(j, s * i);
    acc.add(r, s * i / 2);
  }
  return acc.v;
}

RationalVector closed_form_d(int r, const Weight& mu) {
  RootAccumulator acc(r);
  for (int i = 1; i <= r - 2; ++i) {
    const Rational s = 2 * mu[static_cast<std::size_t>(i - 1)];
    if (s == 0) continue;
    for (int j = 1; j < i; ++j) acc.add(j, s * j);
    for (int j = i; j <= r - 2; ++j) acc.add(j, s * i);
    acc.add(r - 1, s * i / 2);
    acc.add(r, s * i / 2);
  }
  const int a = mu[static_cast<std::size_t>(r - 2)];
  const int b = mu[static_cast<std::size_t>(r - 1)];
  auto spinor_block = [&](const Rational& s, bool left_heavy) {
    for (int j = 1; j <= r - 2; ++j) acc.add(j, s * j);
    acc.add(r - 1, s * frac(left_heavy ? r : r - 2, 2));
    acc.add(r, s * frac(left_heavy ? r - 2 : r, 2));
  };
  if (r % 2 == 1) {
    spinor_block(frac(a + b, 2), true);
    spinor_block(frac(b + a, 2), false);
  } else {
    spinor_block(Rational(a), true);
    spinor_block(Rational(b), false);
  }
  return acc.v;
}

RationalVector closed_form_e(int r, const Weight& mu) {
  RootAccumulator acc(r);
  auto m = [&](int i) { return Rational(mu[static_cast<std::size_t>(i - 1)]); };
  if (r == 6) {
    acc.add_row(m(1) + m(6), {2, 2, 3, 4, 3, 2});
    acc.add_row(m(3) + m(5), {3, 4, 6, 8, 6, 3});
    acc.add_row(2 * m(2), {1, 2, 2, 3, 2, 1});
    acc.add_row(2 * m(4), {2, 3, 4, 6, 4, 2});
  } else if (r == 7) {
    acc.add_row(2 * m(1), {2, 2, 3, 4, 3, 2, 1});
    acc.add_row(m(2), {4, 7, 8, 12, 9, 6, 3});
    acc.add_row(2 * m(3), {3, 4, 6, 8, 6, 4, 2});
    acc.add_row(2 * m(4), {4, 6, 8, 12, 9, 6, 3});
    acc.add_row(m(5), {6, 9, 12, 18, 15, 10, 5});
    acc.add_row(2 * m(6), {2, 3, 4, 6, 5, 4, 2});
    acc.add_row(m(7), {2, 3, 4, 6, 5, 4, 3});
  } else {
    acc.add_row(2 * m(1), {4, 5, 7, 10, 8, 6, 4, 2});
    acc.add_row(2 * m(2), {5, 8, 10, 15, 12, 9, 6, 3});
    acc.add_row(2 * m(3), {7, 10, 14, 20, 16, 12, 8, 4});
    acc.add_row(2 * m(4), {10, 15, 20, 30, 24, 18, 12, 6});
    acc.add_row(2 * m(5), {8, 12, 16, 24, 20, 15, 10, 5});
    acc.add_row(2 * m(6), {6, 9, 12, 18, 15, 12, 8, 4});
    acc.add_row(2 * m(7), {4, 6, 8, 12, 10, 8, 6, 3});
    acc.add_row(2 * m(8), {2, 3, 4, 6, 5, 4, 3, 2});
  }
  return acc.v;
}

RationalVector closed_form_f(const Weight& mu) {
  RootAccumulator acc(4);
  auto m = [&](int i) { return Rational(mu[static_cast<std::size_t>(i - 1)]); };
  acc.add_row(2 * m(1), {2, 3, 4, 2});
  acc.add_row(2 * m(2), {3, 6, 8, 4});
  acc.add_row(2 * m(3), {2, 4, 6, 3});
  acc.add_row(2 * m(4), {1, 2, 3, 2});
  return acc.v;
}

RationalVector closed_form_g(const Weight& mu) {
  RootAccumulator acc(2);
  acc.add_row(Rational(2 * mu[0]), {2, 1});
  acc.add_row(Rational(2 * mu[1]), {3, 2});
  return acc.v;
}

}  // namespace

RationalVector mu_plus_mu_star_closed_form(LieType type, const Weight& mu) {
  validate(type);
  if (mu.rank() != type.rank) throw DomainError("weight length does not match rank of " + type.name());
  const int r = type.rank;
  switch (type.family) {
    case Family::A: return closed_form_a(r, mu);
    case Family::B: return closed_form_b(r, mu);
    case Family::C: return closed_form_c(r, mu);
    case Family::D: return closed_form_d(r, mu);
    case Family::E: return closed_form_e(r, mu);
    case Family::F: return closed_form_f(mu);
    case Family::G: return closed_form_g(mu);
  }
  return {};
}

}  // namespace hodgerep
