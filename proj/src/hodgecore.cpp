#include "hodgerep/hodgecore.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hodgerep/errors.hpp"

namespace hodgerep {

std::string_view to_string(Reality r) {
  switch (r) {
    case Reality::real: return "real";
    case Reality::complex: return "complex";
    case Reality::quaternionic: return "quaternionic";
  }
  return "complex";
}

Reality parse_reality(std::string_view text) {
  if (text == "real") return Reality::real;
  if (text == "complex") return Reality::complex;
  if (text == "quaternionic") return Reality::quaternionic;
  throw ParseError("unknown reality type '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

GradingElement GradingElement::from_nodes(int rank, const std::vector<int>& nodes) {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (int n : nodes) {
    if (n < 0 || n >= rank) throw DomainError("grading node " + std::to_string(n + 1) + " out of range 1.." + std::to_string(rank));
    c[static_cast<std::size_t>(n)] = 1;
  }
  return GradingElement(std::move(c));
}

std::vector<int> GradingElement::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] == 1) s.push_back(static_cast<int>(i));
  return s;
}

void GradingElement::validate(int r) const {
  if (rank() != r) throw DomainError("grading element has length " + std::to_string(rank()) + ", expected " + std::to_string(r));
  bool any = false;
  for (int c : coeffs) {
    if (c != 0 && c != 1) throw DomainError("grading element coefficients must be 0 or 1");
    any = any || c == 1;
  }
  if (!any) throw DomainError("grading element must have nonempty support");
}

std::uint64_t EigenDecomp::total() const {
  std::uint64_t t = 0;
  for (const auto& [v, d] : levels) t += d;
  return t;
}

Rational EigenDecomp::span() const {
  if (levels.empty()) return 0;
  return levels.front().first - levels.back().first;
}

std::vector<std::uint64_t> EigenDecomp::dims() const {
  std::vector<std::uint64_t> d;
  for (const auto& [v, n] : levels) d.push_back(n);
  return d;
}

bool HodgeVector::is_palindromic() const { return std::equal(dims.begin(), dims.end(), dims.rbegin()); }

bool HodgeVector::is_cy3() const { return dims.size() == 4 && dims[0] == 1 && dims[3] == 1 && dims[1] == dims[2] && dims[1] >= 1; }

bool HodgeVector::is_weight_one() const { return dims.size() == 2 && dims[0] == dims[1] && dims[0] >= 1; }

bool HodgeVector::valid_for(int n) const {
  if (n == 3) return is_cy3();
  if (n == 1) return is_weight_one();
  return false;
}

// ---------------------------------------------------------------------------

namespace {

Rational sum_over(const RationalVector& v, const GradingElement& E, bool supported) {
  Rational s = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (E.contains(static_cast<int>(j)) == supported) s += v[j];
  return s;
}

void check_inputs(LieType type, const Weight& mu, const GradingElement& E) {
  validate(type);
  if (mu.rank() != type.rank) throw DomainError("weight " + mu.to_string() + " has wrong length for " + type.name());
  E.validate(type.rank);
}

}  // namespace

Rational level(LieType type, const Weight& mu, const GradingElement& E) {
  check_inputs(type, mu, E);
  return sum_over(weight_to_root_coords(type, mu + dual_weight(type, mu)), E, true);
}

Rational mu_of_E(LieType type, const Weight& mu, const GradingElement& E) {
  check_inputs(type, mu, E);
  return sum_over(weight_to_root_coords(type, mu), E, true);
}

EigenDecomp eigenspace_dims(const WeightSystem& ws, const GradingElement& E) {
  const auto& rs = root_system(ws.type);
  E.validate(ws.type.rank);
  // lambda(E) = sum_i lambda^i * e_i with e_i = sum over supp(E) of inverse_cartan[i][j]; scaled to integers.
  const auto n = static_cast<std::size_t>(ws.type.rank);
  RationalVector e(n, Rational(0));
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : E.support()) e[i] += rs.inverse_cartan[i][static_cast<std::size_t>(j)];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e[i].get_den_mpz_t());
  }
  std::vector<std::int64_t> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = Rational(e[i] * den).get_num().get_si();

  std::map<std::int64_t, std::uint64_t, std::greater<>> buckets;
  for (const auto& [w, m] : ws.multiplicities) {
    std::int64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) key += scaled[i] * w[i];
    buckets[key] += m;
  }
  EigenDecomp out;
  for (const auto& [key, d] : buckets) out.levels.emplace_back(Rational(BigInt(static_cast<long>(key)), den), d);
  for (auto& [v, d] : out.levels) v.canonicalize();
  return out;
}

EigenDecomp eigenspace_dims(LieType type, const Weight& mu, const GradingElement& E, const WeightSystemOptions& options) {
  check_inputs(type, mu, E);
  return eigenspace_dims(weight_system(type, mu, options), E);
}

bool extremal_dim_is_one(const Weight& mu, const GradingElement& E) {
  for (int i : mu.support())
    if (i >= E.rank() || !E.contains(i)) return false;
  return true;
}

Reality reality_type(LieType type, const Weight& mu, const GradingElement& E) {
  check_inputs(type, mu, E);
  if (!is_self_dual(type, mu)) return Reality::complex;
  const Rational h = 2 * sum_over(weight_to_root_coords(type, mu), E, false);
  if (!is_integer(h))
    throw ConsistencyError("mu(H_phi) = " + to_string(h) + " is not integral for self-dual " + mu.to_string() + " on " + type.name());
  const BigInt& num = h.get_num();
  return mpz_odd_p(num.get_mpz_t()) ? Reality::quaternionic : Reality::real;
}

Reality effective_reality(Reality reality_ss, const Rational& span, int level_n) {
  if (reality_ss == Reality::complex || span != level_n) return Reality::complex;
  return reality_ss;
}

Rational center_charge(int level_n, const Rational& mu_of_E, Reality reality) {
  if (reality != Reality::complex) return 0;
  return frac(level_n, 2) - mu_of_E;
}

std::optional<HodgeVector> assemble_hodge(const EigenDecomp& decomp, Reality reality, const Rational& c, int level_n,
                                          std::string* why) {
  const Rational top(level_n, 2);
  std::vector<std::uint64_t> buckets(static_cast<std::size_t>(level_n + 1), 0);
  auto place = [&](const Rational& eigen, std::uint64_t d) {
    const Rational idx = top - eigen;
    if (!is_integer(idx) || idx < 0 || idx > level_n) {
      if (why) *why = "eigenvalue " + to_string(eigen) + " lies outside the Hodge range +-" + to_string(top);
      return false;
    }
    buckets[static_cast<std::size_t>(idx.get_num().get_si())] += d;
    return true;
  };
  for (const auto& [v, d] : decomp.levels) {
    if (reality == Reality::real) {
      if (!place(v, d)) return std::nullopt;
    } else {
      if (!place(v + c, d) || !place(-(v + c), d)) return std::nullopt;
    }
  }
  auto first = std::find_if(buckets.begin(), buckets.end(), [](std::uint64_t d) { return d != 0; });
  auto last = std::find_if(buckets.rbegin(), buckets.rend(), [](std::uint64_t d) { return d != 0; }).base();
  HodgeVector h;
  if (first < last) h.dims.assign(first, last);
  return h;
}

HodgeVector hodge_vector(const EigenDecomp& decomp, Reality reality, const Rational& c, int level_n) {
  std::string why;
  auto h = assemble_hodge(decomp, reality, c, level_n, &why);
  if (!h) throw ShapeError(why, {});
  if (!h->is_palindromic()) throw ShapeError("Hodge vector is not palindromic", h->dims);
  if (!h->valid_for(level_n))
    throw ShapeError(level_n == 3 ? "Hodge vector is not of the form (1,a,a,1)" : "Hodge vector is not of the form (a,a)", h->dims);
  return *h;
}

RealFormDescriptor real_form(LieType type, const GradingElement& E) {
  E.validate(type.rank);
  RealFormDescriptor d;
  d.painted = E.support();
  if (d.painted.size() != 1) return d;
  const int r = type.rank;
  const int node = d.painted.front() + 1;
  auto s = [](int v) { return std::to_string(v); };
  switch (type.family) {
    case Family::A:
      d.name = "su(" + s(node) + "," + s(r + 1 - node) + ")";
      break;
    case Family::B:
      if (node == 1) d.name = "so(2," + s(2 * r - 1) + ")";
      break;
    case Family::C:
      if (node == r) d.name = "sp(" + s(r) + ",R)";
      else if (node == 1) d.name = "sp(1," + s(r - 1) + ")";
      break;
    case Family::D:
      if (node == 1) d.name = "so(2," + s(2 * r - 2) + ")";
      else if (node == r - 1 || node == r) d.name = "so*(" + s(2 * r) + ")";
      break;
    case Family::E:
      if (r == 6 && (node == 1 || node == 6)) d.name = "e6(-14)";
      else if (r == 7 && node == 7) d.name = "e7(-25)";
      break;
    default:
      break;
  }
  return d;
}

Analysis analyze(const WeightSystem& ws, const GradingElement& E, int level_n) {
  const LieType type = ws.type;
  const Weight& mu = ws.highest;
  check_inputs(type, mu, E);
  if (level_n != 1 && level_n != 3) throw DomainError("Hodge level must be 1 or 3");

  Analysis a;
  HodgeTuple& t = a.tuple;
  t.type = type;
  t.E = E;
  t.mu = mu;
  t.level = level_n;
  t.span = level(type, mu, E);
  t.mu_of_E = mu_of_E(type, mu, E);
  t.reality_ss = reality_type(type, mu, E);
  t.reality = effective_reality(t.reality_ss, t.span, level_n);
  t.c = center_charge(level_n, t.mu_of_E, t.reality);
  t.eigen = eigenspace_dims(ws, E);
  t.real_form = real_form(type, E);

  std::string why;
  if (auto h = assemble_hodge(t.eigen, t.reality, t.c, level_n, &why)) {
    t.hodge = *h;
    if (!t.hodge.is_palindromic()) {
      a.reason = "Hodge vector is not palindromic";
    } else if (!t.hodge.valid_for(level_n)) {
      a.reason = level_n == 3 ? "Hodge vector is not of the form (1,a,a,1)" : "Hodge vector is not of the form (a,a)";
    } else {
      a.valid = true;
    }
  } else {
    a.reason = why;
  }
  return a;
}

Analysis analyze(LieType type, const Weight& mu, const GradingElement& E, int level_n, const WeightSystemOptions& options) {
  check_inputs(type, mu, E);
  if (!mu.is_dominant()) throw DomainError("highest weight " + mu.to_string() + " is not dominant");
  return analyze(weight_system(type, mu, options), E, level_n);
}

}  // namespace hodgerep
