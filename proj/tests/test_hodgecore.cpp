#include <doctest.h>

#include "hodgerep/errors.hpp"
#include "hodgerep/hodgecore.hpp"
#include "oracles.hpp"

using namespace hodgerep;

namespace {

GradingElement nodes(int rank, std::vector<int> one_based) {
  for (int& n : one_based) --n;
  return GradingElement::from_nodes(rank, one_based);
}

oracle::Kind kind(Reality r) {
  switch (r) {
    case Reality::real: return oracle::Kind::real;
    case Reality::complex: return oracle::Kind::complex;
    case Reality::quaternionic: return oracle::Kind::quaternionic;
  }
  return oracle::Kind::complex;
}

}  // namespace

TEST_CASE("grading elements validate") {
  CHECK_THROWS_AS(GradingElement({0, 0}).validate(2), DomainError);
  CHECK_THROWS_AS(GradingElement({1, 2}).validate(2), DomainError);
  CHECK_THROWS_AS(GradingElement({1}).validate(2), DomainError);
  CHECK_NOTHROW(GradingElement({0, 1}).validate(2));
  CHECK(nodes(4, {1, 3}).support() == std::vector<int>{0, 2});
}

TEST_CASE("level and mu(E)") {
  const LieType a3 = LieType::parse("A3");
  CHECK(level(a3, Weight({0, 1, 0}), nodes(3, {1})) == 1);
  CHECK(level(LieType::parse("C3"), Weight({0, 0, 1}), nodes(3, {3})) == 3);
  CHECK(level(LieType::parse("D4"), Weight({0, 0, 2, 0}), nodes(4, {3})) == 4);
  CHECK(mu_of_E(LieType::parse("A1"), Weight({1}), nodes(1, {1})) == Rational(1, 2));
  CHECK(mu_of_E(LieType::parse("E7"), Weight({0, 0, 0, 0, 0, 0, 1}), nodes(7, {7})) == Rational(3, 2));
}

TEST_CASE("eigenspaces agree with epsilon-basis weight lists") {
  struct Case {
    const char* type;
    std::vector<int> mu;
    std::vector<int> E;
    std::vector<oracle::EpsWeight> weights;
  };
  const std::vector<Case> cases{
      {"A4", {0, 1, 0, 0}, {1}, oracle::a_exterior(4, 2)},
      {"A5", {0, 0, 1, 0, 0}, {3}, oracle::a_exterior(5, 3)},
      {"A6", {1, 0, 0, 0, 0, 0}, {1, 4}, oracle::a_exterior(6, 1)},
      {"B3", {1, 0, 0}, {1}, oracle::vector_rep(3, true)},
      {"B4", {0, 0, 0, 1}, {1}, oracle::spin_rep(4, -1)},
      {"B2", {0, 1}, {1, 2}, oracle::spin_rep(2, -1)},
      {"C3", {1, 0, 0}, {3}, oracle::vector_rep(3, false)},
      {"C4", {1, 0, 0, 0}, {1, 4}, oracle::vector_rep(4, false)},
      {"D5", {1, 0, 0, 0, 0}, {1}, oracle::vector_rep(5, false)},
      {"D4", {0, 0, 0, 1}, {1}, oracle::spin_rep(4, 0)},
      {"D4", {0, 0, 1, 0}, {4}, oracle::spin_rep(4, 1)},
      {"D6", {0, 0, 0, 0, 1, 0}, {5}, oracle::spin_rep(6, 1)},
      {"D5", {0, 0, 0, 1, 0}, {4}, oracle::spin_rep(5, 1)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.type);
    const LieType t = LieType::parse(c.type);
    const EigenDecomp e = eigenspace_dims(t, Weight(c.mu), nodes(t.rank, c.E));
    CHECK(e.dims() == oracle::eigen_dims(oracle::eigenvalues(c.weights, static_cast<char>(t.family), t.rank, c.E)));
  }
}

TEST_CASE("reality follows the mu(H_phi) parity test") {
  auto re = [](const char* t, std::vector<int> mu, std::vector<int> E) {
    const LieType type = LieType::parse(t);
    return reality_type(type, Weight(std::move(mu)), nodes(type.rank, std::move(E)));
  };
  CHECK(re("A3", {1, 0, 0}, {1}) == Reality::complex);
  CHECK(re("A1", {1}, {1}) == Reality::real);
  CHECK(re("A3", {0, 1, 0}, {1}) == Reality::quaternionic);
  CHECK(re("A3", {0, 1, 0}, {3}) == Reality::quaternionic);
  CHECK(re("A5", {0, 0, 1, 0, 0}, {1}) == Reality::real);
  CHECK(re("A5", {0, 0, 1, 0, 0}, {5}) == Reality::real);
  CHECK(re("C3", {1, 0, 0}, {1}) == Reality::quaternionic);
  CHECK(re("C3", {1, 0, 0}, {3}) == Reality::real);
  // Spin of so(2, 2r-1): real for r = 1, 2 mod 4, quaternionic for r = 3, 0 mod 4.
  for (int r = 2; r <= 8; ++r) {
    std::vector<int> mu(static_cast<std::size_t>(r), 0);
    mu.back() = 1;
    const LieType b{Family::B, r};
    const Reality expected = (r % 4 == 1 || r % 4 == 2) ? Reality::real : Reality::quaternionic;
    CHECK(reality_type(b, Weight(mu), nodes(r, {1})) == expected);
  }
  CHECK(effective_reality(Reality::real, 2, 3) == Reality::complex);
  CHECK(effective_reality(Reality::quaternionic, 3, 3) == Reality::quaternionic);
  CHECK(effective_reality(Reality::real, 1, 1) == Reality::real);
}

TEST_CASE("center charge") {
  CHECK(center_charge(3, Rational(3, 2), Reality::real) == 0);
  CHECK(center_charge(3, Rational(1), Reality::complex) == Rational(1, 2));
  CHECK(center_charge(1, Rational(1, 3), Reality::complex) == Rational(1, 6));
}

TEST_CASE("Hodge vectors match the oracle assembly") {
  struct Case {
    const char* type;
    std::vector<int> mu;
    std::vector<int> E;
    int n;
    std::vector<oracle::EpsWeight> weights;
  };
  const std::vector<Case> cases{
      {"A3", {0, 1, 0}, {1}, 1, oracle::a_exterior(3, 2)},
      {"A5", {0, 0, 1, 0, 0}, {1}, 1, oracle::a_exterior(5, 3)},
      {"A4", {1, 0, 0, 0}, {3}, 1, oracle::a_exterior(4, 1)},
      {"B5", {0, 0, 0, 0, 1}, {1}, 1, oracle::spin_rep(5, -1)},
      {"B3", {0, 0, 1}, {1}, 1, oracle::spin_rep(3, -1)},
      {"C4", {1, 0, 0, 0}, {4}, 1, oracle::vector_rep(4, false)},
      {"D6", {1, 0, 0, 0, 0, 0}, {5}, 1, oracle::vector_rep(6, false)},
      {"A4", {1, 0, 0, 0}, {1}, 3, oracle::a_exterior(4, 1)},
      {"B4", {1, 0, 0, 0}, {1}, 3, oracle::vector_rep(4, true)},
      {"C4", {1, 0, 0, 0}, {1}, 3, oracle::vector_rep(4, false)},
      {"D5", {1, 0, 0, 0, 0}, {1}, 3, oracle::vector_rep(5, false)},
      {"C3", {1, 0, 0}, {1, 3}, 3, oracle::vector_rep(3, false)},
      {"A5", {0, 0, 1, 0, 0}, {3}, 3, oracle::a_exterior(5, 3)},
      {"D6", {0, 0, 0, 0, 1, 0}, {5}, 3, oracle::spin_rep(6, 1)},
      {"D5", {0, 0, 0, 1, 0}, {4}, 3, oracle::spin_rep(5, 1)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.type);
    CAPTURE(c.E.front());
    const LieType t = LieType::parse(c.type);
    const Analysis a = analyze(t, Weight(c.mu), nodes(t.rank, c.E), c.n);
    REQUIRE(a.valid);
    oracle::Q charge;
    const auto values = oracle::eigenvalues(c.weights, static_cast<char>(t.family), t.rank, c.E);
    CHECK(a.tuple.hodge.dims == oracle::hodge(values, kind(a.tuple.reality), c.n, &charge));
    CHECK(a.tuple.c == charge);
  }
}

TEST_CASE("shape-invalid candidates") {
  const LieType a2 = LieType::parse("A2");
  const Analysis a = analyze(a2, Weight({1, 1}), nodes(2, {1}), 3);
  CHECK_FALSE(a.valid);
  CHECK(a.tuple.eigen.dims() == std::vector<std::uint64_t>{2, 4, 2});
  CHECK(a.tuple.hodge.dims == std::vector<std::uint64_t>{2, 6, 6, 2});
  try {
    hodge_vector(a.tuple.eigen, a.tuple.reality, a.tuple.c, 3);
    FAIL("expected a ShapeError");
  } catch (const ShapeError& e) {
    CHECK(e.offending() == std::vector<std::uint64_t>{2, 6, 6, 2});
  }
  // Span 4 does not fit into level 3 at all.
  std::string why;
  const EigenDecomp wide = eigenspace_dims(LieType::parse("D4"), Weight({0, 0, 2, 0}), nodes(4, {3}));
  CHECK_FALSE(assemble_hodge(wide, Reality::real, 0, 3, &why).has_value());
  CHECK_FALSE(why.empty());
}

TEST_CASE("real form names") {
  auto name = [](const char* t, std::vector<int> E) {
    const LieType type = LieType::parse(t);
    return real_form(type, nodes(type.rank, std::move(E))).name.value_or("-");
  };
  CHECK(name("A4", {2}) == "su(2,3)");
  CHECK(name("B3", {1}) == "so(2,5)");
  CHECK(name("C3", {3}) == "sp(3,R)");
  CHECK(name("C3", {1}) == "sp(1,2)");
  CHECK(name("D5", {1}) == "so(2,8)");
  CHECK(name("D5", {4}) == "so*(10)");
  CHECK(name("E6", {6}) == "e6(-14)");
  CHECK(name("E7", {7}) == "e7(-25)");
  CHECK(name("A4", {1, 3}) == "-");
  CHECK(name("B3", {3}) == "-");
}

TEST_CASE("extremal criterion matches the top eigenspace on a sample") {
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    const LieType type = LieType::parse(t);
    for (unsigned mask = 1; mask < (1u << type.rank); ++mask) {
      std::vector<int> coeffs(static_cast<std::size_t>(type.rank));
      for (int j = 0; j < type.rank; ++j) coeffs[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
      const GradingElement E(coeffs);
      for (int i = 0; i < type.rank; ++i) {
        const Weight mu = Weight::fundamental(type.rank, i);
        CAPTURE(t);
        CAPTURE(mask);
        CAPTURE(i);
        CHECK(extremal_dim_is_one(mu, E) == (eigenspace_dims(type, mu, E).levels.front().second == 1));
      }
    }
  }
}
