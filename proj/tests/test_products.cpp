#include <doctest.h>

#include "hodgerep/errors.hpp"
#include "hodgerep/products.hpp"
#include "oracles.hpp"

using namespace hodgerep;

namespace {

FactorSpec factor(const char* t, std::vector<int> E, std::vector<int> mu) {
  const LieType type = LieType::parse(t);
  for (int& n : E) --n;
  return {type, GradingElement::from_nodes(type.rank, E), Weight(std::move(mu))};
}

}  // namespace

TEST_CASE("tensor reality") {
  using R = Reality;
  CHECK(tensor_reality({R::real, R::real}) == R::real);
  CHECK(tensor_reality({R::quaternionic, R::quaternionic}) == R::real);
  CHECK(tensor_reality({R::real, R::quaternionic}) == R::quaternionic);
  CHECK(tensor_reality({R::complex, R::real}) == R::complex);
  CHECK(tensor_reality({R::quaternionic, R::quaternionic, R::quaternionic}) == R::quaternionic);
}

TEST_CASE("admissible span patterns") {
  CHECK(is_admissible_pattern({1, 1}));
  CHECK(is_admissible_pattern({2, 1}));
  CHECK(is_admissible_pattern({1, 1, 1}));
  CHECK_FALSE(is_admissible_pattern({2, 2}));
  CHECK_FALSE(is_admissible_pattern({1, 3}));
  CHECK_FALSE(is_admissible_pattern({1, 1, 2}));
}

TEST_CASE("convolution adds eigenvalues and multiplies dimensions") {
  EigenDecomp a{{{Rational(1, 2), 1}, {Rational(-1, 2), 1}}};
  EigenDecomp b{{{Rational(1), 1}, {Rational(0), 6}, {Rational(-1), 1}}};
  const EigenDecomp c = convolve_eigen({a, b});
  CHECK(c.dims() == std::vector<std::uint64_t>{1, 7, 7, 1});
  CHECK(c.levels.front().first == Rational(3, 2));
}

TEST_CASE("product Hodge numbers match the convolution oracle") {
  // sl2 x sl(r2+1) style rows and the three-factor row.
  const auto a1 = oracle::eigenvalues(oracle::a_exterior(1, 1), 'A', 1, {1});
  struct Case {
    std::vector<FactorSpec> factors;
    std::vector<std::vector<oracle::Q>> values;
    oracle::Kind kind;
  };
  const std::vector<Case> cases{
      {{factor("A2", {1}, {1, 0}), factor("A3", {1}, {1, 0, 0})},
       {oracle::eigenvalues(oracle::a_exterior(2, 1), 'A', 2, {1}), oracle::eigenvalues(oracle::a_exterior(3, 1), 'A', 3, {1})},
       oracle::Kind::complex},
      {{factor("A1", {1}, {1}), factor("D4", {1}, {1, 0, 0, 0})},
       {a1, oracle::eigenvalues(oracle::vector_rep(4, false), 'D', 4, {1})},
       oracle::Kind::real},
      {{factor("A1", {1}, {1}), factor("B3", {1}, {1, 0, 0})},
       {a1, oracle::eigenvalues(oracle::vector_rep(3, true), 'B', 3, {1})},
       oracle::Kind::real},
      {{factor("A1", {1}, {1}), factor("A1", {1}, {1}), factor("A1", {1}, {1})}, {a1, a1, a1}, oracle::Kind::real},
  };
  for (const auto& c : cases) {
    CAPTURE(product_name(c.factors));
    const ProductAnalysis a = analyze_product(c.factors);
    REQUIRE(a.valid);
    oracle::Q charge;
    CHECK(a.tuple.hodge.dims == oracle::hodge(oracle::convolve(c.values), c.kind, 3, &charge));
    CHECK(a.tuple.c == charge);
  }
}

TEST_CASE("combine rejects bad products") {
  // Spans (1, 2) are admissible but the convolution is not (1,a,a,1).
  CHECK_THROWS_AS(combine({factor("A2", {1}, {1, 0}), factor("A2", {1}, {2, 0})}), ShapeError);
  CHECK_THROWS_AS(combine({factor("A1", {1}, {2}), factor("A1", {1}, {2})}), DomainError);
  CHECK_THROWS_AS(combine({factor("A1", {1}, {1}), factor("D4", {3}, {0, 0, 2, 0})}), DomainError);
  CHECK_THROWS_AS(combine({factor("A1", {1}, {1})}), DomainError);
  CHECK_NOTHROW(combine({factor("A1", {1}, {1}), factor("A1", {1}, {2})}));
}

TEST_CASE("factor order and names") {
  const auto f = canonical_factor_order({factor("D4", {1}, {1, 0, 0, 0}), factor("A1", {1}, {1})});
  CHECK(product_name(f) == "A1xD4");
}
