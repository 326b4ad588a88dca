#include <doctest.h>

#include "hodgerep/errors.hpp"
#include "hodgerep/repweights.hpp"
#include "oracles.hpp"

using namespace hodgerep;

TEST_CASE("Weyl dimensions") {
  auto dim = [](const char* t, std::vector<int> mu) { return weyl_dim(LieType::parse(t), Weight(std::move(mu))); };
  CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(dim("D6", {0, 0, 0, 0, 0, 1}) == 32);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
  CHECK(dim("G2", {1, 0}) == 7);
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("B3", {0, 0, 1}) == 8);
  CHECK(dim("C3", {0, 0, 1}) == 14);
  CHECK_THROWS_AS(dim("A2", {-1, 1}), DomainError);
}

TEST_CASE("A2 adjoint weight system") {
  const WeightSystem ws = weight_system(LieType::parse("A2"), Weight({1, 1}));
  CHECK(ws.dimension == 8);
  CHECK(ws.multiplicity(Weight({0, 0})) == 2);
  CHECK(ws.multiplicities.size() == 7);
}

TEST_CASE("Freudenthal agrees with the Kostant multiplicity formula on rank 2") {
  for (const char* name : {"A2", "B2", "G2"}) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) {
        if (a + b == 0) continue;
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(b);
        const WeightSystem ws = weight_system(LieType::parse(name), Weight({a, b}));
        oracle::Kostant k(name, {a, b});
        const auto expected = k.weights(24);
        REQUIRE(expected.size() == ws.multiplicities.size());
        for (const auto& [w, m] : expected) CHECK(ws.multiplicity(Weight(w)) == static_cast<std::uint64_t>(m));
      }
    }
  }
}

TEST_CASE("multiplicities sum to the Weyl dimension") {
  for (const auto& [t, mu] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"E6", {1, 0, 0, 0, 0, 0}},
           {"E7", {0, 0, 0, 0, 0, 0, 1}},
           {"D6", {0, 0, 0, 0, 0, 1}},
           {"F4", {1, 0, 0, 0}},
           {"B4", {1, 0, 0, 1}},
           {"C4", {0, 1, 0, 0}},
           {"A5", {1, 0, 1, 0, 0}}}) {
    CAPTURE(t);
    const WeightSystem ws = weight_system(LieType::parse(t), Weight(mu));
    std::uint64_t total = 0;
    for (const auto& [w, m] : ws.multiplicities) total += m;
    CHECK(total == ws.dimension);
    CHECK(BigInt(static_cast<unsigned long>(ws.dimension)) == weyl_dim(LieType::parse(t), Weight(mu)));
  }
}

TEST_CASE("Weyl orbits and dominant conjugates") {
  const LieType a2 = LieType::parse("A2");
  CHECK(weyl_orbit(a2, Weight({1, 0})).size() == 3);
  CHECK(weyl_orbit(a2, Weight({1, 1})).size() == 6);
  CHECK(weyl_orbit(LieType::parse("E6"), Weight({1, 0, 0, 0, 0, 0})).size() == 27);
  CHECK(dominant_conjugate(a2, Weight({-1, 0})) == Weight({0, 1}));
  CHECK(dominant_conjugate(LieType::parse("G2"), Weight({-1, 0})) == Weight({1, 0}));
}

TEST_CASE("size guard") {
  WeightSystemOptions small;
  small.max_dim = 50;
  try {
    weight_system(LieType::parse("E7"), Weight({0, 0, 0, 0, 0, 0, 1}), small);
    FAIL("expected a ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.dimension() == "56");
    CHECK_FALSE(std::string(e.what()).empty());
  }
  CHECK_NOTHROW(weight_system(LieType::parse("E6"), Weight({1, 0, 0, 0, 0, 0}), small));
}
