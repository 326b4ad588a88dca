#include <doctest.h>

#include <numeric>
#include <set>

#include "hodgerep/errors.hpp"
#include "hodgerep/rootdata.hpp"

using namespace hodgerep;

namespace {

std::vector<LieType> all_types(int max_classical) {
  std::vector<LieType> out;
  for (Family f : kAllFamilies) {
    const int hi = max_rank(f) == 0 ? max_classical : max_rank(f);
    for (int r = min_rank(f); r <= hi; ++r) out.push_back({f, r});
  }
  return out;
}

}  // namespace

TEST_CASE("type names parse and validate") {
  CHECK(LieType::parse("E6") == LieType{Family::E, 6});
  CHECK(LieType::parse("D4").name() == "D4");
  CHECK_THROWS_AS(LieType::parse("D3"), InvalidTypeError);
  CHECK_THROWS_AS(LieType::parse("E9"), InvalidTypeError);
  CHECK_THROWS_AS(LieType::parse("G3"), InvalidTypeError);
  CHECK_THROWS_AS(LieType::parse("B1"), InvalidTypeError);
  CHECK_THROWS_AS(LieType::parse("X2"), ParseError);
  CHECK_THROWS_AS(LieType::parse("A"), ParseError);
}

TEST_CASE("Cartan matrices follow Bourbaki numbering") {
  CHECK(root_system({Family::B, 2}).cartan == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(root_system({Family::C, 2}).cartan == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(root_system({Family::G, 2}).cartan == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(root_system({Family::F, 4}).cartan == IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  const auto& e6 = root_system({Family::E, 6}).cartan;
  CHECK(e6[1][3] == -1);
  CHECK(e6[0][2] == -1);
  CHECK(e6[0][1] == 0);
}

TEST_CASE("positive root counts and algebra dimensions") {
  auto count = [](const char* t) { return root_system(LieType::parse(t)).num_positive_roots(); };
  CHECK(count("A5") == 15);
  CHECK(count("B4") == 16);
  CHECK(count("C4") == 16);
  CHECK(count("D5") == 20);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK(count("F4") == 24);
  CHECK(count("G2") == 6);
  CHECK(algebra_dimension(LieType::parse("E8")) == 248);
  CHECK(algebra_dimension(LieType::parse("G2")) == 14);
  CHECK(algebra_dimension(LieType::parse("D4")) == 28);
}

TEST_CASE("rho is the all-ones weight and the highest root pairs correctly") {
  for (const LieType& t : all_types(8)) {
    CAPTURE(t.name());
    const auto& rs = root_system(t);
    CHECK(rs.weyl_vector.coords == std::vector<int>(static_cast<std::size_t>(t.rank), 1));
    for (int i = 0; i < t.rank; ++i) {
      std::vector<int> simple(static_cast<std::size_t>(t.rank), 0);
      simple[static_cast<std::size_t>(i)] = 1;
      // (rho, alpha_i) = (alpha_i, alpha_i) / 2
      CHECK(rs.pair_with_root(rs.weyl_vector, simple) == rs.symmetrizer[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("root coordinates round-trip") {
  for (const LieType& t : all_types(6)) {
    CAPTURE(t.name());
    for (int i = 0; i < t.rank; ++i) {
      const Weight w = Weight::fundamental(t.rank, i);
      const RationalVector back = root_to_weight_coords(t, weight_to_root_coords(t, w));
      for (int j = 0; j < t.rank; ++j) CHECK(back[static_cast<std::size_t>(j)] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("closed-form mu + mu* equals the inverse-Cartan computation") {
  for (const LieType& t : all_types(8)) {
    CAPTURE(t.name());
    for (int i = 0; i < t.rank; ++i) {
      const Weight w = Weight::fundamental(t.rank, i);
      CAPTURE(i);
      CHECK(mu_plus_mu_star_closed_form(t, w) == weight_to_root_coords(t, w + dual_weight(t, w)));
    }
    // Mixed weights exercise linearity of the tabulated forms.
    Weight mixed = Weight::zero(t.rank);
    mixed[0] = 2;
    mixed[static_cast<std::size_t>(t.rank - 1)] += 1;
    CHECK(mu_plus_mu_star_closed_form(t, mixed) == weight_to_root_coords(t, mixed + dual_weight(t, mixed)));
  }
}

TEST_CASE("duality and diagram automorphisms") {
  CHECK(dual_permutation(LieType::parse("A4")) == std::vector<int>{3, 2, 1, 0});
  CHECK(dual_permutation(LieType::parse("D5")) == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(dual_permutation(LieType::parse("D4")) == std::vector<int>{0, 1, 2, 3});
  CHECK(dual_permutation(LieType::parse("E6")) == std::vector<int>{5, 1, 4, 3, 2, 0});
  CHECK(dual_permutation(LieType::parse("E7")) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(is_self_dual(LieType::parse("A3"), Weight({0, 1, 0})));
  CHECK_FALSE(is_self_dual(LieType::parse("A3"), Weight({1, 0, 0})));

  CHECK(diagram_automorphisms(LieType::parse("D4")).size() == 6);
  CHECK(diagram_automorphisms(LieType::parse("D6")).size() == 2);
  CHECK(diagram_automorphisms(LieType::parse("E6")).size() == 2);
  CHECK(diagram_automorphisms(LieType::parse("A1")).size() == 1);
  CHECK(diagram_automorphisms(LieType::parse("B5")).size() == 1);
  for (const LieType& t : all_types(6)) {
    const auto autos = diagram_automorphisms(t);
    CHECK(autos.front() == [&] {
      std::vector<int> id(static_cast<std::size_t>(t.rank));
      std::iota(id.begin(), id.end(), 0);
      return id;
    }());
    // Every automorphism preserves the Cartan matrix.
    const auto& a = root_system(t).cartan;
    for (const auto& p : autos)
      for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j)
          CHECK(a[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] ==
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
}
