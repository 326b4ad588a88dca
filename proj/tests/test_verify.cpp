#include <doctest.h>

#include <set>

#include "hodgerep/errors.hpp"
#include "hodgerep/verify.hpp"
#include "oracles.hpp"

using namespace hodgerep;

namespace {

const RowResult* row(const ReconciliationReport& r, const std::string& table, int item) {
  for (const RowResult* x : r.rows())
    if (x->row.table == table && x->row.item == item) return x;
  return nullptr;
}

long param(const InstanceResult& inst, const std::string& name) {
  for (const auto& [k, v] : inst.params)
    if (k == name) return v;
  return -1;
}

const ReconciliationReport& full_report() {
  static const ReconciliationReport r = [] {
    VerifyOptions o;
    o.include_computed_only = true;
    return verify_paper(o);
  }();
  return r;
}

}  // namespace

TEST_CASE("every row lands in exactly one bucket") {
  const auto& r = full_report();
  std::set<std::pair<std::string, int>> seen;
  for (const auto* bucket : {&r.matches, &r.mismatches, &r.paper_only})
    for (const auto& x : *bucket) CHECK(seen.emplace(x.row.table, x.row.item).second);
  CHECK(seen.size() == embedded_expected().rows.size());
  CHECK(r.paper_only.empty());
}

TEST_CASE("self-dual level-one rows disagree in the printed parity only") {
  const auto& r = full_report();
  const RowResult* one = row(r, "thm2.1", 1);
  REQUIRE(one != nullptr);
  CHECK(one->mismatch_count() == 0);

  const RowResult* two = row(r, "thm2.1", 2);
  REQUIRE(two != nullptr);
  std::set<long> ranks;
  for (const auto& inst : two->instances) {
    if (inst.matches()) continue;
    CHECK(2 * param(inst, "i") == param(inst, "r") + 1);
    CHECK(inst.allowlisted);
    CHECK(inst.diffs == std::vector<std::string>{"h", "reality"});
    // Computed reality follows item 1: quaternionic exactly when i is even.
    CHECK(inst.reality == (param(inst, "i") % 2 == 0 ? Reality::quaternionic : Reality::real));
    ranks.insert(param(inst, "r"));
  }
  CHECK(ranks == std::set<long>{1, 3, 5, 7});
  CHECK(two->allowlisted());
  for (int item = 3; item <= 12; ++item) {
    CAPTURE(item);
    REQUIRE(row(r, "thm2.1", item) != nullptr);
    CHECK(row(r, "thm2.1", item)->mismatch_count() == 0);
  }
}

TEST_CASE("odd orthogonal vector with E = A1 has middle numbers 2r") {
  const RowResult* seven = row(full_report(), "prop3.3", 7);
  REQUIRE(seven != nullptr);
  CHECK(seven->allowlisted());
  for (const auto& inst : seven->instances) {
    const long r = param(inst, "r");
    CAPTURE(r);
    oracle::Q charge;
    const auto values = oracle::eigenvalues(oracle::vector_rep(static_cast<int>(r), true), 'B', static_cast<int>(r), {1});
    CHECK(inst.h == oracle::hodge(values, oracle::Kind::complex, 3, &charge));
    CHECK(inst.h == std::vector<std::uint64_t>{1, static_cast<std::uint64_t>(2 * r), static_cast<std::uint64_t>(2 * r), 1});
  }
}

TEST_CASE("orthogonal vector with E = A1 matches the oracle") {
  const RowResult* nine = row(full_report(), "prop3.3", 9);
  REQUIRE(nine != nullptr);
  CHECK(nine->mismatch_count() == 0);
  for (const auto& inst : nine->instances) {
    const int r = static_cast<int>(param(inst, "r"));
    CAPTURE(r);
    const auto values = oracle::eigenvalues(oracle::vector_rep(r, false), 'D', r, {1});
    CHECK(inst.h == oracle::hodge(values, oracle::Kind::complex, 3));
  }
}

TEST_CASE("two product rows are flagged") {
  const auto& r = full_report();
  const RowResult* four = row(r, "prop3.9", 4);
  const RowResult* five = row(r, "prop3.9", 5);
  REQUIRE(four != nullptr);
  REQUIRE(five != nullptr);
  CHECK_FALSE(four->allowlisted());
  CHECK_FALSE(five->allowlisted());
  CHECK(std::find(four->diffs.begin(), four->diffs.end(), "level") != four->diffs.end());
  bool saw = false;
  for (const auto& inst : five->instances) {
    if (inst.matches()) continue;
    saw = true;
    CHECK(inst.h == std::vector<std::uint64_t>{1, 7, 7, 1});
  }
  CHECK(saw);
  CHECK_FALSE(r.clean());
}

TEST_CASE("scoped runs") {
  VerifyOptions o;
  o.scope = "thm2.1";
  o.include_computed_only = false;
  CHECK(verify_paper(o).clean());
  o.scope = "prop3.9";
  CHECK_FALSE(verify_paper(o).clean());
  o.scope = "prop3.1";
  CHECK(verify_paper(o).clean());
  o.scope = "nope";
  CHECK_THROWS_AS(verify_paper(o), ConfigError);
}

TEST_CASE("a broken table entry is reported as a configuration error") {
  const std::string text =
      "#hodgerep-expected v1\n"
      "{\"kind\":\"row\",\"table\":\"prop3.1\",\"item\":1,\"level\":3,\"params\":[],"
      "\"factors\":[{\"family\":\"A\",\"rank\":\"1\",\"E\":[\"1\"],\"mu\":[\"1:3\"]}],"
      "\"c\":\"0\",\"reality\":\"real\",\"h\":[\"1\",\"1\",\"1\",\"q +\"]}\n";
  VerifyOptions o;
  o.include_computed_only = false;
  CHECK_THROWS_AS(verify_paper(parse_expected_text(text), o), ConfigError);
}

TEST_CASE("real form labels") {
  const LieType a4 = LieType::parse("A4");
  CHECK(real_form_label(a4, {{0, 2}, std::nullopt}) == "A4{1,3}");
  CHECK(real_form_label(a4, {{1}, std::string("su(2,3)")}) == "su(2,3)");
}
