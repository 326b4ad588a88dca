#include <doctest.h>

#include <json.hpp>

#include "hodgerep/classify.hpp"
#include "hodgerep/errors.hpp"
#include "hodgerep/serialize.hpp"

using namespace hodgerep;

namespace {

HodgeTuple c3() {
  const LieType t = LieType::parse("C3");
  return analyze(t, Weight({0, 0, 1}), GradingElement::from_nodes(3, {2}), 3).tuple;
}

}  // namespace

TEST_CASE("formats parse") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("markdown") == Format::markdown);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("yaml"), ParseError);
  CHECK(to_string(Format::csv) == "csv");
}

TEST_CASE("records") {
  const OutputRecord r = to_record(c3());
  CHECK(r.algebra == "C3");
  CHECK(r.E == std::vector<std::vector<int>>{{3}});
  CHECK(r.mu == std::vector<std::vector<int>>{{0, 0, 1}});
  CHECK(r.c == "0");
  CHECK(r.span == "3");
  CHECK(r.reality == "real");
  CHECK(r.hodge == std::vector<std::uint64_t>{1, 6, 6, 1});
  CHECK(r.real_form == "sp(3,R)");
}

TEST_CASE("json round trip") {
  const OutputRecord r = to_record(c3());
  const std::string text = to_json(r);
  CHECK(record_from_json(text) == r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["E"] == nlohmann::json::array({3}));
  CHECK(j["c"].is_string());

  SearchConfig cfg;
  cfg.max_rank = 3;
  cfg.include_products = true;
  const Classification c = enumerate_level(cfg);
  for (const auto& p : c.products) {
    const OutputRecord pr = to_record(p);
    CHECK(record_from_json(to_json(pr)) == pr);
    CHECK(record_factors(pr) == p.factors);
  }
  CHECK_THROWS_AS(record_from_json("{\"algebra\": 3}"), ParseError);
  CHECK_THROWS_AS(record_from_json("not json"), ParseError);
}

TEST_CASE("rendering keeps rationals exact") {
  SearchConfig cfg;
  cfg.max_rank = 4;
  cfg.level = 1;
  std::vector<OutputRecord> records;
  for (const auto& t : enumerate_level(cfg).simple) records.push_back(to_record(t));
  REQUIRE_FALSE(records.empty());
  for (Format f : {Format::json, Format::markdown, Format::csv, Format::text}) {
    const std::string out = render_records(records, f);
    CHECK_FALSE(out.empty());
    // Fractions appear as p/q, never as decimals.
    CHECK(out.find("0.") == std::string::npos);
  }
  const auto j = nlohmann::json::parse(render_records(records, Format::json));
  CHECK(j.size() == records.size());
}

TEST_CASE("report rendering") {
  VerifyOptions o;
  o.scope = "prop3.9";
  const ReconciliationReport rep = verify_paper(o);
  const auto j = nlohmann::json::parse(render_report(rep, Format::json));
  CHECK(j.contains("counts"));
  const std::string md = render_report(rep, Format::markdown);
  CHECK(md.find("prop3.9") != std::string::npos);
  CHECK(md.find("|") != std::string::npos);
}
