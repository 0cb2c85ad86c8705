#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "flipeq/emit.hpp"

using namespace flipeq;

namespace {

value_table sample_table() {
  value_table t;
  t.kind = "k2";
  t.params = {{"nmax", 2}};
  t.index_columns = {"n", "l"};
  t.rows = {{{0, 0}, "1"}, {{1, 0}, "1"}, {{1, 1}, "0"}, {{2, 0}, "0"}, {{2, 1}, "1"},
            {{2, 2}, "0"}};
  return t;
}

}  // namespace

TEST_CASE("csv output carries a header row and one line per cell", "[emit]") {
  const std::string csv = emit_csv(sample_table());
  CHECK(csv == "n,l,value\n0,0,1\n1,0,1\n1,1,0\n2,0,0\n2,1,1\n2,2,0\n");
}

TEST_CASE("json is a single document that round-trips through the csv emitter", "[emit]") {
  const value_table t = sample_table();
  const std::string json = emit_json(t);
  const value_table back = parse_json_table(json);
  CHECK(back.kind == t.kind);
  CHECK(back.params == t.params);
  CHECK(emit_csv(back) == emit_csv(t));
  CHECK(emit_json(back) == json);
}

TEST_CASE("plain output right-aligns human columns", "[emit]") {
  value_table t;
  t.kind = "wedderburn";
  t.index_columns = {"n"};
  t.rows = {{{0}, "1"}, {{9}, "98"}, {{15}, "10905"}};
  const std::string plain = emit_plain(t);
  CHECK(plain == " 0     1\n 9    98\n15 10905\n");
}

TEST_CASE("grid rendering groups rows by the leading indices", "[emit]") {
  const std::string grid = emit_grid(sample_table(), 1);
  CHECK(grid == "0 | 1\n1 | 1 0\n2 | 0 1 0\n");
}

TEST_CASE("check tables render in all three formats", "[emit]") {
  check_table t;
  t.kind = "verify-systems";
  t.checks.push_back({"first, with a comma", true, ""});
  t.checks.push_back({"second", false, "first failing coefficient at x^2: -1"});
  CHECK_FALSE(t.all_passed());

  const std::string plain = emit_plain(t);
  CHECK(plain == "PASS first, with a comma\n"
                 "FAIL second: first failing coefficient at x^2: -1\n");

  const std::string csv = emit_csv(t);
  CHECK(csv == "check,status,detail\n"
               "\"first, with a comma\",pass,\n"
               "second,fail,first failing coefficient at x^2: -1\n");

  auto doc = nlohmann::json::parse(emit_json(t));
  CHECK(doc.at("checks").size() == 2);
  CHECK(doc.at("checks")[1].at("passed") == false);
}

TEST_CASE("format names parse", "[emit]") {
  CHECK(parse_format("csv") == output_format::csv);
  CHECK(parse_format("plain") == output_format::plain);
  CHECK(parse_format("json") == output_format::json);
  CHECK(!parse_format("xml").has_value());
}
