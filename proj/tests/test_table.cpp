#include <doctest.h>

#include <set>

#include "skeinkit/error.hpp"
#include "skeinkit/report.hpp"
#include "skeinkit/table.hpp"

using namespace skeinkit;

TEST_SUITE("table") {
  TEST_CASE("bundled table") {
    const auto entries = load_table(SKEINKIT_DATA_DIR "/knots.jsonl");
    CHECK(entries.size() >= 6);
    std::set<std::string> names;
    for (const auto& e : entries) names.insert(e.name);
    for (const char* n : {"3_1", "4_1", "5_1", "7_4", "10_132", "hopf"}) CHECK(names.count(n) == 1);
  }

  TEST_CASE("virtual table") {
    const auto entries = load_table(SKEINKIT_DATA_DIR "/virtual.jsonl");
    REQUIRE_FALSE(entries.empty());
    for (const auto& e : entries) CHECK(e.diagram.has_virtual());
  }

  TEST_CASE("empty input") {
    CHECK(parse_table("").empty());
    CHECK(parse_table("\n\n  \n").empty());
  }

  TEST_CASE("duplicate names") {
    const std::string line = R"({"name": "k", "pd": [[1,5,2,4],[3,1,4,6],[5,3,6,2]]})";
    CHECK_THROWS_AS(parse_table(line + "\n" + line + "\n"), ParseError);
  }

  TEST_CASE("errors carry line numbers") {
    const std::string text = "{\"name\": \"a\", \"pd\": []  , \"unknots\": 1}\n\n{\"name\": \"b\", \"pd\": [[1,2,3]]}\n";
    try {
      parse_table(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_table("not json"), ParseError);
    CHECK_THROWS_AS(parse_table(R"({"name": "x", "pd": [], "colour": 1})"), ParseError);
    CHECK_THROWS_AS(parse_table(R"({"pd": []})"), ParseError);
    CHECK_THROWS_AS(parse_table(R"({"name": "x", "pd": [[1,2,3,4]], "kinds": ["Q"]})"), ParseError);
  }

  TEST_CASE("kinds and unknots") {
    const auto e = parse_table(R"({"name": "v", "pd": [[1,4,2,3],[2,3,1,4]], "kinds": ["X+", "P"], "unknots": 1})");
    REQUIRE(e.size() == 1);
    CHECK(e[0].diagram.classical_count() == 1);
    CHECK(e[0].diagram.unknots() == 1);
    CHECK(e[0].line == 1);
  }

  TEST_CASE("entries round-trip through JSON") {
    for (const auto& e : load_table(SKEINKIT_DATA_DIR "/knots.jsonl")) {
      const auto j = entry_to_json(e.name, e.diagram, e.expected);
      const auto back = parse_table(j.dump());
      REQUIRE(back.size() == 1);
      CHECK(back[0].diagram == e.diagram);
      CHECK(back[0].expected == e.expected);
    }
  }

  TEST_CASE("inline and file diagram sources") {
    CHECK(load_diagram(SKEINKIT_DATA_DIR "/7_4.pd").crossing_count() == 7);
    CHECK(load_diagram("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").writhe() == 3);
    CHECK_THROWS_AS(load_diagram("X[1,2,3]"), ParseError);
  }
}

TEST_SUITE("report") {
  TEST_CASE("invariant reports round-trip") {
    const Diagram t = load_diagram(SKEINKIT_DATA_DIR "/trefoil_r.pd");
    for (auto kind : {InvariantKind::kauffman, InvariantKind::jones, InvariantKind::enhanced, InvariantKind::nor,
                      InvariantKind::tricolor, InvariantKind::tri}) {
      const auto r = compute_report("trefoil", t, kind);
      CHECK(invariant_report_from_json(to_json(r)) == r);
      CHECK(invariant_report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
      CHECK_FALSE(to_text(r).empty());
    }
  }

  TEST_CASE("report values") {
    const Diagram t = load_diagram(SKEINKIT_DATA_DIR "/trefoil_r.pd");
    const auto k = compute_report("t", t, InvariantKind::kauffman);
    REQUIRE(k.values.size() == 1);
    CHECK(k.values[0].value == "-1*A^5 + -1*A^-3 + 1*A^-7");
    CHECK(k.writhe == 3);
    CHECK(compute_report("t", t, InvariantKind::tri).values[0].value == "9");
    CHECK(compute_report("t", t, InvariantKind::enhanced).values.size() == 2);
    CHECK(compute_report("t", t, InvariantKind::tricolor).values.size() == 9);
  }

  TEST_CASE("diagnostics surface as errors") {
    CHECK_THROWS_AS(compute_report("v", parse_pd("X+[1,4,2,3] P[2,3,1,4]"), InvariantKind::enhanced), ColoringError);
  }

  TEST_CASE("constraint reports round-trip") {
    const auto r = verify_r2_equations(make_nor_scheme());
    const auto j = to_json(r);
    REQUIRE(j.is_array());
    CHECK(j.size() == 16);
    CHECK(j[0].contains("eq"));
    CHECK(j[0].contains("residual"));
    CHECK(j[0].contains("ok"));
    const auto back = constraint_report_from_json(j);
    REQUIRE(back.entries.size() == r.entries.size());
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      CHECK(back.entries[i].id == r.entries[i].id);
      CHECK(back.entries[i].residual == r.entries[i].residual);
      CHECK(back.entries[i].ok == r.entries[i].ok);
    }
  }

  TEST_CASE("move reports serialize") {
    const Diagram t = load_diagram(SKEINKIT_DATA_DIR "/trefoil_r.pd");
    const auto moves = enumerate_moves(t, MoveKind::r1_add);
    const auto j = to_json(move_invariance_check(t, {moves.front()}, InvariantKind::enhanced));
    CHECK(j.dump().find("enhanced") != std::string::npos);
  }
}
