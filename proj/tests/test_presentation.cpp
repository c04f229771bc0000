#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hh/presentation.hpp"

using hh::ClassReport;
using hh::ParseError;
using hh::Path;
using hh::Presentation;
using hhtest::fixture_bundle;
using hhtest::path_of;

TEST_SUITE_BEGIN("presentation");

TEST_CASE("parses the running example") {
  const Presentation& p = fixture_bundle("E5").pres;
  CHECK(p.quiver().vertex_count() == 5);
  CHECK(p.quiver().arrow_count() == 6);
  CHECK(p.relations().size() == 5);
  int a1 = p.quiver().arrow_index("a1");
  int a2 = p.quiver().arrow_index("a2");
  int b = p.quiver().arrow_index("b");
  CHECK(p.has_relation(a1, a2));
  CHECK(p.has_relation(a1, b));
  CHECK_FALSE(p.has_relation(a2, a1));
  // successor/predecessor views agree with the relation set
  CHECK(p.rel_successors(a1).size() == 2);
  CHECK(p.rel_predecessors(b) == std::vector<int>{a1});
}

TEST_CASE("parse errors carry position") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      hh::parse_presentation(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col >= 1);
    }
  };
  expect_error("vertices: 1 2\nfrobnicate: a 1 2\n", 2);
  expect_error("vertices: 1 2\narrow: a 1 3\n", 2);           // unknown vertex
  expect_error("vertices: 1 1\n", 1);                          // duplicate id
  expect_error("vertices: 1 2\narrow: a 1 2\narrow: a 2 1\n", 3);   // id reused
  expect_error("vertices: 1 2\narrow: a 1 2\nrelation: a a\n", 3);  // not composable
  expect_error("vertices: 1 2\narrow: a 1 2\nrelation: a b\n", 3);  // unknown arrow
  expect_error("vertices: 1 2\narrow: a 1 2\nrelation: a\n", 3);    // arity
  // acyclicity is a whole-presentation check; only the error type is pinned
  CHECK_THROWS_AS(hh::parse_presentation("vertices: 1 2\narrow: a 1 2\narrow: b 2 1\n"),
                  ParseError);
}

TEST_CASE("duplicate relations rejected") {
  CHECK_THROWS_AS(hh::parse_presentation("vertices: 1 2 3\n"
                                         "arrow: a 1 2\narrow: b 2 3\n"
                                         "relation: a b\nrelation: a b\n"),
                  ParseError);
}

TEST_CASE("emit round-trips every fixture") {
  for (const auto& name : hhtest::fixture_names()) {
    const Presentation& p = fixture_bundle(name).pres;
    Presentation q = hh::parse_presentation(p.emit());
    CHECK(q.emit() == p.emit());
    CHECK(q.digest() == p.digest());
    CHECK(p.digest().size() == 16);
  }
}

TEST_CASE("field directive survives the round trip") {
  Presentation p = hh::parse_presentation("vertices: 1 2\narrow: a 1 2\nfield: F7\n");
  CHECK(p.field().p == 7);
  CHECK(hh::parse_presentation(p.emit()).field().p == 7);
}

TEST_CASE("classification of the fixtures") {
  auto flags = [](const std::string& name) { return hh::classify(fixture_bundle(name).pres); };

  ClassReport e5 = flags("E5");
  CHECK(e5.triangular);
  CHECK(e5.s2);
  CHECK(e5.s3);
  CHECK(e5.string_algebra);
  CHECK_FALSE(e5.g1);  // a1 starts two relations
  CHECK_FALSE(e5.gentle);

  for (const char* name : {"A2", "A3R", "D3", "K2", "SD3", "SD3M"}) {
    ClassReport r = flags(name);
    CHECK(r.gentle);
    CHECK(r.string_algebra);
  }
}

TEST_CASE("classification witnesses name a violating tuple") {
  // two relation-free ways into z
  Presentation p = hh::parse_presentation(
      "vertices: 1 2 3\narrow: x 1 2\narrow: y 1 2\narrow: z 2 3\n");
  ClassReport r = hh::classify(p);
  CHECK(r.triangular);
  CHECK_FALSE(r.s3);
  CHECK(r.witnesses.count("s3") == 1);
  CHECK_FALSE(r.string_algebra);

  // more than two arrows out of one vertex
  Presentation wide = hh::parse_presentation(
      "vertices: 1 2\narrow: a 1 2\narrow: b 1 2\narrow: c 1 2\n");
  ClassReport rw = hh::classify(wide);
  CHECK_FALSE(rw.s2);
  CHECK(rw.witnesses.count("s2") == 1);
}

TEST_CASE("path helpers and composition") {
  const Presentation& p = fixture_bundle("E5").pres;
  Path a1 = path_of(p, "a1");
  Path a2 = path_of(p, "a2");
  Path e1 = path_of(p, "e_1");
  CHECK(p.label(e1) == "e_1");
  CHECK(p.label(path_of(p, "a1 a2")) == "a1 a2");
  CHECK(p.valid_path(path_of(p, "a1 a2")));
  CHECK_FALSE(p.valid_path(Path{0, {p.quiver().arrow_index("a2")}}));  // wrong source

  auto both = hh::compose(p, a1, a2);
  REQUIRE(both.has_value());  // composition is in the path algebra, relations play no part
  CHECK(both->length() == 2);
  CHECK_FALSE(hh::compose(p, a2, a1).has_value());  // endpoint mismatch
  auto left_unit = hh::compose(p, e1, a1);
  REQUIRE(left_unit.has_value());
  CHECK(*left_unit == a1);
}

TEST_CASE("topological order respects arrows") {
  const Presentation& p = fixture_bundle("E5").pres;
  for (const auto& a : p.quiver().arrows) {
    CHECK(p.quiver().topo_rank[a.source] < p.quiver().topo_rank[a.target]);
  }
}

TEST_SUITE_END();
