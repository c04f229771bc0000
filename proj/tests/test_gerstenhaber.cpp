#include <set>
#include <utility>

#include "doctest.h"
#include "helpers.hpp"
#include "hh/gerstenhaber.hpp"

using hh::bracket;
using hh::circ;
using hh::circ_at;
using hh::Cochain;
using hh::CohomologyClass;
using hh::cup;
using hh::Variant;
using hhtest::elem;
using hhtest::fixture_bundle;
using hhtest::inline_bundle;
using hhtest::unit_coboundary;

namespace {

// gentle, with a one-element top cochain space; the smallest quiver found by
// randomized search where the substitution bracket leaves the coboundaries
const char* kGentle45 =
    "vertices: 1 2 3 4\n"
    "arrow: a1 1 2\n"
    "arrow: a2 1 2\n"
    "arrow: a3 2 3\n"
    "arrow: a4 3 4\n"
    "arrow: a5 3 4\n"
    "relation: a1 a3\n"
    "relation: a3 a5\n";

// plain quadratic (two relation-free routes into a2), same phenomenon in
// degree one
const char* kQuad48 =
    "vertices: 1 2 3 4\n"
    "arrow: a1 1 2\n"
    "arrow: a2 2 4\n"
    "arrow: a3 1 4\n"
    "arrow: a4 1 2\n"
    "arrow: a5 2 4\n"
    "arrow: a6 1 4\n"
    "arrow: a7 3 4\n"
    "arrow: a8 1 2\n"
    "relation: a1 a5\n"
    "relation: a4 a2\n"
    "relation: a4 a5\n"
    "relation: a8 a5\n";

Cochain indicator_of(const hhtest::Bundle& b, const char* arrow) {
  return hh::arrow_indicator(b.cx, b.pres.quiver().arrow_index(arrow));
}

}  // namespace

TEST_SUITE_BEGIN("gerstenhaber");

TEST_CASE("substitution product, slot by slot") {
  auto& b = fixture_bundle("E5");
  Cochain f2 = elem(b, 2, "a2 a3", "b");
  Cochain f3 = elem(b, 3, "a1 b a4", "g");
  Cochain f4 = elem(b, 4, "a1 a2 a3 a4", "g");

  // only the middle slot accepts the inserted b
  CHECK(circ_at(b.cx, f3, f2, 1).zero());
  CHECK(cochain_equal(circ_at(b.cx, f3, f2, 2), f4));
  CHECK(circ_at(b.cx, f3, f2, 3).zero());

  // signed sum: slot 2 of an even-degree insertion flips
  CHECK(cochain_equal(circ(b.cx, f3, f2), hhtest::scaled(b, -1, f4)));
  CHECK(circ(b.cx, f2, f3).zero());

  CHECK(cochain_equal(bracket(b.cx, f2, f3), f4));
  CHECK(cochain_equal(bracket(b.cx, f3, f2), hhtest::scaled(b, -1, f4)));

  CHECK_THROWS_AS(circ_at(b.cx, f3, f2, 0), std::out_of_range);
  CHECK_THROWS_AS(circ_at(b.cx, f3, f2, 4), std::out_of_range);
}

TEST_CASE("bracket antisymmetry is exact at cochain level") {
  for (const char* name : {"E5", "SD3"}) {
    auto& b = fixture_bundle(name);
    for (int n = 1; n <= b.cx.top_degree(); ++n) {
      for (int m = 1; m <= b.cx.top_degree(); ++m) {
        for (int i = 0; i < b.cx.dim(n); ++i) {
          for (int j = 0; j < b.cx.dim(m); ++j) {
            Cochain f = hh::cochain_unit(n, i, b.pres.field().from_int(1));
            Cochain g = hh::cochain_unit(m, j, b.pres.field().from_int(1));
            for (auto v : {Variant::literal, Variant::peeled}) {
              Cochain lhs = bracket(b.cx, f, g, v);
              Cochain rhs = bracket(b.cx, g, f, v);
              long long sign = ((n - 1) * (m - 1)) % 2 == 0 ? -1 : 1;
              CHECK(cochain_equal(lhs, hhtest::scaled(b, sign, rhs)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("degree-zero insertions vanish") {
  auto& b = fixture_bundle("E5");
  Cochain f2 = elem(b, 2, "a2 a3", "b");
  const Cochain& unit0 = b.H.basis(0)[0].representative;
  CHECK(circ(b.cx, f2, unit0).zero());
  CHECK(circ(b.cx, unit0, f2).zero());
  CHECK(bracket(b.cx, f2, unit0).zero());
}

TEST_CASE("variants agree when every value is one arrow") {
  auto& b = fixture_bundle("E5");
  for (int n = 1; n <= b.cx.top_degree(); ++n) {
    for (int m = 1; m <= b.cx.top_degree(); ++m) {
      for (int i = 0; i < b.cx.dim(n); ++i) {
        for (int j = 0; j < b.cx.dim(m); ++j) {
          Cochain f = hh::cochain_unit(n, i, b.pres.field().from_int(1));
          Cochain g = hh::cochain_unit(m, j, b.pres.field().from_int(1));
          CHECK(cochain_equal(bracket(b.cx, f, g, Variant::literal),
                              bracket(b.cx, f, g, Variant::peeled)));
        }
      }
    }
  }
}

TEST_CASE("cup satisfies the Leibniz rule with companion sign") {
  // delta(f u g) = delta f u g + (-1)^n f u delta g, checked exactly; this
  // identity is what pushes the cup product down to the quotient
  for (const std::string& key : {std::string("E5"), std::string("D3"), std::string("SD3"),
                                 std::string("quad48")}) {
    auto& b = key == "quad48" ? inline_bundle("quad48", kQuad48) : fixture_bundle(key);
    for (int n = 1; n <= b.cx.top_degree(); ++n) {
      for (int m = 1; m <= b.cx.top_degree(); ++m) {
        for (int i = 0; i < b.cx.dim(n); ++i) {
          for (int j = 0; j < b.cx.dim(m); ++j) {
            Cochain f = hh::cochain_unit(n, i, b.pres.field().from_int(1));
            Cochain g = hh::cochain_unit(m, j, b.pres.field().from_int(1));
            Cochain lhs = b.cx.apply_delta(cup(b.cx, f, g));
            Cochain rhs = cup(b.cx, b.cx.apply_delta(f), g);
            Cochain mixed = cup(b.cx, f, b.cx.apply_delta(g));
            rhs = cochain_add(rhs, hhtest::scaled(b, n % 2 == 0 ? 1 : -1, mixed),
                              b.pres.field());
            CHECK(cochain_equal(lhs, rhs));
          }
        }
      }
    }
  }
}

TEST_CASE("cup table of the running example is trivial") {
  auto& b = fixture_bundle("E5");
  hh::ProductTable t = ring_table(b.H);
  CHECK(t.kind == hh::ProductTable::Kind::cup);
  CHECK(t.trivial);
  for (const auto& e : t.entries) CHECK(e.value.zero());
}

TEST_CASE("unit class is a two-sided cup identity") {
  auto& b = fixture_bundle("E5");
  const CohomologyClass& one = b.H.basis(0)[0];
  for (int n = 0; n <= b.cx.top_degree(); ++n) {
    for (const auto& cls : b.H.basis(n)) {
      CHECK(induced_cup(b.H, one, cls).coordinates == cls.coordinates);
      CHECK(induced_cup(b.H, cls, one).coordinates == cls.coordinates);
    }
  }
}

TEST_CASE("bracket table of the running example") {
  auto& b = fixture_bundle("E5");
  hh::ProductTable t = lie_table(b.H);
  CHECK_FALSE(t.trivial);

  // positive-degree generators in session order: (a1|a1), (a2|a2) in degree
  // one, then one generator each in degrees two, three, four
  using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
  std::set<Key> nonzero;
  for (const auto& e : t.entries) {
    if (!e.value.zero()) nonzero.insert({{e.deg_a, e.idx_a}, {e.deg_b, e.idx_b}});
  }
  std::set<Key> expected = {
      {{1, 1}, {2, 0}}, {{2, 0}, {1, 1}},  // (a2|a2) moves the degree-2 class
      {{1, 0}, {3, 0}}, {{3, 0}, {1, 0}},  // (a1|a1) moves the degree-3 class
      {{1, 0}, {4, 0}}, {{4, 0}, {1, 0}},  // and the top class
      {{1, 1}, {4, 0}}, {{4, 0}, {1, 1}},
      {{2, 0}, {3, 0}}, {{3, 0}, {2, 0}},  // the cross-degree pair
  };
  CHECK(nonzero == expected);

  // transposed entries carry opposite coordinates here: every nonzero pair
  // has (n-1)(m-1) even
  for (const auto& e : t.entries) {
    if (e.value.zero()) continue;
    for (const auto& e2 : t.entries) {
      if (e2.deg_a == e.deg_b && e2.idx_a == e.idx_b && e2.deg_b == e.deg_a &&
          e2.idx_b == e.idx_a) {
        REQUIRE(e.value.coordinates.size() == e2.value.coordinates.size());
        for (size_t k = 0; k < e.value.coordinates.size(); ++k) {
          CHECK(e.value.coordinates[k] == -e2.value.coordinates[k]);
        }
      }
    }
  }

  // degree-(>1) rows include one nonzero pair, so the cutoff verdicts differ
  CHECK_FALSE(table_trivial_above(t, 1));
  CHECK(table_trivial_above(t, 2));
}

TEST_CASE("gentle fixtures have zero products above degree one") {
  auto& b = fixture_bundle("D3");
  for (auto v : {Variant::literal, Variant::peeled}) {
    hh::ProductTable t = lie_table(b.H, v);
    CHECK(table_trivial_above(t, 1));
  }
  // and the vanishing already happens on cochains for the default reading
  for (int i = 0; i < b.cx.dim(2); ++i) {
    for (int j = 0; j < b.cx.dim(2); ++j) {
      Cochain f = hh::cochain_unit(2, i, b.pres.field().from_int(1));
      Cochain g = hh::cochain_unit(2, j, b.pres.field().from_int(1));
      for (int slot = 1; slot <= 2; ++slot) {
        CHECK(circ_at(b.cx, f, g, slot, Variant::literal).zero());
      }
    }
  }
}

TEST_CASE("first-arrow indicators reproduce their cochain") {
  for (const char* name : {"E5", "D3"}) {
    auto& b = fixture_bundle(name);
    for (int n = 2; n <= b.cx.top_degree(); ++n) {
      for (int i = 0; i < b.cx.dim(n); ++i) {
        Cochain f = hh::cochain_unit(n, i, b.pres.field().from_int(1));
        int first = b.cx.basis(n)[i].chain.arrows.front();
        Cochain g = hh::arrow_indicator(b.cx, first);
        CHECK(b.H.is_cocycle(g));
        CHECK(cochain_equal(circ(b.cx, f, g), f));
        CHECK(circ(b.cx, g, f).zero());
        CHECK(cochain_equal(bracket(b.cx, f, g), f));
        CHECK_FALSE(b.H.class_of(g).zero());
      }
    }
  }
}

TEST_CASE("an indicator can still be a coboundary") {
  // both arrows out of vertex 2 leave together, so the indicator of al is
  // delta of the characteristic function of {2, 3}
  auto& b = fixture_bundle("SD3");
  CHECK(b.H.is_coboundary(indicator_of(b, "al")));
  auto& e5 = fixture_bundle("E5");
  CHECK_FALSE(e5.H.is_coboundary(indicator_of(e5, "a1")));
}

TEST_CASE("substitution brackets do not always leave the coboundaries") {
  // regression pin for a genuine gap: inserting a degree-1 cochain must act
  // on a value path as a derivation to commute with delta, but slot
  // substitution keeps at most the leading term. The witnesses below were
  // found by the fuzzer and verified by hand.
  auto& b = inline_bundle("gentle45", kGentle45);
  REQUIRE(hh::classify(b.pres).gentle);
  Cochain z3 = elem(b, 3, "a1 a3 a5", "a2 a3 a4");
  REQUIRE(b.H.is_cocycle(z3));
  REQUIRE_FALSE(b.H.class_of(z3).zero());

  Cochain lit = bracket(b.cx, z3, unit_coboundary(b, "1"), Variant::literal);
  CHECK(cochain_equal(lit, hhtest::scaled(b, -1, z3)));
  CHECK_FALSE(b.H.class_of(lit).zero());  // a coboundary argument, a nonzero class out

  Cochain peel = bracket(b.cx, z3, unit_coboundary(b, "4"), Variant::peeled);
  CHECK(cochain_equal(peel, z3));
  CHECK_FALSE(b.H.class_of(peel).zero());

  // the same leading-term truncation in plain quadratic, one degree down
  auto& q = inline_bundle("quad48", kQuad48);
  Cochain z = elem(q, 1, "a3", "a1 a2");
  REQUIRE(q.H.is_cocycle(z));
  REQUIRE_FALSE(q.H.class_of(z).zero());
  Cochain qlit = bracket(q.cx, z, unit_coboundary(q, "1"), Variant::literal);
  CHECK(cochain_equal(qlit, hhtest::scaled(q, -1, z)));
  CHECK_FALSE(q.H.class_of(qlit).zero());

  // cup has no such gap: the same pairings stay inside the coboundaries
  CHECK(q.H.is_coboundary(cup(q.cx, z, unit_coboundary(q, "1"))));
  CHECK(q.H.is_coboundary(cup(q.cx, unit_coboundary(q, "1"), z)));
}

TEST_CASE("induced bracket of the mid-degree generators is the top class") {
  auto& b = fixture_bundle("E5");
  const CohomologyClass& c2 = b.H.basis(2)[0];
  const CohomologyClass& c3 = b.H.basis(3)[0];
  CohomologyClass out = induced_bracket(b.H, c2, c3);
  CHECK(out.degree == 4);
  CHECK_FALSE(out.zero());
}

TEST_SUITE_END();
