#include <doctest.h>

#include "skeinkit/bracket.hpp"
#include "skeinkit/error.hpp"
#include "skeinkit/moves.hpp"

using namespace skeinkit;

namespace {
constexpr const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
constexpr const char* kFigureEight = "X[8,5,1,6] X[4,1,5,2] X[2,8,3,7] X[6,4,7,3]";
}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("R1 on the bare unknot") {
    const Diagram u = parse_pd("", 1);
    for (int sign : {1, -1}) {
      for (bool over_first : {false, true}) {
        MoveSpec m;
        m.kind = MoveKind::r1_add;
        m.circle = 0;
        m.sign = sign;
        m.over_first = over_first;
        const Diagram k = apply_move(u, m);
        CHECK(k.crossing_count() == 1);
        CHECK(k.writhe() == sign);
        CHECK(k.component_count() == 1);
        CHECK(k.unknots() == 0);
        const auto removals = enumerate_moves(k, MoveKind::r1_remove);
        REQUIRE_FALSE(removals.empty());
        CHECK(isomorphic(apply_move(k, removals.front()), u));
      }
    }
  }

  TEST_CASE("R1 changes the bracket by the kink factor") {
    const Diagram t = parse_pd(kTrefoil);
    const auto vars = kauffman_variables();
    const auto before = kauffman_bracket(t);
    for (const auto& m : enumerate_moves(t, MoveKind::r1_add)) {
      const Diagram k = apply_move(t, m);
      const auto factor = LaurentPoly::monomial(vars, -1, {3 * m.sign, 0, 0, 0, 0});
      CHECK(kauffman_bracket(k) == factor * before);
      CHECK(k.writhe() == t.writhe() + m.sign);
    }
  }

  TEST_CASE("R2 add then remove is the identity") {
    for (const char* pd : {kTrefoil, kFigureEight}) {
      const Diagram d = parse_pd(pd);
      const auto adds = enumerate_moves(d, MoveKind::r2_add);
      REQUIRE_FALSE(adds.empty());
      for (const auto& m : adds) {
        const Diagram e = apply_move(d, m);
        CHECK(e.crossing_count() == d.crossing_count() + 2);
        CHECK(e.writhe() == d.writhe());
        CHECK(kauffman_bracket(e) == kauffman_bracket(d));
        bool back = false;
        for (const auto& r : enumerate_moves(e, MoveKind::r2_remove)) {
          if (isomorphic(apply_move(e, r), d)) back = true;
        }
        CHECK(back);
      }
    }
  }

  TEST_CASE("R2 on a bare circle") {
    MoveSpec m;
    m.kind = MoveKind::r2_add;
    m.circle = 0;
    const Diagram e = apply_move(parse_pd("", 1), m);
    CHECK(e.crossing_count() == 2);
    CHECK(e.component_count() == 1);
    CHECK(e.writhe() == 0);
    CHECK(kauffman_bracket(e) == LaurentPoly::constant(kauffman_variables(), 1));
  }

  TEST_CASE("R3 keeps the crossing count and the bracket") {
    const Diagram t = parse_pd(kTrefoil);
    int applied = 0;
    for (const auto& add : enumerate_moves(t, MoveKind::r2_add)) {
      const Diagram e = apply_move(t, add);
      for (const auto& m : enumerate_moves(e, MoveKind::r3)) {
        const Diagram r = apply_move(e, m);
        CHECK(r.crossing_count() == e.crossing_count());
        CHECK(r.writhe() == e.writhe());
        CHECK(r.component_count() == e.component_count());
        CHECK(kauffman_bracket(r) == kauffman_bracket(e));
        ++applied;
      }
    }
    CHECK(applied > 0);
  }

  TEST_CASE("inapplicable sites are rejected") {
    const Diagram t = parse_pd(kTrefoil);
    MoveSpec m;
    m.kind = MoveKind::r1_remove;
    m.crossing = 0;
    CHECK_THROWS_AS(apply_move(t, m), MoveError);
    m.kind = MoveKind::r2_remove;
    m.crossing = 0;
    m.crossing2 = 1;
    CHECK_THROWS_AS(apply_move(t, m), MoveError);
    m.kind = MoveKind::r3;
    m.face = 999;
    CHECK_THROWS_AS(apply_move(t, m), MoveError);
    // The trefoil is alternating: no triangle face can be moved.
    CHECK(enumerate_moves(t, MoveKind::r3).empty());
  }

  TEST_CASE("faces satisfy Euler's formula") {
    for (const char* pd : {kTrefoil, kFigureEight}) {
      const Diagram d = parse_pd(pd);
      // Connected 4-valent planar graph: V - E + F = 2 with E = 2V.
      CHECK(static_cast<int>(faces(d).size()) == d.crossing_count() + 2);
    }
  }

  TEST_CASE("canonical form ignores labels and crossing order") {
    const Diagram a = parse_pd(kTrefoil);
    const Diagram b = parse_pd("X[3,7,4,6] X[5,3,6,8] X[7,5,8,4]");
    CHECK(isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(renumber(a)));
    CHECK_FALSE(isomorphic(a, a.mirror()));
    CHECK_FALSE(isomorphic(a, parse_pd(kFigureEight)));
  }

  TEST_CASE("random walks are deterministic and keep components") {
    const Diagram t = parse_pd(kTrefoil);
    const std::vector<MoveKind> kinds{MoveKind::r1_add, MoveKind::r1_remove, MoveKind::r2_add, MoveKind::r2_remove,
                                      MoveKind::r3};
    const auto w1 = random_move_walk(t, kinds, 20, 7);
    const auto w2 = random_move_walk(t, kinds, 20, 7);
    REQUIRE(w1.size() == w2.size());
    for (std::size_t i = 0; i < w1.size(); ++i) CHECK(describe(w1[i]) == describe(w2[i]));
    Diagram cur = t;
    for (const auto& m : w1) {
      cur = apply_move(cur, m);
      CHECK(cur.component_count() == 1);
      CHECK(cur.crossing_count() <= t.crossing_count() + 4);
      CHECK(kauffman_f(cur) == kauffman_f(t));
    }
  }
}
