#include <doctest.h>

#include <algorithm>
#include <set>

#include "skeinkit/axioms.hpp"
#include "skeinkit/error.hpp"

using namespace skeinkit;

namespace {

LaurentPoly E(const std::string& s) { return LaurentPoly::parse(enhanced_variables(), s); }

using Row = std::array<LoopPair, 8>;

// Published loop counts (D_i / D'_i) for the five outside patterns, columns
// a1a2a3, a1a2b3, ..., b1b2b3.
const std::array<Row, 5> kReference{{
    {{{4, 2}, {3, 1}, {3, 1}, {2, 2}, {3, 1}, {2, 2}, {2, 2}, {1, 3}}},
    {{{2, 4}, {1, 3}, {1, 3}, {2, 2}, {1, 3}, {2, 2}, {2, 2}, {3, 1}}},
    {{{3, 3}, {2, 2}, {2, 2}, {3, 3}, {2, 2}, {1, 1}, {1, 1}, {2, 2}}},
    {{{3, 3}, {2, 2}, {2, 2}, {1, 1}, {2, 2}, {1, 1}, {3, 3}, {2, 2}}},
    {{{3, 3}, {2, 2}, {2, 2}, {1, 1}, {2, 2}, {3, 3}, {1, 1}, {2, 2}}},
}};

std::multiset<Row> rows_of(const LoopTable& t) { return {t.begin(), t.end()}; }

}  // namespace

TEST_SUITE("axioms") {
  TEST_CASE("equation systems have the expected size") {
    CHECK(r2_equations().size() == 16);
    CHECK(r3_equations().size() == 20);
    std::set<std::string> ids;
    for (const auto& e : r2_equations()) ids.insert(e.id);
    for (const auto& e : r3_equations()) ids.insert(e.id);
    CHECK(ids.size() == 36);
  }

  TEST_CASE("equation parser") {
    const Equation e = parse_equation("t", "a_w*b'_e + b_w*a'_e + b_w*b'_e*d = 0");
    CHECK(e.lhs.size() == 3);
    CHECK(e.rhs.size() == 1);
    CHECK(e.lhs[2] == Product{"b_w", "b'_e", "d"});
    CHECK_THROWS_AS(parse_equation("bad", "a_w*b'_e"), ParseError);
    CHECK_THROWS_AS(parse_equation("bad", "a_q = 1"), ParseError);
  }

  TEST_CASE("symbolic scheme satisfies everything") {
    const auto s = make_symbolic_scheme();
    const auto r2 = verify_r2_equations(s), r3 = verify_r3_equations(s);
    CHECK(r2.satisfied() == 16);
    CHECK(r3.satisfied() == 20);
    for (const auto& e : r2.entries) CHECK(e.residual == "0");
    for (int c = 0; c < 5; ++c) CHECK(verify_out_equation(c, s).ok);
  }

  TEST_CASE("nor scheme satisfies everything") {
    const auto s = make_nor_scheme();
    CHECK(verify_r2_equations(s).all_ok());
    CHECK(verify_r3_equations(s).all_ok());
    for (int c = 0; c < 5; ++c) CHECK(verify_out_equation(c, s).ok);
    // Two sample identities evaluated by hand in F8.
    const F8 t = F8::t(), one = F8::one(), tt = F8::parse("1+t^2");
    CHECK(tt * t == one);
    CHECK(tt * one + one * t + one * F8::parse("1+t+t^2") == F8::zero());
    CHECK(s.named("b_n") * s.named("b'_w") * s.named("a_e") == one);
    CHECK(s.named("b_s") * s.named("b'_e") * s.named("a_w") == one);
  }

  TEST_CASE("doubling b_n breaks the R2 system") {
    auto s = make_symbolic_scheme();
    s.named("b_n") = s.named("b_n") * E("2");
    const auto r2 = verify_r2_equations(s);
    CHECK_FALSE(r2.all_ok());
    CHECK(r2.satisfied() < 16);
  }

  TEST_CASE("swapping e and w on one side breaks mixed equations") {
    auto s = make_symbolic_scheme();
    std::swap(s.at(Direction::E, -1), s.at(Direction::W, -1));
    CHECK_FALSE(verify_r3_equations(s).all_ok());
  }

  TEST_CASE("perturbing a_n breaks a closure equation") {
    auto s = make_symbolic_scheme();
    s.named("a_n") = s.named("a_n") * E("a");
    bool any_fail = false;
    for (int c = 0; c < 5; ++c) any_fail = any_fail || !verify_out_equation(c, s).ok;
    CHECK(any_fail);
  }

  TEST_CASE("kink factors") {
    const auto [p, n] = kink_factors(make_symbolic_scheme());
    CHECK(p == E("-n*a^2*b^-1"));
    CHECK(n == E("-b*n^-1*a^-2"));
    CHECK(p * n == E("1"));
    const auto [fp, fn] = kink_factors(make_nor_scheme());
    CHECK(fp == F8::parse("1 + t^2"));
    CHECK(fn == F8::t());
    CHECK(fp * fn == F8::one());
  }

  TEST_CASE("all-dotted tangle types") {
    const auto l = tangle_dotted_types(omega3a_left());
    const auto r = tangle_dotted_types(omega3a_right());
    REQUIRE(l.size() == 3);
    REQUIRE(r.size() == 3);
    std::string ls, rs;
    for (const auto& t : l) ls += to_string(t) + " ";
    for (const auto& t : r) rs += to_string(t) + " ";
    CHECK(ls == "S+ S- S+ ");
    CHECK(rs == "N+ N- N+ ");
  }

  TEST_CASE("matchings are the five non-crossing pairings") {
    const auto& ms = planar_matchings();
    std::set<std::vector<std::pair<int, int>>> distinct;
    for (const auto& m : ms) {
      std::vector<std::pair<int, int>> v(m.begin(), m.end());
      std::sort(v.begin(), v.end());
      distinct.insert(v);
      for (const auto& [a, b] : m) {
        for (const auto& [c, e] : m) {
          if (a == c) continue;
          // Chords (a,b) and (c,e) on a circle cross iff exactly one of c,e lies strictly between a and b.
          const int lo = std::min(a, b), hi = std::max(a, b);
          const bool c_in = c > lo && c < hi, e_in = e > lo && e < hi;
          CHECK(c_in == e_in);
        }
      }
    }
    CHECK(distinct.size() == 5);
  }

  TEST_CASE("loop table matches the reference rows") {
    const LoopTable t = r3_loop_table();
    CHECK(rows_of(t) == std::multiset<Row>(kReference.begin(), kReference.end()));
    // Spot values by pattern content.
    CHECK(t[0][0] == LoopPair{4, 2});
    CHECK(t[1][7] == LoopPair{3, 1});
  }

  TEST_CASE("invariant kinds") {
    for (const char* n : {"kauffman", "jones", "enhanced", "nor", "tricolor", "tri"}) {
      CHECK(invariant_kind_name(invariant_kind_from_string(n)) == n);
    }
    CHECK_THROWS_AS(invariant_kind_from_string("homfly"), ParseError);
  }

  TEST_CASE("move invariance reports") {
    const Diagram t = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const auto moves = enumerate_moves(t, MoveKind::r1_add);
    const auto rep = move_invariance_check(t, {moves.front()}, InvariantKind::enhanced);
    CHECK(rep.all_equal());
    CHECK(rep.checks.size() == 1);
    const Diagram u = parse_pd("", 1);
    MoveSpec r2;
    r2.kind = MoveKind::r2_add;
    r2.circle = 0;
    CHECK(move_invariance_check(u, {r2}, InvariantKind::tricolor).all_equal());
    // Kauffman bracket is not invariant under R1.
    CHECK_FALSE(move_invariance_check(t, {moves.front()}, InvariantKind::kauffman).all_equal());
    MoveSpec bad;
    bad.kind = MoveKind::r3;
    bad.face = 0;
    CHECK_THROWS_AS(move_invariance_check(t, {bad}, InvariantKind::enhanced), MoveError);
  }

  TEST_CASE("R3 sites keep the enhanced invariant") {
    const Diagram t = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    int checked = 0;
    for (const auto& add : enumerate_moves(t, MoveKind::r2_add)) {
      const Diagram e = apply_move(t, add);
      for (const auto& m : enumerate_moves(e, MoveKind::r3)) {
        CHECK(move_invariance_check(e, {m}, InvariantKind::enhanced).all_equal());
        ++checked;
      }
      if (checked > 6) break;
    }
    CHECK(checked > 0);
  }
}
