#include <doctest.h>

#include "skeinkit/diagram.hpp"
#include "skeinkit/error.hpp"

using namespace skeinkit;

namespace {
constexpr const char* kLeftTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
constexpr const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";
}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("trefoil parses") {
    const Diagram d = parse_pd(kLeftTrefoil);
    CHECK(d.crossing_count() == 3);
    CHECK(d.classical_count() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.component_count() == 1);
    CHECK(d.components()[0].classical_passes == 6);
  }

  TEST_CASE("empty diagram with circles") {
    const Diagram d = parse_pd("", 1);
    CHECK(d.crossing_count() == 0);
    CHECK(d.component_count() == 1);
    CHECK(d.writhe() == 0);
    CHECK(parse_pd("", 2).component_count() == 2);
    CHECK(parse_pd("unknots=3").component_count() == 3);
  }

  TEST_CASE("malformed text") {
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4"), ParseError);
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[a,2,3,4]"), ParseError);
  }

  TEST_CASE("invalid structure") {
    // Edge 5 appears once, edge 4 three times.
    CHECK_THROWS_AS(parse_pd("X[1,4,2,4] X[3,6,4,1] X[5,2,6,3]"), ValidationError);
    CHECK_THROWS_AS(parse_pd("X[1,1,2,3]"), ValidationError);
  }

  TEST_CASE("signs and writhe") {
    const Diagram d = parse_pd(kLeftTrefoil);
    for (const auto& x : d.crossings()) CHECK(x.sign == -1);
    CHECK(d.writhe() == -3);
    const Diagram m = d.mirror();
    for (const auto& x : m.crossings()) CHECK(x.sign == 1);
    CHECK(m.writhe() == 3);
    CHECK(m.mirror() == d);
    CHECK(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").writhe() == 3);
  }

  TEST_CASE("orientation bookkeeping") {
    const Diagram d = parse_pd(kLeftTrefoil);
    for (const auto& x : d.crossings()) {
      CHECK(x.incoming[kUnderIn]);
      CHECK_FALSE(x.incoming[kUnderOut]);
      CHECK(x.incoming[static_cast<std::size_t>(x.over_in_slot())]);
      CHECK_FALSE(x.incoming[static_cast<std::size_t>(x.over_out_slot())]);
    }
    for (int e = 0; e < d.edge_count(); ++e) {
      CHECK(d.other_end(d.head(e)) == d.tail(e));
      CHECK(d.other_end(d.tail(e)) == d.head(e));
    }
  }

  TEST_CASE("components") {
    CHECK(parse_pd(kHopf).component_count() == 2);
    const Diagram h = parse_pd(kHopf);
    for (const auto& c : h.components()) CHECK(c.classical_passes == 2);
    CHECK(h.writhe() == 2 * h.crossing(0).sign);
    CHECK(parse_pd(kHopf, 1).component_count() == 3);
  }

  TEST_CASE("signed and virtual dialect") {
    const Diagram v = parse_pd("X+[1,4,2,3] P[2,3,1,4]");
    CHECK(v.has_virtual());
    CHECK(v.classical_count() == 1);
    CHECK(v.crossing(0).sign == 1);
    // Round trip through the signed text.
    const Diagram t = parse_pd(kLeftTrefoil);
    CHECK(parse_pd(t.to_pd()) == t);
    CHECK(parse_pd(v.to_pd()) == v);
  }

  TEST_CASE("canonical frame puts incoming ends on the left") {
    for (const char* pd : {kLeftTrefoil, "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"}) {
      const Diagram d = parse_pd(pd);
      for (const auto& x : d.crossings()) {
        const auto f = canonical_frame(x);
        for (int s = 0; s < 4; ++s) {
          const Compass c = f[static_cast<std::size_t>(s)];
          const bool left = c == Compass::SW || c == Compass::NW;
          CHECK(left == x.incoming[static_cast<std::size_t>(s)]);
        }
        // Opposite slots are opposite corners.
        CHECK(static_cast<int>(f[0]) == (static_cast<int>(f[2]) + 2) % 4);
        CHECK(static_cast<int>(f[1]) == (static_cast<int>(f[3]) + 2) % 4);
      }
    }
  }

  TEST_CASE("canonical frame per sign") {
    const Diagram pos = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const auto fp = canonical_frame(pos.crossing(0));
    CHECK(fp[0] == Compass::SW);
    CHECK(fp[3] == Compass::NW);
    const Diagram neg = pos.mirror();
    const auto fn = canonical_frame(neg.crossing(0));
    CHECK(fn[0] == Compass::NW);
    CHECK(fn[1] == Compass::SW);
    CHECK(compass_name(Compass::NE) == "NE");
  }
}
