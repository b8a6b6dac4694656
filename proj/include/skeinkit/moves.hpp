#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

enum class MoveKind : std::uint8_t { r1_add, r1_remove, r2_add, r2_remove, r3 };

std::string_view move_kind_name(MoveKind k);

// Traversal of an edge (by label) along or against its orientation.
struct Dart {
  int edge = -1;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// A face of the planar diagram: the darts that have it on their left, in
// boundary order.
struct Face {
  std::vector<Dart> darts;
};

// Site of one Reidemeister move. Which fields matter depends on `kind`:
//   r1_add    - `edge` (label), or `circle` (index of a crossing-free circle);
//               `sign` of the new crossing; `over_first` when the strand
//               passes over before passing under.
//   r2_add    - darts `first` and `second` on a common face; `first_over`
//               pushes the first strand over the second. With `circle` >= 0
//               the circle is pushed over itself instead.
//   r1_remove - `crossing` index carrying a one-edge loop.
//   r2_remove - `crossing` and `crossing2` bounding a bigon face.
//   r3        - `face` index of a triangle face.
struct MoveSpec {
  MoveKind kind = MoveKind::r1_add;
  int edge = -1;
  int circle = -1;
  int sign = 1;
  bool over_first = false;
  Dart first;
  Dart second;
  bool first_over = true;
  int crossing = -1;
  int crossing2 = -1;
  int face = -1;
};

std::string describe(const MoveSpec& m);

std::vector<Face> faces(const Diagram& d);

// Applies one move and renumbers edges canonically. Throws MoveError when the
// site does not carry the required local pattern.
Diagram apply_move(const Diagram& d, const MoveSpec& move);

// Every site at which a move of `kind` applies.
std::vector<MoveSpec> enumerate_moves(const Diagram& d, MoveKind kind);

// Sequential relabeling: components in order of their smallest label, each
// walked along its orientation from that label, numbered from 1.
Diagram renumber(const Diagram& d);

// Label-independent form: equal iff the diagrams are the same up to edge
// relabeling and crossing order.
std::string canonical_form(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

// Seeded random walk of `count` moves drawn from `kinds`. Crossing-adding
// moves are suppressed once the walk is `max_extra_crossings` above the
// starting crossing count.
std::vector<MoveSpec> random_move_walk(const Diagram& start, const std::vector<MoveKind>& kinds, int count,
                                       std::uint64_t seed, int max_extra_crossings = 4);

}  // namespace skeinkit
