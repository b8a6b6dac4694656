#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skeinkit/diagram.hpp"
#include "skeinkit/laurent.hpp"
#include "skeinkit/scheme.hpp"

namespace skeinkit {

enum class Color : std::uint8_t { solid = 0, dotted = 1 };

// Edge colors indexed like Diagram::edges(), plus one color per
// crossing-free circle.
struct Bicoloring {
  std::vector<Color> edges;
  std::vector<Color> circles;
  friend bool operator==(const Bicoloring&, const Bicoloring&) = default;
};

struct BicoloringSet {
  std::vector<Bicoloring> colorings;
  // Set when some component passes an odd number of classical crossings.
  std::optional<std::string> diagnostic;
};

// All 2^k colorings, k = component count. Component j (in Diagram::components()
// order) takes bit k-1-j of the enumeration index, solid = 0.
BicoloringSet enumerate_bicolorings(const Diagram& d);

struct BicolorType {
  Direction direction = Direction::N;
  int sign = 1;
  friend bool operator==(const BicolorType&, const BicolorType&) = default;
};

std::string to_string(const BicolorType& t);

// Type from the dotted flags of a classical crossing's four slots. Throws
// ColoringError unless exactly two adjacent ends are dotted.
BicolorType classify_dotted_ends(const Crossing& x, const std::array<bool, 4>& dotted);

// Throws ColoringError for a virtual crossing, a coloring sized for another
// diagram, or dotted ends that are not adjacent in the canonical frame.
BicolorType classify_bicolor(const Diagram& d, const Bicoloring& coloring, int crossing);

// Throws ColoringError unless the coloring alternates at every classical pass.
void check_bicoloring(const Diagram& d, const Bicoloring& coloring);

Bicoloring swap_colors(const Bicoloring& coloring);

// Fox arcs: edges joined through over-passes and through virtual crossings.
// Crossing-free circles get arcs of their own after the edge arcs.
struct FoxArcs {
  std::vector<int> arc_of_edge;
  int edge_arcs = 0;
  int total = 0;
};

FoxArcs fox_arcs(const Diagram& d);

// Colors 0..2 per Fox arc.
using Tricoloring = std::vector<int>;

inline constexpr std::uint64_t kDefaultTricolorCap = 6561;  // 3^8

struct TricoloringSet {
  FoxArcs arcs;
  int dimension = 0;
  Integer count;
  // Empty when count exceeds the cap.
  std::vector<Tricoloring> colorings;
  bool truncated = false;
};

TricoloringSet enumerate_tricolorings(const Diagram& d, std::uint64_t cap = kDefaultTricolorCap);
Integer tri_count(const Diagram& d);

struct TricolorType {
  bool mono = true;
  int sign = 1;
  friend bool operator==(const TricolorType&, const TricolorType&) = default;
};

std::string to_string(const TricolorType& t);

// Throws ColoringError for a virtual crossing or a coloring violating the
// Fox rule at some crossing.
TricolorType classify_tricolor(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring, int crossing);
void check_tricoloring(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring);

}  // namespace skeinkit
