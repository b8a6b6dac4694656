#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skeinkit {

enum class CrossingKind : std::uint8_t { classical, virtual_crossing };

// Slot indices of a classical crossing, counterclockwise from the incoming
// under-edge.
inline constexpr int kUnderIn = 0;
inline constexpr int kUnderOut = 2;

// One crossing of an oriented diagram. `edges` lists edge labels
// counterclockwise; for a classical crossing slot 0 is the incoming
// under-edge. `incoming[s]` is true when the edge at slot s flows into the
// crossing. Opposite slots (0,2) and (1,3) always belong to the same strand.
struct Crossing {
  CrossingKind kind = CrossingKind::classical;
  std::array<int, 4> edges{};
  std::array<bool, 4> incoming{};
  // +1 or -1 for classical crossings, 0 for virtual ones.
  int sign = 0;

  bool is_classical() const { return kind == CrossingKind::classical; }
  bool is_virtual() const { return kind == CrossingKind::virtual_crossing; }
  // Slot of the incoming over-edge: 3 for positive, 1 for negative.
  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

// One link component: its edge labels in orientation order. Crossing-free
// circles have no edges.
struct Component {
  std::vector<int> edges;
  int classical_passes = 0;
};

// An oriented planar (or virtual) link diagram. Immutable after
// construction; the constructor validates edge multiplicities and
// orientation consistency.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Crossing> crossings, int unknots);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int classical_count() const;
  bool has_virtual() const;
  int unknots() const { return unknots_; }

  // Sorted edge labels; edge indices below refer to positions in this list.
  const std::vector<int>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_index(int label) const;

  // Ends of edge `index`: head is where it flows in, tail where it leaves.
  SlotRef head(int index) const { return heads_.at(static_cast<std::size_t>(index)); }
  SlotRef tail(int index) const { return tails_.at(static_cast<std::size_t>(index)); }
  // The other end of the edge sitting at `ref`.
  SlotRef other_end(SlotRef ref) const;

  int writhe() const;

  // Edge-bearing components first (ordered by smallest label), then one
  // empty component per crossing-free circle.
  const std::vector<Component>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  // Component index of each edge index.
  const std::vector<int>& component_of_edge() const { return component_of_edge_; }

  // Swaps slots 1 and 3 of every classical crossing (mirror image).
  Diagram mirror() const;
  Diagram with_unknots(int unknots) const { return Diagram(crossings_, unknots); }

  // Signed PD text (X+/X-/P terms) with an unknots header when nonzero.
  std::string to_pd() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.unknots_ == b.unknots_;
  }

 private:
  void build_index();
  void build_components();

  std::vector<Crossing> crossings_;
  int unknots_ = 0;
  std::vector<int> edges_;
  std::vector<SlotRef> heads_;
  std::vector<SlotRef> tails_;
  std::vector<Component> components_;
  std::vector<int> component_of_edge_;
};

// One term of PD text before orientation is known.
struct PdTerm {
  CrossingKind kind = CrossingKind::classical;
  std::array<int, 4> edges{};
  // Set by the X+ / X- dialect.
  std::optional<int> sign;
};

struct PdSource {
  std::vector<PdTerm> terms;
  int unknots = 0;
};

// Tokenizes PD text: whitespace-separated X[a,b,c,d], X+[..], X-[..], P[..]
// and an optional unknots=<k> header. Throws ParseError.
PdSource parse_pd_terms(std::string_view text);

// Orients a PD term list. Components crossing under somewhere take their
// direction from the under-strand slots; otherwise explicit X+/X- signs are
// used, then sequential edge numbering. Throws ValidationError when the
// direction of some component cannot be derived or constraints conflict.
Diagram orient(const PdSource& source);

Diagram parse_pd(std::string_view text);
Diagram parse_pd(std::string_view text, int unknots);

enum class Compass : std::uint8_t { SW, SE, NE, NW };

std::string_view compass_name(Compass c);

// Slot index -> compass position of a classical crossing drawn with both
// oriented strands pointing into the right half-plane, so the two incoming
// ends sit at SW/NW and the two outgoing ends at SE/NE.
using CompassFrame = std::array<Compass, 4>;

CompassFrame canonical_frame(const Crossing& c);

}  // namespace skeinkit
