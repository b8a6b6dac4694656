#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinkit/bracket.hpp"
#include "skeinkit/coloring.hpp"
#include "skeinkit/moves.hpp"
#include "skeinkit/scheme.hpp"

namespace skeinkit {

struct ConstraintEntry {
  std::string id;
  std::string lhs;
  std::string rhs;
  std::string residual;
  bool ok = false;
};

struct ConstraintReport {
  std::vector<ConstraintEntry> entries;
  bool all_ok() const {
    for (const auto& e : entries) {
      if (!e.ok) return false;
    }
    return true;
  }
  int satisfied() const {
    int n = 0;
    for (const auto& e : entries) n += e.ok ? 1 : 0;
    return n;
  }
};

// One side of an equation: a sum of products of coefficient names
// ("a_n", "b'_w", "d") or the literal 1.
using Product = std::vector<std::string>;
using SumOfProducts = std::vector<Product>;

struct Equation {
  std::string id;
  std::string text;
  SumOfProducts lhs;
  SumOfProducts rhs;
};

// Parses "a_w*b'_e + b_w*a'_e + b_w*b'_e*d = 0". Throws ParseError.
Equation parse_equation(std::string id, std::string_view text);

// Reidemeister II system (16 equations) and Omega-3a system (20 equations).
const std::vector<Equation>& r2_equations();
const std::vector<Equation>& r3_equations();

template <Ring R>
R evaluate_side(const SumOfProducts& side, const CoefficientScheme<R>& scheme) {
  const R& like = scheme.d;
  R total = ring_zero(like);
  for (const auto& product : side) {
    R term = ring_one(like);
    for (const auto& name : product) {
      if (name == "1") continue;
      if (name == "0") {
        term = ring_zero(like);
        continue;
      }
      term = term * scheme.named(name);
    }
    total = total + term;
  }
  return total;
}

template <Ring R>
ConstraintEntry check_equation(const Equation& eq, const CoefficientScheme<R>& scheme) {
  const R lhs = evaluate_side(eq.lhs, scheme);
  const R rhs = evaluate_side(eq.rhs, scheme);
  const R residual = lhs - rhs;
  return {eq.id, lhs.to_string(), rhs.to_string(), residual.to_string(), residual == ring_zero(residual)};
}

template <Ring R>
ConstraintReport check_equations(const std::vector<Equation>& eqs, const CoefficientScheme<R>& scheme) {
  ConstraintReport report;
  for (const auto& eq : eqs) report.entries.push_back(check_equation(eq, scheme));
  return report;
}

template <Ring R>
ConstraintReport verify_r2_equations(const CoefficientScheme<R>& scheme) {
  return check_equations(r2_equations(), scheme);
}

template <Ring R>
ConstraintReport verify_r3_equations(const CoefficientScheme<R>& scheme) {
  return check_equations(r3_equations(), scheme);
}

// (d a_n + b_n, d a'_n + b'_n): the bracket factors of a positive and a
// negative kink.
template <Ring R>
std::pair<R, R> kink_factors(const CoefficientScheme<R>& scheme) {
  const auto& n_pos = scheme.at(Direction::N, 1);
  const auto& n_neg = scheme.at(Direction::N, -1);
  return {scheme.d * n_pos.h + n_pos.v, scheme.d * n_neg.h + n_neg.v};
}

// ---- Omega-3a tangles ----

// Three-strand tangle with six boundary points in circular order: bottom
// positions 0,1,2 then top positions 2,1,0. Edge labels are internal ids.
struct Tangle {
  std::vector<Crossing> crossings;
  std::array<int, 6> boundary{};
};

// L (left side of the move) and L' (right side); L' crossings are numbered by
// the strand pair they share with L's crossings 1, 2, 3.
Tangle omega3a_left();
Tangle omega3a_right();

// The 5 non-crossing perfect matchings of the 6 boundary points.
const std::array<std::array<std::pair<int, int>, 3>, 5>& planar_matchings();

// Loop count of the tangle closed by `matching`, with crossing k smoothed by
// H when bit (2-k) of `triple` is clear (a1a2a3 = 0, b1b2b3 = 7).
int closed_tangle_loops(const Tangle& t, int matching, int triple);

// Bicolor types of the tangle's crossings with the boundary segments dotted
// and the inner segments solid.
std::vector<BicolorType> tangle_dotted_types(const Tangle& t);

struct LoopPair {
  int left = 0;
  int right = 0;
  friend bool operator==(const LoopPair&, const LoopPair&) = default;
  friend auto operator<=>(const LoopPair&, const LoopPair&) = default;
};

// [matching][triple] -> (loops of D_i, loops of D'_i).
using LoopTable = std::array<std::array<LoopPair, 8>, 5>;
LoopTable r3_loop_table();

// Sum over triples of coefficient products times d^loops, for D_i against
// D'_i, using the all-dotted types inside each tangle.
template <Ring R>
ConstraintEntry verify_out_equation(int closure, const CoefficientScheme<R>& scheme) {
  const LoopTable table = r3_loop_table();
  const auto left_types = tangle_dotted_types(omega3a_left());
  const auto right_types = tangle_dotted_types(omega3a_right());
  auto side = [&](const std::vector<BicolorType>& types, bool left) {
    R total = ring_zero(scheme.d);
    for (int triple = 0; triple < 8; ++triple) {
      R term = ring_one(scheme.d);
      for (int k = 0; k < 3; ++k) {
        const auto& pair = scheme.at(types[static_cast<std::size_t>(k)].direction,
                                     types[static_cast<std::size_t>(k)].sign);
        term = term * (((triple >> (2 - k)) & 1) ? pair.v : pair.h);
      }
      const LoopPair lp = table[static_cast<std::size_t>(closure)][static_cast<std::size_t>(triple)];
      const int loops = left ? lp.left : lp.right;
      for (int i = 0; i < loops; ++i) term = term * scheme.d;
      total = total + term;
    }
    return total;
  };
  const R lhs = side(left_types, true);
  const R rhs = side(right_types, false);
  const R residual = lhs - rhs;
  return {"out" + std::to_string(closure + 1), lhs.to_string(), rhs.to_string(), residual.to_string(),
          residual == ring_zero(residual)};
}

// ---- Invariants under moves ----

enum class InvariantKind { kauffman, jones, enhanced, nor, tricolor, tri };

InvariantKind invariant_kind_from_string(std::string_view name);
std::string_view invariant_kind_name(InvariantKind k);

// The invariant as a sorted list of canonical value texts (a one-element
// list for single-valued invariants). Jones is the exact f-polynomial in A.
std::vector<std::string> invariant_texts(const Diagram& d, InvariantKind kind);

struct MoveCheck {
  MoveSpec move;
  std::string description;
  std::string diagram;
  std::vector<std::string> values;
  bool equal = false;
};

struct MoveInvarianceReport {
  InvariantKind kind = InvariantKind::enhanced;
  std::vector<std::string> original;
  std::vector<MoveCheck> checks;
  bool all_equal() const {
    for (const auto& c : checks) {
      if (!c.equal) return false;
    }
    return true;
  }
};

// Applies `moves` in sequence and compares the invariant of every image with
// the original. Throws MoveError at an inapplicable site.
MoveInvarianceReport move_invariance_check(const Diagram& d, const std::vector<MoveSpec>& moves, InvariantKind kind);

}  // namespace skeinkit
