#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skeinkit/coloring.hpp"
#include "skeinkit/diagram.hpp"
#include "skeinkit/error.hpp"
#include "skeinkit/laurent.hpp"
#include "skeinkit/scheme.hpp"

namespace skeinkit {

// Largest classical crossing count the state enumeration accepts.
inline constexpr int kMaxStateCrossings = 24;

// Indices of the classical crossings; bit k of a state refers to the k-th.
std::vector<int> classical_crossings(const Diagram& d);

// Slot pairs joined by the H smoothing (vertical = false) or the V
// smoothing of a classical crossing of the given sign.
std::array<std::array<int, 2>, 2> smoothing_pairs(int sign, bool vertical);

// Loop count after smoothing every classical crossing: bit k clear picks H
// at the k-th classical crossing ({SW,SE} and {NW,NE} joined in the
// canonical frame), set picks V ({SW,NW} and {SE,NE}). Virtual crossings pass
// both strands straight through; crossing-free circles count one each.
int smooth_state(const Diagram& d, std::uint64_t state);

// smooth_state for every state, indexed by state.
std::vector<int> all_state_loops(const Diagram& d);

enum class LoopExponent { loops, loops_minus_one };

// Sum over states of the product of chosen weights times d^(|S|) or
// d^(|S|-1). `weights` has one entry per classical crossing.
template <Ring R>
R state_sum(const std::vector<int>& loops, const std::vector<SmoothingPair<R>>& weights, const R& d_value,
            LoopExponent exponent);

// Fast path for unit weights: per-state products stay monomials and are
// bucketed by loop count before the powers of d are expanded.
LaurentPoly state_sum(const std::vector<int>& loops, const std::vector<SmoothingPair<LaurentPoly>>& weights,
                      const LaurentPoly& d_value, LoopExponent exponent);

template <Ring R>
R state_sum(const Diagram& d, const std::vector<SmoothingPair<R>>& weights, const R& d_value, LoopExponent exponent) {
  return state_sum(all_state_loops(d), weights, d_value, exponent);
}

// Kauffman bracket in A: weight A on the A-smoothing (slot pairs {0,1},{2,3})
// and A^-1 on the other; loop exponent |S|-1.
LaurentPoly kauffman_bracket(const Diagram& d);
// (-A^3)^(-w) <D>.
LaurentPoly kauffman_f(const Diagram& d);
// Jones polynomial at t, through A = t^(-1/4) on the principal branch.
std::complex<double> jones_eval(const Diagram& d, std::complex<double> t);

template <Ring R>
struct InvariantValue {
  int coloring = 0;
  R value;
};

template <Ring R>
struct InvariantMultiset {
  std::vector<InvariantValue<R>> values;
  std::optional<std::string> diagnostic;

  // Canonical serializations, sorted: two multisets are equal iff these are.
  std::vector<std::string> sorted_texts() const {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(v.value.to_string());
    std::sort(out.begin(), out.end());
    return out;
  }
};

template <Ring R>
bool same_multiset(const InvariantMultiset<R>& a, const InvariantMultiset<R>& b) {
  return a.sorted_texts() == b.sorted_texts();
}

template <Ring R>
std::vector<SmoothingPair<R>> bicolor_weights(const Diagram& d, const Bicoloring& coloring,
                                              const CoefficientScheme<R>& scheme) {
  std::vector<SmoothingPair<R>> out;
  for (int c : classical_crossings(d)) {
    const BicolorType t = classify_bicolor(d, coloring, c);
    out.push_back(scheme.at(t.direction, t.sign));
  }
  return out;
}

// (-b n^-1 a^-2)^W <D> with the symbolic scheme and loop exponent |S|.
LaurentPoly enhanced_F(const Diagram& d, const Bicoloring& coloring);
LaurentPoly enhanced_F(const Diagram& d, const Bicoloring& coloring, const CoefficientScheme<LaurentPoly>& scheme);
InvariantMultiset<LaurentPoly> enhanced_invariant(const Diagram& d);

// t^W <D> over F8 with the nor scheme and loop exponent |S|.
F8 nor_phi_value(const Diagram& d, const Bicoloring& coloring);
InvariantMultiset<F8> nor_phi(const Diagram& d);

// (-x^3)^(-w) <D>: Mono crossings weigh (x, x^-1) when positive and
// (x^-1, x) when negative, Poly crossings the same in y; loop value
// -x^2 - x^-2, exponent |S|-1.
LaurentPoly tricolor_V(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring);
InvariantMultiset<LaurentPoly> tricolor_invariant(const Diagram& d);

// ---- template definitions ----

template <Ring R>
R state_sum(const std::vector<int>& loops, const std::vector<SmoothingPair<R>>& weights, const R& d_value,
            LoopExponent exponent) {
  const std::size_t n = weights.size();
  if (loops.size() != (std::size_t{1} << n)) throw AlgebraError("weights do not cover every classical crossing");
  const int offset = exponent == LoopExponent::loops ? 0 : -1;
  const int max_loops = loops.empty() ? 0 : *std::max_element(loops.begin(), loops.end());
  std::vector<R> d_pow;
  d_pow.push_back(ring_one(d_value));
  for (int k = 1; k <= max_loops; ++k) d_pow.push_back(d_pow.back() * d_value);
  R total = ring_zero(d_value);
  for (std::uint64_t state = 0; state < loops.size(); ++state) {
    const int e = loops[state] + offset;
    if (e < 0) throw AlgebraError("state with no loops under the |S|-1 normalization");
    R term = d_pow[static_cast<std::size_t>(e)];
    for (std::size_t k = 0; k < n; ++k) term = term * ((state >> k) & 1u ? weights[k].v : weights[k].h);
    total = total + term;
  }
  return total;
}

}  // namespace skeinkit
