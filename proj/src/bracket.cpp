#include "skeinkit/bracket.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace skeinkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Edge-index endpoints of each crossing, prepared once per diagram.
struct LoopCounter {
  explicit LoopCounter(const Diagram& d) : unknots(d.unknots()), edge_count(d.edge_count()) {
    for (int c = 0; c < d.crossing_count(); ++c) {
      const Crossing& x = d.crossing(c);
      std::array<int, 4> e{};
      for (int s = 0; s < 4; ++s) e[idx(s)] = d.edge_index(x.edges[idx(s)]);
      if (x.is_virtual()) {
        fixed.push_back({e[0], e[2]});
        fixed.push_back({e[1], e[3]});
        continue;
      }
      const auto h = smoothing_pairs(x.sign, false);
      const auto v = smoothing_pairs(x.sign, true);
      std::array<std::array<int, 2>, 4> joins{};
      for (int k = 0; k < 2; ++k) {
        joins[idx(k)] = {e[idx(h[idx(k)][0])], e[idx(h[idx(k)][1])]};
        joins[idx(2 + k)] = {e[idx(v[idx(k)][0])], e[idx(v[idx(k)][1])]};
      }
      smoothable.push_back(joins);
    }
    if (smoothable.size() > static_cast<std::size_t>(kMaxStateCrossings)) {
      throw AlgebraError("state enumeration is limited to " + std::to_string(kMaxStateCrossings) +
                         " classical crossings");
    }
  }

  int count(std::uint64_t state) {
    parent.resize(idx(edge_count));
    std::iota(parent.begin(), parent.end(), 0);
    int components = edge_count;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[idx(a)] = b;
        --components;
      }
    };
    for (const auto& [a, b] : fixed) unite(a, b);
    for (std::size_t k = 0; k < smoothable.size(); ++k) {
      const int base = (state >> k) & 1u ? 2 : 0;
      unite(smoothable[k][idx(base)][0], smoothable[k][idx(base)][1]);
      unite(smoothable[k][idx(base + 1)][0], smoothable[k][idx(base + 1)][1]);
    }
    return components + unknots;
  }

  int find(int x) {
    while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
    return x;
  }

  int unknots;
  int edge_count;
  std::vector<std::array<int, 2>> fixed;
  std::vector<std::array<std::array<int, 2>, 4>> smoothable;
  std::vector<int> parent;
};

struct UnitMonomial {
  bool negative = false;
  Exponents exps{};
};

std::optional<UnitMonomial> as_unit(const LaurentPoly& p) {
  if (!p.is_unit()) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  return UnitMonomial{c < 0, e};
}

}  // namespace

// H joins {SW,SE},{NW,NE}; V joins {SW,NW},{SE,NE}. In slot terms H is the
// A-smoothing {0,1},{2,3} at positive crossings and V is at negative ones.
std::array<std::array<int, 2>, 2> smoothing_pairs(int sign, bool vertical) {
  const std::array<std::array<int, 2>, 2> a{{{0, 1}, {2, 3}}};
  const std::array<std::array<int, 2>, 2> b{{{0, 3}, {1, 2}}};
  return (sign > 0) != vertical ? a : b;
}

std::vector<int> classical_crossings(const Diagram& d) {
  std::vector<int> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.crossing(c).is_classical()) out.push_back(c);
  }
  return out;
}

int smooth_state(const Diagram& d, std::uint64_t state) { return LoopCounter(d).count(state); }

std::vector<int> all_state_loops(const Diagram& d) {
  LoopCounter counter(d);
  const std::uint64_t states = std::uint64_t{1} << counter.smoothable.size();
  std::vector<int> out(states);
  for (std::uint64_t s = 0; s < states; ++s) out[s] = counter.count(s);
  return out;
}

LaurentPoly state_sum(const std::vector<int>& loops, const std::vector<SmoothingPair<LaurentPoly>>& weights,
                      const LaurentPoly& d_value, LoopExponent exponent) {
  std::vector<std::array<UnitMonomial, 2>> units;
  for (const auto& w : weights) {
    auto h = as_unit(w.h);
    auto v = as_unit(w.v);
    if (!h || !v || *w.h.variables() != *d_value.variables()) break;
    units.push_back({*h, *v});
  }
  if (units.size() != weights.size()) {
    return state_sum<LaurentPoly>(loops, weights, d_value, exponent);
  }
  const std::size_t n = weights.size();
  if (loops.size() != (std::size_t{1} << n)) throw AlgebraError("weights do not cover every classical crossing");
  const int offset = exponent == LoopExponent::loops ? 0 : -1;

  // loop count -> monomial -> coefficient
  std::map<int, LaurentPoly::TermMap> buckets;
  for (std::uint64_t state = 0; state < loops.size(); ++state) {
    bool negative = false;
    Exponents e{};
    for (std::size_t k = 0; k < n; ++k) {
      const UnitMonomial& u = units[k][(state >> k) & 1u];
      negative ^= u.negative;
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] += u.exps[i];
    }
    buckets[loops[state]][e] += negative ? -1 : 1;
  }
  LaurentPoly total = d_value.zero();
  for (const auto& [l, terms] : buckets) {
    if (l + offset < 0) throw AlgebraError("state with no loops under the |S|-1 normalization");
    LaurentPoly bucket = d_value.zero();
    for (const auto& [e, c] : terms) {
      if (c != 0) bucket += LaurentPoly::monomial(d_value.variables(), c, e);
    }
    total += bucket * d_value.pow(l + offset);
  }
  return total;
}

namespace {

LaurentPoly kauffman_d() {
  const auto vars = kauffman_variables();
  return -LaurentPoly::variable(vars, "A", 2) - LaurentPoly::variable(vars, "A", -2);
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  const auto vars = kauffman_variables();
  const LaurentPoly a = LaurentPoly::variable(vars, "A", 1);
  const LaurentPoly a_inv = LaurentPoly::variable(vars, "A", -1);
  std::vector<SmoothingPair<LaurentPoly>> weights;
  for (int c : classical_crossings(d)) {
    if (d.crossing(c).sign > 0) weights.push_back({a, a_inv});
    else weights.push_back({a_inv, a});
  }
  return state_sum(d, weights, kauffman_d(), LoopExponent::loops_minus_one);
}

LaurentPoly kauffman_f(const Diagram& d) {
  const auto vars = kauffman_variables();
  const LaurentPoly factor = monomial_pow(-LaurentPoly::variable(vars, "A", 3), -d.writhe());
  return factor * kauffman_bracket(d);
}

std::complex<double> jones_eval(const Diagram& d, std::complex<double> t) {
  if (t == std::complex<double>(0.0, 0.0)) throw AlgebraError("Jones polynomial evaluated at t = 0");
  const std::complex<double> a = std::exp(-std::log(t) / 4.0);
  return kauffman_f(d).evaluate({{"A", a}});
}

LaurentPoly enhanced_F(const Diagram& d, const Bicoloring& coloring, const CoefficientScheme<LaurentPoly>& scheme) {
  check_bicoloring(d, coloring);
  const auto vars = enhanced_variables();
  const LaurentPoly bracket = state_sum(d, bicolor_weights(d, coloring, scheme), scheme.d, LoopExponent::loops);
  // -b / (n a^2)
  const LaurentPoly base = LaurentPoly::monomial(vars, -1, Exponents{-2, 1, -1, 0, 0});
  return monomial_pow(base, d.writhe()) * bracket;
}

LaurentPoly enhanced_F(const Diagram& d, const Bicoloring& coloring) {
  static const CoefficientScheme<LaurentPoly> scheme = make_symbolic_scheme();
  return enhanced_F(d, coloring, scheme);
}

InvariantMultiset<LaurentPoly> enhanced_invariant(const Diagram& d) {
  static const CoefficientScheme<LaurentPoly> scheme = make_symbolic_scheme();
  InvariantMultiset<LaurentPoly> out;
  const BicoloringSet colorings = enumerate_bicolorings(d);
  out.diagnostic = colorings.diagnostic;
  if (colorings.colorings.empty()) return out;
  const std::vector<int> loops = all_state_loops(d);
  const LaurentPoly factor =
      monomial_pow(LaurentPoly::monomial(enhanced_variables(), -1, Exponents{-2, 1, -1, 0, 0}), d.writhe());
  for (std::size_t i = 0; i < colorings.colorings.size(); ++i) {
    const auto weights = bicolor_weights(d, colorings.colorings[i], scheme);
    out.values.push_back({static_cast<int>(i), factor * state_sum(loops, weights, scheme.d, LoopExponent::loops)});
  }
  return out;
}

F8 nor_phi_value(const Diagram& d, const Bicoloring& coloring) {
  static const CoefficientScheme<F8> scheme = make_nor_scheme();
  check_bicoloring(d, coloring);
  return F8::t().pow(d.writhe()) * state_sum(d, bicolor_weights(d, coloring, scheme), scheme.d, LoopExponent::loops);
}

InvariantMultiset<F8> nor_phi(const Diagram& d) {
  static const CoefficientScheme<F8> scheme = make_nor_scheme();
  InvariantMultiset<F8> out;
  const BicoloringSet colorings = enumerate_bicolorings(d);
  out.diagnostic = colorings.diagnostic;
  if (colorings.colorings.empty()) return out;
  const std::vector<int> loops = all_state_loops(d);
  const F8 factor = F8::t().pow(d.writhe());
  for (std::size_t i = 0; i < colorings.colorings.size(); ++i) {
    const auto weights = bicolor_weights(d, colorings.colorings[i], scheme);
    out.values.push_back({static_cast<int>(i), factor * state_sum(loops, weights, scheme.d, LoopExponent::loops)});
  }
  return out;
}

namespace {

LaurentPoly tricolor_value(const Diagram& d, const std::vector<int>& loops, const FoxArcs& arcs,
                           const Tricoloring& coloring) {
  const auto vars = tricolor_variables();
  std::vector<SmoothingPair<LaurentPoly>> weights;
  for (int c : classical_crossings(d)) {
    const TricolorType t = classify_tricolor(d, arcs, coloring, c);
    const char* var = t.mono ? "x" : "y";
    const LaurentPoly up = LaurentPoly::variable(vars, var, 1);
    const LaurentPoly down = LaurentPoly::variable(vars, var, -1);
    if (t.sign > 0) weights.push_back({up, down});
    else weights.push_back({down, up});
  }
  const LaurentPoly delta = -LaurentPoly::variable(vars, "x", 2) - LaurentPoly::variable(vars, "x", -2);
  const LaurentPoly factor = monomial_pow(-LaurentPoly::variable(vars, "x", 3), -d.writhe());
  return factor * state_sum(loops, weights, delta, LoopExponent::loops_minus_one);
}

}  // namespace

LaurentPoly tricolor_V(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring) {
  check_tricoloring(d, arcs, coloring);
  return tricolor_value(d, all_state_loops(d), arcs, coloring);
}

InvariantMultiset<LaurentPoly> tricolor_invariant(const Diagram& d) {
  const TricoloringSet set = enumerate_tricolorings(d);
  if (set.truncated) {
    throw ColoringError("tricoloring count " + set.count.str() + " exceeds the enumeration cap");
  }
  InvariantMultiset<LaurentPoly> out;
  const std::vector<int> loops = all_state_loops(d);
  for (std::size_t i = 0; i < set.colorings.size(); ++i) {
    out.values.push_back({static_cast<int>(i), tricolor_value(d, loops, set.arcs, set.colorings[i])});
  }
  return out;
}

}  // namespace skeinkit
