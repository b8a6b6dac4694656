#include "skeinkit/axioms.hpp"

#include <map>
#include <numeric>
#include <set>

#include "skeinkit/error.hpp"

namespace skeinkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

SumOfProducts parse_side(std::string_view text, std::string_view whole) {
  SumOfProducts side;
  for (auto term : split(text, '+')) {
    Product p;
    for (auto factor : split(term, '*')) {
      if (factor.empty()) throw ParseError("empty factor in equation '" + std::string(whole) + "'");
      if (factor != "1" && factor != "0") detail::parse_coefficient_name(factor);
      p.emplace_back(factor);
    }
    side.push_back(std::move(p));
  }
  return side;
}

std::vector<Equation> parse_all(const std::string& prefix, const std::vector<const char*>& texts) {
  std::vector<Equation> out;
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back(parse_equation(prefix + std::to_string(i + 1), texts[i]));
  return out;
}

}  // namespace

Equation parse_equation(std::string id, std::string_view text) {
  const auto sides = split(text, '=');
  if (sides.size() != 2) throw ParseError("equation needs exactly one '=': '" + std::string(text) + "'");
  return {std::move(id), std::string(text), parse_side(sides[0], text), parse_side(sides[1], text)};
}

const std::vector<Equation>& r2_equations() {
  static const std::vector<Equation> eqs = parse_all(
      "r2.", {
                 "a_w*a'_e = 1",
                 "a_w*b'_e + b_w*a'_e + b_w*b'_e*d = 0",
                 "a_e*a'_w = 1",
                 "a_e*b'_w + b_e*a'_w + b_e*b'_w*d = 0",
                 "a_s*a'_s = 1",
                 "a_s*b'_s + b_s*a'_s + b_s*b'_s*d = 0",
                 "a_n*a'_n = 1",
                 "a_n*b'_n + b_n*a'_n + b_n*b'_n*d = 0",
                 "b_w*b'_e = 1",
                 "b_w*a'_e + a_w*b'_e + a_w*a'_e*d = 0",
                 "b_e*b'_w = 1",
                 "b_e*a'_w + a_e*b'_w + a_e*a'_w*d = 0",
                 "b_n*b'_n = 1",
                 "b_n*a'_n + a_n*b'_n + a_n*a'_n*d = 0",
                 "b_s*b'_s = 1",
                 "b_s*a'_s + a_s*b'_s + a_s*a'_s*d = 0",
             });
  return eqs;
}

const std::vector<Equation>& r3_equations() {
  static const std::vector<Equation> eqs = parse_all(
      "r3.", {
                 "b_n*b'_n*a_n = b_s*b'_s*a_s",
                 "b_n*a'_n*b_n = b_s*a'_s*b_s",
                 "a_n*b'_n*b_n = a_s*b'_s*b_s",
                 "b_n*b'_n*b_n = d*a_s*a'_s*a_s + a_s*a'_s*b_s + a_s*b'_s*a_s + b_s*a'_s*a_s",
                 "b_s*b'_s*b_s = d*a_n*a'_n*a_n + a_n*a'_n*b_n + a_n*b'_n*a_n + b_n*a'_n*a_n",
                 "b_n*b'_w*a_e = b_s*b'_e*a_w",
                 "b_n*a'_w*b_e = b_s*a'_e*b_w",
                 "a_n*b'_w*b_e = a_s*b'_e*b_w",
                 "b_n*b'_w*b_e = d*a_s*a'_e*a_w + a_s*a'_e*b_w + a_s*b'_e*a_w + b_s*a'_e*a_w",
                 "b_s*b'_e*b_w = d*a_n*a'_w*a_e + a_n*a'_w*b_e + a_n*b'_w*a_e + b_n*a'_w*a_e",
                 "b_w*b'_s*a_e = b_e*b'_n*a_w",
                 "b_w*a'_s*b_e = b_e*a'_n*b_w",
                 "a_w*b'_s*b_e = a_e*b'_n*b_w",
                 "b_w*b'_s*b_e = d*a_e*a'_n*a_w + a_e*a'_n*b_w + a_e*b'_n*a_w + b_e*a'_n*a_w",
                 "b_e*b'_n*b_w = d*a_w*a'_s*a_e + a_w*a'_s*b_e + a_w*b'_s*a_e + b_w*a'_s*a_e",
                 "b_w*b'_e*a_n = b_e*b'_w*a_s",
                 "b_w*a'_e*b_n = b_e*a'_w*b_s",
                 "a_w*b'_e*b_n = a_e*b'_w*b_s",
                 "b_w*b'_e*b_n = d*a_e*a'_w*a_s + a_e*a'_w*b_s + a_e*b'_w*a_s + b_e*a'_w*a_s",
                 "b_e*b'_w*b_s = d*a_w*a'_e*a_n + a_w*a'_e*b_n + a_w*b'_e*a_n + b_w*a'_e*a_n",
             });
  return eqs;
}

namespace {

// Braid-like picture: three vertical positions, crossings stacked bottom to
// top. Generator i swaps positions i and i+1; with eps < 0 the strand coming
// from the lower right passes over. `up[s]` orients strand s upward.
Tangle build_tangle(const std::vector<int>& word, int eps, const std::array<bool, 3>& up) {
  const int levels = static_cast<int>(word.size()) + 1;
  std::vector<int> parent(idx(3 * levels));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[idx(x)] != x) x = parent[idx(x)];
    return x;
  };
  auto node = [](int level, int pos) { return 3 * level + pos; };

  struct End {
    int node;
    int strand;
    bool bottom;
  };
  std::array<int, 3> strand_at{0, 1, 2};
  Tangle t;
  for (int j = 0; j < static_cast<int>(word.size()); ++j) {
    const int i = word[idx(j)];
    for (int p = 0; p < 3; ++p) {
      if (p != i && p != i + 1) parent[idx(find(node(j, p)))] = find(node(j + 1, p));
    }
    const int sl = strand_at[idx(i)], sr = strand_at[idx(i + 1)];
    // SW, SE, NE, NW
    const std::array<End, 4> ends{End{node(j, i), sl, true}, End{node(j, i + 1), sr, true},
                                  End{node(j + 1, i + 1), sl, false}, End{node(j + 1, i), sr, false}};
    const int over = eps > 0 ? sl : sr;
    const int under = eps > 0 ? sr : sl;
    auto incoming = [&](const End& e) { return e.bottom == up[idx(e.strand)]; };
    int start = 0;
    while (!(ends[idx(start)].strand == under && incoming(ends[idx(start)]))) ++start;
    Crossing c;
    c.kind = CrossingKind::classical;
    for (int s = 0; s < 4; ++s) {
      const End& e = ends[idx((start + s) % 4)];
      c.edges[idx(s)] = e.node;
      c.incoming[idx(s)] = incoming(e);
    }
    c.sign = (ends[idx((start + 3) % 4)].strand == over && c.incoming[3]) ? 1 : -1;
    t.crossings.push_back(c);
    std::swap(strand_at[idx(i)], strand_at[idx(i + 1)]);
  }
  for (auto& c : t.crossings) {
    for (auto& e : c.edges) e = find(e);
  }
  const int top = levels - 1;
  t.boundary = {find(node(0, 0)), find(node(0, 1)), find(node(0, 2)),
                find(node(top, 2)), find(node(top, 1)), find(node(top, 0))};
  return t;
}

constexpr std::array<bool, 3> kOmega3aOrientation{true, false, true};

// Strand pair of a crossing: the two strands are identified by the
// boundary-reaching labels they carry, so compare by the crossing's label set
// after mapping each label to its strand.
std::set<int> crossing_strands(const Tangle& t, int c, const std::map<int, int>& strand_of_label) {
  std::set<int> s;
  for (int label : t.crossings[idx(c)].edges) s.insert(strand_of_label.at(label));
  return s;
}

std::map<int, int> strand_labels(const Tangle& t) {
  // Walk from each bottom boundary point through opposite slots.
  std::map<int, int> out;
  for (int s = 0; s < 3; ++s) {
    int label = t.boundary[idx(s)];
    int prev_crossing = -1;
    while (true) {
      out[label] = s;
      int next = -1;
      for (int c = 0; c < static_cast<int>(t.crossings.size()); ++c) {
        if (c == prev_crossing) continue;
        const auto& e = t.crossings[idx(c)].edges;
        for (int k = 0; k < 4; ++k) {
          if (e[idx(k)] == label) {
            next = e[idx((k + 2) % 4)];
            prev_crossing = c;
            break;
          }
        }
        if (next >= 0) break;
      }
      if (next < 0) break;
      label = next;
    }
  }
  return out;
}

}  // namespace

Tangle omega3a_left() { return build_tangle({0, 1, 0}, -1, kOmega3aOrientation); }

Tangle omega3a_right() {
  const Tangle left = omega3a_left();
  Tangle right = build_tangle({1, 0, 1}, -1, kOmega3aOrientation);
  const auto left_strands = strand_labels(left);
  const auto right_strands = strand_labels(right);
  Tangle ordered = right;
  for (int k = 0; k < 3; ++k) {
    const auto want = crossing_strands(left, k, left_strands);
    for (int c = 0; c < 3; ++c) {
      if (crossing_strands(right, c, right_strands) == want) ordered.crossings[idx(k)] = right.crossings[idx(c)];
    }
  }
  return ordered;
}

const std::array<std::array<std::pair<int, int>, 3>, 5>& planar_matchings() {
  static const std::array<std::array<std::pair<int, int>, 3>, 5> m{{
      {{{0, 1}, {2, 3}, {4, 5}}},
      {{{1, 2}, {3, 4}, {5, 0}}},
      {{{0, 3}, {1, 2}, {4, 5}}},
      {{{0, 1}, {2, 5}, {3, 4}}},
      {{{0, 5}, {1, 4}, {2, 3}}},
  }};
  return m;
}

int closed_tangle_loops(const Tangle& t, int matching, int triple) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    parent.try_emplace(x, x);
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int k = 0; k < static_cast<int>(t.crossings.size()); ++k) {
    const Crossing& c = t.crossings[idx(k)];
    const bool vertical = (triple >> (2 - k)) & 1;
    for (const auto& [a, b] : smoothing_pairs(c.sign, vertical)) unite(c.edges[idx(a)], c.edges[idx(b)]);
  }
  for (const auto& [a, b] : planar_matchings().at(idx(matching))) unite(t.boundary[idx(a)], t.boundary[idx(b)]);
  std::set<int> roots;
  for (const auto& c : t.crossings) {
    for (int e : c.edges) roots.insert(find(e));
  }
  return static_cast<int>(roots.size());
}

std::vector<BicolorType> tangle_dotted_types(const Tangle& t) {
  std::map<int, int> crossings_at;
  for (const auto& c : t.crossings) {
    for (int e : std::set<int>(c.edges.begin(), c.edges.end())) ++crossings_at[e];
  }
  std::vector<BicolorType> out;
  for (const auto& c : t.crossings) {
    std::array<bool, 4> dotted{};
    for (int s = 0; s < 4; ++s) dotted[idx(s)] = crossings_at[c.edges[idx(s)]] < 2;
    out.push_back(classify_dotted_ends(c, dotted));
  }
  return out;
}

LoopTable r3_loop_table() {
  const Tangle left = omega3a_left();
  const Tangle right = omega3a_right();
  LoopTable table{};
  for (int m = 0; m < 5; ++m) {
    for (int triple = 0; triple < 8; ++triple) {
      table[idx(m)][idx(triple)] = {closed_tangle_loops(left, m, triple), closed_tangle_loops(right, m, triple)};
    }
  }
  return table;
}

InvariantKind invariant_kind_from_string(std::string_view name) {
  if (name == "kauffman") return InvariantKind::kauffman;
  if (name == "jones") return InvariantKind::jones;
  if (name == "enhanced") return InvariantKind::enhanced;
  if (name == "nor") return InvariantKind::nor;
  if (name == "tricolor") return InvariantKind::tricolor;
  if (name == "tri") return InvariantKind::tri;
  throw ParseError("unknown invariant '" + std::string(name) + "'");
}

std::string_view invariant_kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::kauffman: return "kauffman";
    case InvariantKind::jones: return "jones";
    case InvariantKind::enhanced: return "enhanced";
    case InvariantKind::nor: return "nor";
    case InvariantKind::tricolor: return "tricolor";
    case InvariantKind::tri: return "tri";
  }
  return "?";
}

std::vector<std::string> invariant_texts(const Diagram& d, InvariantKind kind) {
  switch (kind) {
    case InvariantKind::kauffman: return {kauffman_bracket(d).to_string()};
    case InvariantKind::jones: return {kauffman_f(d).to_string()};
    case InvariantKind::enhanced: return enhanced_invariant(d).sorted_texts();
    case InvariantKind::nor: return nor_phi(d).sorted_texts();
    case InvariantKind::tricolor: return tricolor_invariant(d).sorted_texts();
    case InvariantKind::tri: return {tri_count(d).str()};
  }
  return {};
}

MoveInvarianceReport move_invariance_check(const Diagram& d, const std::vector<MoveSpec>& moves, InvariantKind kind) {
  MoveInvarianceReport report;
  report.kind = kind;
  report.original = invariant_texts(d, kind);
  Diagram current = d;
  for (const auto& m : moves) {
    current = apply_move(current, m);
    MoveCheck check;
    check.move = m;
    check.description = describe(m);
    check.diagram = current.to_pd();
    check.values = invariant_texts(current, kind);
    check.equal = check.values == report.original;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace skeinkit
