#include "skeinkit/coloring.hpp"

#include <numeric>

#include "skeinkit/error.hpp"

namespace skeinkit {

namespace {

Color flip(Color c) { return c == Color::solid ? Color::dotted : Color::solid; }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_sized(const Diagram& d, const Bicoloring& c) {
  if (c.edges.size() != idx(d.edge_count()) || c.circles.size() != idx(d.unknots())) {
    throw ColoringError("bicoloring does not match the diagram's edges");
  }
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

}  // namespace

BicoloringSet enumerate_bicolorings(const Diagram& d) {
  BicoloringSet out;
  const auto& comps = d.components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].classical_passes % 2 != 0) {
      out.diagnostic = "component " + std::to_string(j) + " passes " + std::to_string(comps[j].classical_passes) +
                       " classical crossings; no alternating bicoloring exists";
      return out;
    }
  }
  const int k = static_cast<int>(comps.size());
  if (k > 24) throw ColoringError("too many components to enumerate bicolorings");
  const int edge_components = k - d.unknots();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Bicoloring c;
    c.edges.assign(idx(d.edge_count()), Color::solid);
    c.circles.assign(idx(d.unknots()), Color::solid);
    for (int j = 0; j < k; ++j) {
      Color color = (mask >> (k - 1 - j)) & 1u ? Color::dotted : Color::solid;
      if (j >= edge_components) {
        c.circles[idx(j - edge_components)] = color;
        continue;
      }
      for (int label : comps[idx(j)].edges) {
        const int e = d.edge_index(label);
        c.edges[idx(e)] = color;
        if (d.crossing(d.head(e).crossing).is_classical()) color = flip(color);
      }
    }
    out.colorings.push_back(std::move(c));
  }
  return out;
}

void check_bicoloring(const Diagram& d, const Bicoloring& coloring) {
  require_sized(d, coloring);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossing(c);
    for (int s : {0, 1}) {
      const Color a = coloring.edges[idx(d.edge_index(x.edges[idx(s)]))];
      const Color b = coloring.edges[idx(d.edge_index(x.edges[idx(s + 2)]))];
      if (x.is_classical() == (a == b)) {
        throw ColoringError("bicoloring breaks the alternation rule at crossing " + std::to_string(c));
      }
    }
  }
}

std::string to_string(const BicolorType& t) {
  return std::string(1, direction_letter(t.direction)) + (t.sign > 0 ? "+" : "-");
}

BicolorType classify_dotted_ends(const Crossing& x, const std::array<bool, 4>& dotted_slots) {
  if (!x.is_classical()) throw ColoringError("virtual crossings carry no bicolor type");
  const CompassFrame frame = canonical_frame(x);
  unsigned dotted = 0;
  for (int s = 0; s < 4; ++s) {
    if (dotted_slots[idx(s)]) dotted |= 1u << static_cast<unsigned>(frame[idx(s)]);
  }
  const auto bit = [](Compass c) { return 1u << static_cast<unsigned>(c); };
  BicolorType t;
  t.sign = x.sign;
  if (dotted == (bit(Compass::SW) | bit(Compass::SE))) t.direction = Direction::S;
  else if (dotted == (bit(Compass::NW) | bit(Compass::NE))) t.direction = Direction::N;
  else if (dotted == (bit(Compass::SE) | bit(Compass::NE))) t.direction = Direction::E;
  else if (dotted == (bit(Compass::SW) | bit(Compass::NW))) t.direction = Direction::W;
  else throw ColoringError("dotted ends are not an adjacent pair");
  return t;
}

BicolorType classify_bicolor(const Diagram& d, const Bicoloring& coloring, int crossing) {
  require_sized(d, coloring);
  const Crossing& x = d.crossing(crossing);
  std::array<bool, 4> dotted{};
  for (int s = 0; s < 4; ++s) dotted[idx(s)] = coloring.edges[idx(d.edge_index(x.edges[idx(s)]))] == Color::dotted;
  try {
    return classify_dotted_ends(x, dotted);
  } catch (const ColoringError& e) {
    throw ColoringError("crossing " + std::to_string(crossing) + ": " + e.what());
  }
}

Bicoloring swap_colors(const Bicoloring& coloring) {
  Bicoloring out = coloring;
  for (auto& c : out.edges) c = flip(c);
  for (auto& c : out.circles) c = flip(c);
  return out;
}

FoxArcs fox_arcs(const Diagram& d) {
  const int n = d.edge_count();
  std::vector<int> parent(idx(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[idx(find(a))] = find(b); };
  for (const auto& x : d.crossings()) {
    unite(d.edge_index(x.edges[1]), d.edge_index(x.edges[3]));
    if (x.is_virtual()) unite(d.edge_index(x.edges[0]), d.edge_index(x.edges[2]));
  }
  FoxArcs arcs;
  arcs.arc_of_edge.assign(idx(n), -1);
  std::vector<int> arc_of_root(idx(n), -1);
  for (int e = 0; e < n; ++e) {
    const int r = find(e);
    if (arc_of_root[idx(r)] < 0) arc_of_root[idx(r)] = arcs.edge_arcs++;
    arcs.arc_of_edge[idx(e)] = arc_of_root[idx(r)];
  }
  arcs.total = arcs.edge_arcs + d.unknots();
  return arcs;
}

TricoloringSet enumerate_tricolorings(const Diagram& d, std::uint64_t cap) {
  TricoloringSet out;
  out.arcs = fox_arcs(d);
  const int cols = out.arcs.total;
  auto arc = [&](int label) { return out.arcs.arc_of_edge[idx(d.edge_index(label))]; };

  std::vector<std::vector<int>> rows;
  for (const auto& x : d.crossings()) {
    if (!x.is_classical()) continue;
    std::vector<int> row(idx(cols), 0);
    row[idx(arc(x.edges[1]))] += 2;
    row[idx(arc(x.edges[0]))] -= 1;
    row[idx(arc(x.edges[2]))] -= 1;
    for (auto& v : row) v = mod3(v);
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form over GF(3).
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[idx(p)][idx(c)] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[idx(p)], rows[idx(rank)]);
    auto& pr = rows[idx(rank)];
    if (pr[idx(c)] == 2) {
      for (auto& v : pr) v = mod3(2 * v);  // 2 is its own inverse mod 3
    }
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[idx(r)][idx(c)] == 0) continue;
      const int f = rows[idx(r)][idx(c)];
      for (int k = 0; k < cols; ++k) rows[idx(r)][idx(k)] = mod3(rows[idx(r)][idx(k)] - f * pr[idx(k)]);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  out.dimension = cols - rank;
  out.count = boost::multiprecision::pow(Integer(3), static_cast<unsigned>(out.dimension));
  if (out.count > cap) {
    out.truncated = true;
    return out;
  }

  std::vector<bool> is_pivot(idx(cols), false);
  for (int c : pivot_col) is_pivot[idx(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[idx(c)]) free_cols.push_back(c);
  }
  const auto total = static_cast<std::uint64_t>(out.count);
  for (std::uint64_t code = 0; code < total; ++code) {
    Tricoloring t(idx(cols), 0);
    std::uint64_t rest = code;
    // Last free arc varies fastest.
    for (auto it = free_cols.rbegin(); it != free_cols.rend(); ++it) {
      t[idx(*it)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    for (int r = 0; r < rank; ++r) {
      int v = 0;
      for (int c : free_cols) v += rows[idx(r)][idx(c)] * t[idx(c)];
      t[idx(pivot_col[idx(r)])] = mod3(-v);
    }
    out.colorings.push_back(std::move(t));
  }
  return out;
}

Integer tri_count(const Diagram& d) { return enumerate_tricolorings(d, 0).count; }

std::string to_string(const TricolorType& t) {
  return std::string(t.mono ? "Mono" : "Poly") + (t.sign > 0 ? "+" : "-");
}

TricolorType classify_tricolor(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring, int crossing) {
  if (coloring.size() != idx(arcs.total) || arcs.arc_of_edge.size() != idx(d.edge_count())) {
    throw ColoringError("tricoloring does not match the diagram's arcs");
  }
  const Crossing& x = d.crossing(crossing);
  if (!x.is_classical()) throw ColoringError("virtual crossings carry no tricolor type");
  auto color = [&](int slot) { return coloring[idx(arcs.arc_of_edge[idx(d.edge_index(x.edges[idx(slot)]))])]; };
  const int over = color(1), in = color(0), out = color(2);
  if (mod3(2 * over - in - out) != 0) {
    throw ColoringError("tricoloring breaks the Fox rule at crossing " + std::to_string(crossing));
  }
  return TricolorType{over == in && in == out, x.sign};
}

void check_tricoloring(const Diagram& d, const FoxArcs& arcs, const Tricoloring& coloring) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.crossing(c).is_classical()) classify_tricolor(d, arcs, coloring, c);
  }
  for (int v : coloring) {
    if (v < 0 || v > 2) throw ColoringError("tricolor values must be 0, 1 or 2");
  }
}

}  // namespace skeinkit
