#include "skeinkit/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "skeinkit/error.hpp"

namespace skeinkit {

namespace {

Crossing classical_crossing(const std::array<int, 4>& edges, int sign) {
  Crossing c;
  c.kind = CrossingKind::classical;
  c.edges = edges;
  c.sign = sign;
  c.incoming = {true, sign < 0, false, sign > 0};
  return c;
}

struct CompassEnd {
  int label = -1;
  bool incoming = false;
};

// Ends listed counterclockwise as E, N, W, S. `vertical_over` puts the N-S
// strand on top.
Crossing crossing_from_compass(const std::array<CompassEnd, 4>& ends, bool vertical_over) {
  const int under_axis = vertical_over ? 0 : 1;
  const int start = ends[static_cast<std::size_t>(under_axis)].incoming ? under_axis : under_axis + 2;
  Crossing c;
  c.kind = CrossingKind::classical;
  for (int s = 0; s < 4; ++s) {
    const auto& end = ends[static_cast<std::size_t>((start + s) % 4)];
    c.edges[static_cast<std::size_t>(s)] = end.label;
    c.incoming[static_cast<std::size_t>(s)] = end.incoming;
  }
  c.sign = c.incoming[3] ? 1 : -1;
  return c;
}

int max_label(const Diagram& d) {
  return d.edges().empty() ? 0 : d.edges().back();
}

class Builder {
 public:
  explicit Builder(const Diagram& d)
      : crossings_(d.crossings()), unknots_(d.unknots()), next_label_(max_label(d) + 1) {}

  int fresh() { return next_label_++; }
  void relabel(SlotRef r, int label) {
    crossings_.at(static_cast<std::size_t>(r.crossing)).edges.at(static_cast<std::size_t>(r.slot)) = label;
  }
  void add(const Crossing& c) { crossings_.push_back(c); }
  void remove_circle() {
    if (unknots_ <= 0) throw MoveError("no crossing-free circle");
    --unknots_;
  }
  std::vector<Crossing>& crossings() { return crossings_; }
  int& unknots() { return unknots_; }

  Diagram finish() { return renumber(Diagram(std::move(crossings_), unknots_)); }

 private:
  std::vector<Crossing> crossings_;
  int unknots_;
  int next_label_;
};

int dart_id(int edge_index, bool forward) { return 2 * edge_index + (forward ? 0 : 1); }

SlotRef dart_arrival(const Diagram& d, int edge_index, bool forward) {
  return forward ? d.head(edge_index) : d.tail(edge_index);
}

Diagram apply_r1_add(const Diagram& d, const MoveSpec& m) {
  if (m.sign != 1 && m.sign != -1) throw MoveError("R1 sign must be +1 or -1");
  Builder b(d);
  int p, q;
  if (m.circle >= 0) {
    if (m.circle >= d.unknots()) throw MoveError("no crossing-free circle " + std::to_string(m.circle));
    b.remove_circle();
    p = q = b.fresh();
  } else {
    const int e = d.edge_index(m.edge);
    p = m.edge;
    q = b.fresh();
    b.relabel(d.head(e), q);
  }
  const int loop = b.fresh();
  std::array<int, 4> slots;
  if (!m.over_first) slots = m.sign > 0 ? std::array{p, q, loop, loop} : std::array{p, loop, loop, q};
  else slots = m.sign > 0 ? std::array{loop, loop, q, p} : std::array{loop, p, q, loop};
  b.add(classical_crossing(slots, m.sign));
  return b.finish();
}

Diagram apply_r1_remove(const Diagram& d, const MoveSpec& m) {
  if (m.crossing < 0 || m.crossing >= d.crossing_count()) throw MoveError("R1 removal: no such crossing");
  const Crossing& c = d.crossing(m.crossing);
  if (!c.is_classical()) throw MoveError("R1 removal at a virtual crossing");
  int loop_slot = -1;
  for (int s = 0; s < 4; ++s) {
    if (c.edges[static_cast<std::size_t>(s)] == c.edges[static_cast<std::size_t>((s + 1) % 4)]) {
      loop_slot = s;
      break;
    }
  }
  if (loop_slot < 0) throw MoveError("R1 removal: crossing " + std::to_string(m.crossing) + " has no kink loop");
  const SlotRef r1{m.crossing, (loop_slot + 2) % 4};
  const SlotRef r2{m.crossing, (loop_slot + 3) % 4};
  const int l1 = c.edges[static_cast<std::size_t>(r1.slot)];
  const int l2 = c.edges[static_cast<std::size_t>(r2.slot)];
  Builder b(d);
  if (l1 == l2) {
    ++b.unknots();
  } else {
    // Whichever of the two remaining edges leaves the crossing absorbs the other.
    const bool r1_in = c.incoming[static_cast<std::size_t>(r1.slot)];
    const int keep = r1_in ? l1 : l2;
    const int drop = r1_in ? l2 : l1;
    const SlotRef drop_far = d.other_end(r1_in ? r2 : r1);
    b.relabel(drop_far, keep);
    (void)drop;
  }
  b.crossings().erase(b.crossings().begin() + m.crossing);
  return b.finish();
}

const Face* face_with_darts(const std::vector<Face>& fs, Dart a, Dart b) {
  for (const auto& f : fs) {
    bool has_a = std::find(f.darts.begin(), f.darts.end(), a) != f.darts.end();
    bool has_b = std::find(f.darts.begin(), f.darts.end(), b) != f.darts.end();
    if (has_a && has_b) return &f;
  }
  return nullptr;
}

Diagram apply_r2_add(const Diagram& d, const MoveSpec& m) {
  Builder b(d);
  if (m.circle >= 0) {
    if (m.circle >= d.unknots()) throw MoveError("no crossing-free circle " + std::to_string(m.circle));
    b.remove_circle();
    const int A = b.fresh(), B = b.fresh(), C = b.fresh(), D = b.fresh();
    b.add(crossing_from_compass({CompassEnd{D, true}, {B, false}, {A, false}, {A, true}}, m.first_over));
    b.add(crossing_from_compass({CompassEnd{C, true}, {B, true}, {D, false}, {C, false}}, m.first_over));
    return b.finish();
  }
  if (m.first.edge == m.second.edge) throw MoveError("R2 needs two distinct edges");
  const int e = d.edge_index(m.first.edge);
  const int f = d.edge_index(m.second.edge);
  const auto fs = faces(d);
  if (!face_with_darts(fs, m.first, m.second)) throw MoveError("R2: darts do not bound a common face");

  // Local picture: the face lies between e (bottom, dart pointing east) and
  // f (top, dart pointing west); e is pushed up across f.
  const bool e_east = m.first.forward;
  const bool f_west = m.second.forward;
  const SlotRef e_east_end = e_east ? d.head(e) : d.tail(e);
  const SlotRef f_west_end = f_west ? d.head(f) : d.tail(f);
  const int e1 = m.first.edge, e2 = b.fresh(), e3 = b.fresh();
  const int f1 = m.second.edge, f2 = b.fresh(), f3 = b.fresh();
  b.relabel(e_east_end, e3);
  b.relabel(f_west_end, f3);
  // Left crossing: e turns up through f.
  b.add(crossing_from_compass(
      {CompassEnd{f2, f_west}, {e2, !e_east}, {f3, !f_west}, {e1, e_east}}, m.first_over));
  // Right crossing: e comes back down.
  b.add(crossing_from_compass(
      {CompassEnd{f1, f_west}, {e2, e_east}, {f2, !f_west}, {e3, !e_east}}, m.first_over));
  return b.finish();
}

struct Bigon {
  int c1, c2;
  // Slots of the two bigon edges at c1 and c2 (first edge, second edge).
  int g1, g2, h1, h2;
};

std::optional<Bigon> find_bigon(const Diagram& d, const std::vector<Face>& fs, int c1, int c2) {
  for (const auto& f : fs) {
    if (f.darts.size() != 2) continue;
    const int g = d.edge_index(f.darts[0].edge);
    const int h = d.edge_index(f.darts[1].edge);
    if (g == h) continue;
    auto ends = [&](int e) { return std::pair{d.head(e), d.tail(e)}; };
    auto [gh, gt] = ends(g);
    auto [hh, ht] = ends(h);
    std::set<int> cs{gh.crossing, gt.crossing, hh.crossing, ht.crossing};
    if (cs != std::set<int>{c1, c2} || c1 == c2) continue;
    auto slot_at = [](SlotRef a, SlotRef b2, int c) { return a.crossing == c ? a.slot : b2.slot; };
    Bigon bg{c1, c2, slot_at(gh, gt, c1), slot_at(gh, gt, c2), slot_at(hh, ht, c1), slot_at(hh, ht, c2)};
    const Crossing& x1 = d.crossing(c1);
    const Crossing& x2 = d.crossing(c2);
    if (!x1.is_classical() || !x2.is_classical() || x1.sign == x2.sign) continue;
    const bool g_over1 = bg.g1 % 2 == 1, g_over2 = bg.g2 % 2 == 1;
    if (g_over1 != g_over2) continue;
    return bg;
  }
  return std::nullopt;
}

Diagram apply_r2_remove(const Diagram& d, const MoveSpec& m) {
  const int c1 = m.crossing, c2 = m.crossing2;
  if (c1 < 0 || c2 < 0 || c1 >= d.crossing_count() || c2 >= d.crossing_count() || c1 == c2) {
    throw MoveError("R2 removal: bad crossing pair");
  }
  auto bg = find_bigon(d, faces(d), c1, c2);
  if (!bg) throw MoveError("R2 removal: crossings " + std::to_string(c1) + "," + std::to_string(c2) + " bound no removable bigon");
  const Crossing& x1 = d.crossing(c1);
  const Crossing& x2 = d.crossing(c2);
  auto outer = [](const Crossing& x, int slot) { return x.edges[static_cast<std::size_t>((slot + 2) % 4)]; };

  std::map<int, int> parent;
  auto find = [&](int x) {
    parent.try_emplace(x, x);
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b2) { parent[find(a)] = find(b2); };
  unite(outer(x1, bg->g1), outer(x2, bg->g2));
  unite(outer(x1, bg->h1), outer(x2, bg->h2));

  Builder b(d);
  auto& cr = b.crossings();
  cr.erase(cr.begin() + std::max(c1, c2));
  cr.erase(cr.begin() + std::min(c1, c2));
  std::map<int, int> remaining_ends;
  for (auto& c : cr) {
    for (auto& e : c.edges) {
      if (parent.count(e)) e = find(e);
      ++remaining_ends[e];
    }
  }
  std::set<int> classes;
  for (const auto& [label, p] : parent) classes.insert(find(label));
  for (int cls : classes) {
    if (remaining_ends[cls] == 0) ++b.unknots();
  }
  return b.finish();
}

struct Triangle {
  std::array<int, 3> crossings;
  // For each triangle edge: its ends (u, slot) and (v, slot).
  std::array<std::pair<SlotRef, SlotRef>, 3> edge_ends;
};

std::optional<Triangle> triangle_at(const Diagram& d, const Face& f) {
  if (f.darts.size() != 3) return std::nullopt;
  Triangle t;
  std::set<int> cs, es;
  for (int i = 0; i < 3; ++i) {
    const int e = d.edge_index(f.darts[static_cast<std::size_t>(i)].edge);
    es.insert(e);
    t.edge_ends[static_cast<std::size_t>(i)] = {d.tail(e), d.head(e)};
    cs.insert(d.head(e).crossing);
    cs.insert(d.tail(e).crossing);
  }
  if (es.size() != 3 || cs.size() != 3) return std::nullopt;
  std::copy(cs.begin(), cs.end(), t.crossings.begin());
  for (int c : cs) {
    if (!d.crossing(c).is_classical()) return std::nullopt;
  }
  int top = 0, bottom = 0, middle = 0;
  for (const auto& [u, v] : t.edge_ends) {
    const bool over_u = u.slot % 2 == 1, over_v = v.slot % 2 == 1;
    if (over_u && over_v) ++top;
    else if (!over_u && !over_v) ++bottom;
    else ++middle;
  }
  if (top != 1 || bottom != 1 || middle != 1) return std::nullopt;
  return t;
}

Diagram apply_r3(const Diagram& d, const MoveSpec& m) {
  const auto fs = faces(d);
  if (m.face < 0 || m.face >= static_cast<int>(fs.size())) throw MoveError("R3: no such face");
  auto tri = triangle_at(d, fs[static_cast<std::size_t>(m.face)]);
  if (!tri) throw MoveError("R3: face " + std::to_string(m.face) + " is not a movable triangle");
  Builder b(d);
  auto label_at = [&](SlotRef r) { return d.crossing(r.crossing).edges[static_cast<std::size_t>(r.slot)]; };
  auto opposite = [](SlotRef r) { return SlotRef{r.crossing, (r.slot + 2) % 4}; };
  // Each strand now meets its two crossings in the opposite order: the outer
  // edges swap to the far crossing, the inner edge joins the outward slots.
  for (const auto& [u, v] : tri->edge_ends) {
    const int inner = label_at(u);
    const int outer_u = label_at(opposite(u));
    const int outer_v = label_at(opposite(v));
    b.relabel(u, outer_v);
    b.relabel(v, outer_u);
    b.relabel(opposite(u), inner);
    b.relabel(opposite(v), inner);
  }
  return b.finish();
}

}  // namespace

std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_add: return "R1-add";
    case MoveKind::r1_remove: return "R1-remove";
    case MoveKind::r2_add: return "R2-add";
    case MoveKind::r2_remove: return "R2-remove";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

std::string describe(const MoveSpec& m) {
  std::ostringstream out;
  out << move_kind_name(m.kind);
  switch (m.kind) {
    case MoveKind::r1_add:
      if (m.circle >= 0) out << " circle=" << m.circle;
      else out << " edge=" << m.edge;
      out << " sign=" << (m.sign > 0 ? '+' : '-') << (m.over_first ? " over-first" : " under-first");
      break;
    case MoveKind::r2_add:
      if (m.circle >= 0) out << " circle=" << m.circle;
      else
        out << " darts=" << m.first.edge << (m.first.forward ? '>' : '<') << ',' << m.second.edge
            << (m.second.forward ? '>' : '<');
      out << (m.first_over ? " first-over" : " second-over");
      break;
    case MoveKind::r1_remove: out << " crossing=" << m.crossing; break;
    case MoveKind::r2_remove: out << " crossings=" << m.crossing << ',' << m.crossing2; break;
    case MoveKind::r3: out << " face=" << m.face; break;
  }
  return out.str();
}

std::vector<Face> faces(const Diagram& d) {
  const int n = d.edge_count();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  std::vector<Face> out;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Face f;
    int e = start / 2;
    bool fwd = start % 2 == 0;
    while (!seen[static_cast<std::size_t>(dart_id(e, fwd))]) {
      seen[static_cast<std::size_t>(dart_id(e, fwd))] = true;
      f.darts.push_back({d.edges()[static_cast<std::size_t>(e)], fwd});
      // Keep the face on the left: leave through the clockwise-next slot.
      const SlotRef at = dart_arrival(d, e, fwd);
      const SlotRef out_ref{at.crossing, (at.slot + 3) % 4};
      e = d.edge_index(d.crossing(at.crossing).edges[static_cast<std::size_t>(out_ref.slot)]);
      fwd = d.tail(e) == out_ref;
    }
    out.push_back(std::move(f));
  }
  return out;
}

Diagram apply_move(const Diagram& d, const MoveSpec& move) {
  switch (move.kind) {
    case MoveKind::r1_add: return apply_r1_add(d, move);
    case MoveKind::r1_remove: return apply_r1_remove(d, move);
    case MoveKind::r2_add: return apply_r2_add(d, move);
    case MoveKind::r2_remove: return apply_r2_remove(d, move);
    case MoveKind::r3: return apply_r3(d, move);
  }
  throw MoveError("unknown move kind");
}

std::vector<MoveSpec> enumerate_moves(const Diagram& d, MoveKind kind) {
  std::vector<MoveSpec> out;
  switch (kind) {
    case MoveKind::r1_add: {
      for (int label : d.edges()) {
        for (int sign : {1, -1}) {
          for (bool over_first : {false, true}) {
            MoveSpec m;
            m.kind = kind;
            m.edge = label;
            m.sign = sign;
            m.over_first = over_first;
            out.push_back(m);
          }
        }
      }
      for (int c = 0; c < d.unknots(); ++c) {
        for (int sign : {1, -1}) {
          for (bool over_first : {false, true}) {
            MoveSpec m;
            m.kind = kind;
            m.circle = c;
            m.sign = sign;
            m.over_first = over_first;
            out.push_back(m);
          }
        }
      }
      break;
    }
    case MoveKind::r1_remove: {
      for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossing(c);
        if (!x.is_classical()) continue;
        for (int s = 0; s < 4; ++s) {
          if (x.edges[static_cast<std::size_t>(s)] == x.edges[static_cast<std::size_t>((s + 1) % 4)]) {
            MoveSpec m;
            m.kind = kind;
            m.crossing = c;
            out.push_back(m);
            break;
          }
        }
      }
      break;
    }
    case MoveKind::r2_add: {
      for (const auto& f : faces(d)) {
        for (std::size_t i = 0; i < f.darts.size(); ++i) {
          for (std::size_t j = i + 1; j < f.darts.size(); ++j) {
            if (f.darts[i].edge == f.darts[j].edge) continue;
            for (bool first_over : {true, false}) {
              MoveSpec m;
              m.kind = kind;
              m.first = f.darts[i];
              m.second = f.darts[j];
              m.first_over = first_over;
              out.push_back(m);
            }
          }
        }
      }
      for (int c = 0; c < d.unknots(); ++c) {
        for (bool first_over : {true, false}) {
          MoveSpec m;
          m.kind = kind;
          m.circle = c;
          m.first_over = first_over;
          out.push_back(m);
        }
      }
      break;
    }
    case MoveKind::r2_remove: {
      const auto fs = faces(d);
      for (int c1 = 0; c1 < d.crossing_count(); ++c1) {
        for (int c2 = c1 + 1; c2 < d.crossing_count(); ++c2) {
          if (!find_bigon(d, fs, c1, c2)) continue;
          MoveSpec m;
          m.kind = kind;
          m.crossing = c1;
          m.crossing2 = c2;
          out.push_back(m);
        }
      }
      break;
    }
    case MoveKind::r3: {
      const auto fs = faces(d);
      for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (!triangle_at(d, fs[static_cast<std::size_t>(i)])) continue;
        MoveSpec m;
        m.kind = kind;
        m.face = i;
        out.push_back(m);
      }
      break;
    }
  }
  return out;
}

Diagram renumber(const Diagram& d) {
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& comp : d.components()) {
    for (int label : comp.edges) relabel[label] = next++;
  }
  std::vector<Crossing> out = d.crossings();
  for (auto& c : out) {
    for (auto& e : c.edges) e = relabel.at(e);
  }
  return Diagram(std::move(out), d.unknots());
}

namespace {

using CrossingKey = std::array<int, 6>;

CrossingKey crossing_key(const Crossing& c, const std::map<int, int>& relabel) {
  if (c.is_classical()) {
    return {0, c.sign, relabel.at(c.edges[0]), relabel.at(c.edges[1]), relabel.at(c.edges[2]),
            relabel.at(c.edges[3])};
  }
  // Virtual crossings have no distinguished first slot; use the rotation
  // that starts at an incoming end with the smallest label.
  CrossingKey best{};
  bool have = false;
  for (int r = 0; r < 4; ++r) {
    if (!c.incoming[static_cast<std::size_t>(r)]) continue;
    CrossingKey k{1, 0};
    for (int s = 0; s < 4; ++s) k[static_cast<std::size_t>(2 + s)] = relabel.at(c.edges[static_cast<std::size_t>((r + s) % 4)]);
    if (!have || k < best) best = k;
    have = true;
  }
  return best;
}

// Relabels walking from `start` (edge index), then continuing into
// components reached through already-visited crossings.
std::vector<CrossingKey> keyed_from(const Diagram& d, int start, std::vector<bool>& crossing_seen) {
  std::map<int, int> relabel;
  std::vector<int> crossing_order;
  int next = 1;
  auto walk = [&](int e0) {
    int e = e0;
    do {
      relabel[d.edges()[static_cast<std::size_t>(e)]] = next++;
      const SlotRef h = d.head(e);
      if (!crossing_seen[static_cast<std::size_t>(h.crossing)]) {
        crossing_seen[static_cast<std::size_t>(h.crossing)] = true;
        crossing_order.push_back(h.crossing);
      }
      e = d.edge_index(d.crossing(h.crossing).edges[static_cast<std::size_t>((h.slot + 2) % 4)]);
    } while (e != e0);
  };
  walk(start);
  for (std::size_t i = 0; i < crossing_order.size(); ++i) {
    const Crossing& c = d.crossing(crossing_order[i]);
    for (int s = 0; s < 4; ++s) {
      const int label = c.edges[static_cast<std::size_t>(s)];
      if (relabel.count(label)) continue;
      walk(d.edge_index(label));
    }
  }
  std::vector<CrossingKey> keys;
  for (int c : crossing_order) keys.push_back(crossing_key(d.crossing(c), relabel));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::string canonical_form(const Diagram& d) {
  // Connected pieces of the projection, each reduced to its minimal keyed form.
  std::vector<bool> done(static_cast<std::size_t>(d.crossing_count()), false);
  std::vector<std::vector<CrossingKey>> pieces;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (done[static_cast<std::size_t>(c)]) continue;
    std::vector<bool> piece_crossings(done.size(), false);
    keyed_from(d, d.edge_index(d.crossing(c).edges[0]), piece_crossings);
    std::vector<CrossingKey> best;
    bool have = false;
    for (int e = 0; e < d.edge_count(); ++e) {
      if (!piece_crossings[static_cast<std::size_t>(d.head(e).crossing)]) continue;
      std::vector<bool> seen(done.size(), false);
      auto keys = keyed_from(d, e, seen);
      if (!have || keys < best) best = std::move(keys);
      have = true;
    }
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (piece_crossings[i]) done[i] = true;
    }
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end());
  std::ostringstream out;
  out << "unknots=" << d.unknots();
  for (const auto& piece : pieces) {
    out << " |";
    for (const auto& k : piece) {
      out << " (" << k[0] << ',' << k[1] << ':' << k[2] << ',' << k[3] << ',' << k[4] << ',' << k[5] << ')';
    }
  }
  return out.str();
}

bool isomorphic(const Diagram& a, const Diagram& b) { return canonical_form(a) == canonical_form(b); }

std::vector<MoveSpec> random_move_walk(const Diagram& start, const std::vector<MoveKind>& kinds, int count,
                                       std::uint64_t seed, int max_extra_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<MoveSpec> walk;
  Diagram current = start;
  const int cap = start.crossing_count() + max_extra_crossings;
  for (int step = 0; step < count; ++step) {
    std::vector<std::vector<MoveSpec>> options;
    for (MoveKind k : kinds) {
      const bool adds = k == MoveKind::r1_add || k == MoveKind::r2_add;
      const int growth = k == MoveKind::r2_add ? 2 : 1;
      if (adds && current.crossing_count() + growth > cap) continue;
      auto sites = enumerate_moves(current, k);
      if (!sites.empty()) options.push_back(std::move(sites));
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick_kind(0, options.size() - 1);
    const auto& sites = options[pick_kind(rng)];
    std::uniform_int_distribution<std::size_t> pick_site(0, sites.size() - 1);
    const MoveSpec m = sites[pick_site(rng)];
    current = apply_move(current, m);
    walk.push_back(m);
  }
  return walk;
}

}  // namespace skeinkit
