#include "skeinkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "skeinkit/error.hpp"

namespace skeinkit {

namespace {

std::string slot_text(const std::array<int, 4>& e) {
  std::ostringstream out;
  out << '[' << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
  return out.str();
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int unknots)
    : crossings_(std::move(crossings)), unknots_(unknots) {
  if (unknots_ < 0) throw ValidationError("negative unknot count");
  for (const auto& c : crossings_) {
    for (int e : c.edges) {
      if (e < 0) throw ValidationError("negative edge label in " + slot_text(c.edges));
    }
    if (c.is_classical()) {
      if (c.sign != 1 && c.sign != -1) throw ValidationError("classical crossing without sign");
      bool ok = c.incoming[kUnderIn] && !c.incoming[kUnderOut] && c.incoming[c.over_in_slot()] &&
                !c.incoming[c.over_out_slot()];
      if (!ok) throw ValidationError("orientation does not match sign at " + slot_text(c.edges));
    } else {
      if (c.sign != 0) throw ValidationError("virtual crossing with a sign");
      if (c.incoming[0] == c.incoming[2] || c.incoming[1] == c.incoming[3]) {
        throw ValidationError("virtual strand without a direction at " + slot_text(c.edges));
      }
    }
  }
  build_index();
  build_components();
}

void Diagram::build_index() {
  std::map<int, std::vector<SlotRef>> ends;
  for (int ci = 0; ci < crossing_count(); ++ci) {
    for (int s = 0; s < 4; ++s) ends[crossings_[static_cast<std::size_t>(ci)].edges[static_cast<std::size_t>(s)]].push_back({ci, s});
  }
  edges_.clear();
  heads_.clear();
  tails_.clear();
  for (const auto& [label, refs] : ends) {
    if (refs.size() != 2) {
      throw ValidationError("edge " + std::to_string(label) + " occurs " + std::to_string(refs.size()) +
                            " times (expected 2)");
    }
    const bool in0 = crossing(refs[0].crossing).incoming[static_cast<std::size_t>(refs[0].slot)];
    const bool in1 = crossing(refs[1].crossing).incoming[static_cast<std::size_t>(refs[1].slot)];
    if (in0 == in1) {
      throw ValidationError("edge " + std::to_string(label) + " has " + (in0 ? "two heads" : "two tails"));
    }
    edges_.push_back(label);
    heads_.push_back(in0 ? refs[0] : refs[1]);
    tails_.push_back(in0 ? refs[1] : refs[0]);
  }
}

void Diagram::build_components() {
  components_.clear();
  component_of_edge_.assign(edges_.size(), -1);
  for (int start = 0; start < edge_count(); ++start) {
    if (component_of_edge_[static_cast<std::size_t>(start)] >= 0) continue;
    Component comp;
    const int id = static_cast<int>(components_.size());
    int e = start;
    do {
      component_of_edge_[static_cast<std::size_t>(e)] = id;
      comp.edges.push_back(edges_[static_cast<std::size_t>(e)]);
      SlotRef h = head(e);
      const Crossing& c = crossing(h.crossing);
      if (c.is_classical()) ++comp.classical_passes;
      e = edge_index(c.edges[static_cast<std::size_t>((h.slot + 2) % 4)]);
    } while (e != start);
    components_.push_back(std::move(comp));
  }
  if (!has_virtual()) {
    for (const auto& comp : components_) {
      if (comp.classical_passes % 2 != 0) {
        throw ValidationError("component through edge " + std::to_string(comp.edges.front()) +
                              " passes an odd number of crossings; not a planar diagram");
      }
    }
  }
  for (int i = 0; i < unknots_; ++i) components_.push_back(Component{});
}

int Diagram::classical_count() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& c) { return c.is_classical(); }));
}

bool Diagram::has_virtual() const {
  return std::any_of(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.is_virtual(); });
}

int Diagram::edge_index(int label) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), label);
  if (it == edges_.end() || *it != label) throw ValidationError("no edge " + std::to_string(label));
  return static_cast<int>(it - edges_.begin());
}

SlotRef Diagram::other_end(SlotRef ref) const {
  const int e = edge_index(crossing(ref.crossing).edges[static_cast<std::size_t>(ref.slot)]);
  return head(e) == ref ? tail(e) : head(e);
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

Diagram Diagram::mirror() const {
  std::vector<Crossing> out = crossings_;
  for (auto& c : out) {
    if (!c.is_classical()) continue;
    std::swap(c.edges[1], c.edges[3]);
    std::swap(c.incoming[1], c.incoming[3]);
    c.sign = -c.sign;
  }
  return Diagram(std::move(out), unknots_);
}

std::string Diagram::to_pd() const {
  std::ostringstream out;
  bool first = true;
  if (unknots_ > 0) {
    out << "unknots=" << unknots_;
    first = false;
  }
  for (const auto& c : crossings_) {
    if (!first) out << ' ';
    first = false;
    if (c.is_virtual()) out << 'P';
    else out << (c.sign > 0 ? "X+" : "X-");
    out << slot_text(c.edges);
  }
  return out.str();
}

PdSource parse_pd_terms(std::string_view text) {
  PdSource src;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("PD text, offset " + std::to_string(pos) + ": " + what);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool seen_header = false;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text.substr(pos, 8) == "unknots=") {
      if (seen_header) fail("duplicate unknots header");
      seen_header = true;
      pos += 8;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("unknots header needs a nonnegative integer");
      src.unknots = std::stoi(std::string(text.substr(start, pos - start)));
      continue;
    }
    PdTerm term;
    if (text[pos] == 'X') {
      ++pos;
      if (pos < text.size() && text[pos] == '+') {
        term.sign = 1;
        ++pos;
      } else if (pos < text.size() && text[pos] == '-') {
        term.sign = -1;
        ++pos;
      } else if (text.substr(pos, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
        term.sign = -1;
        pos += 3;
      }
    } else if (text[pos] == 'P') {
      term.kind = CrossingKind::virtual_crossing;
      ++pos;
    } else {
      fail(std::string("malformed token starting with '") + text[pos] + "'");
    }
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    for (int i = 0; i < 4; ++i) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("malformed token: expected a nonnegative edge id");
      term.edges[static_cast<std::size_t>(i)] = std::stoi(std::string(text.substr(start, pos - start)));
      skip_space();
      const char want = i < 3 ? ',' : ']';
      if (pos >= text.size() || text[pos] != want) {
        fail(i < 3 ? "malformed token: crossing needs four edge ids" : "malformed token: expected ']'");
      }
      ++pos;
    }
    src.terms.push_back(term);
  }
  return src;
}

Diagram orient(const PdSource& source) {
  const auto& terms = source.terms;
  std::map<int, std::vector<SlotRef>> ends;
  for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
    for (int s = 0; s < 4; ++s) ends[terms[static_cast<std::size_t>(t)].edges[static_cast<std::size_t>(s)]].push_back({t, s});
  }
  for (const auto& [label, refs] : ends) {
    if (refs.size() == 1) throw ValidationError("dangling edge " + std::to_string(label));
    if (refs.size() != 2) {
      throw ValidationError("edge " + std::to_string(label) + " occurs " + std::to_string(refs.size()) + " times");
    }
  }
  auto partner = [&](SlotRef r) {
    const auto& refs = ends.at(terms[static_cast<std::size_t>(r.crossing)].edges[static_cast<std::size_t>(r.slot)]);
    return refs[0] == r ? refs[1] : refs[0];
  };

  // entered[t][s] = true when the forward traversal of the slot's component
  // enters crossing t through slot s.
  std::vector<std::array<int, 4>> component_of(terms.size(), {-1, -1, -1, -1});
  std::vector<std::array<bool, 4>> entered(terms.size());
  std::vector<std::vector<int>> forward_labels;
  for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
    for (int s = 0; s < 4; ++s) {
      if (component_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] >= 0) continue;
      const int id = static_cast<int>(forward_labels.size());
      forward_labels.emplace_back();
      SlotRef in{t, s};
      do {
        SlotRef out{in.crossing, (in.slot + 2) % 4};
        component_of[static_cast<std::size_t>(in.crossing)][static_cast<std::size_t>(in.slot)] = id;
        component_of[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.slot)] = id;
        entered[static_cast<std::size_t>(in.crossing)][static_cast<std::size_t>(in.slot)] = true;
        entered[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.slot)] = false;
        forward_labels[static_cast<std::size_t>(id)].push_back(terms[static_cast<std::size_t>(out.crossing)].edges[static_cast<std::size_t>(out.slot)]);
        in = partner(out);
      } while (!(in == SlotRef{t, s}));
    }
  }

  // Per component: +1 keep forward, -1 reverse, 0 undecided.
  std::vector<int> decision(forward_labels.size(), 0);
  auto vote = [&](int comp, int v, const PdTerm& term) {
    int& d = decision[static_cast<std::size_t>(comp)];
    if (d != 0 && d != v) {
      throw ValidationError("conflicting orientation constraints at " + slot_text(term.edges));
    }
    d = v;
  };
  for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
    const auto& term = terms[static_cast<std::size_t>(t)];
    if (term.kind != CrossingKind::classical) continue;
    const auto& comp = component_of[static_cast<std::size_t>(t)];
    const auto& in = entered[static_cast<std::size_t>(t)];
    vote(comp[kUnderIn], in[kUnderIn] ? 1 : -1, term);
    if (term.sign) {
      const int over_in = *term.sign > 0 ? 3 : 1;
      vote(comp[static_cast<std::size_t>(over_in)], in[static_cast<std::size_t>(over_in)] ? 1 : -1, term);
    }
  }
  for (std::size_t c = 0; c < decision.size(); ++c) {
    if (decision[c] != 0) continue;
    // Sequential numbering: along the component each edge id is followed by
    // its successor, apart from one wrap-around.
    const auto& labels = forward_labels[c];
    const std::size_t m = labels.size();
    int ahead = 0, behind = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const int cur = labels[i], nxt = labels[(i + 1) % m];
      if (nxt == cur + 1) ++ahead;
      if (cur == nxt + 1) ++behind;
    }
    if (ahead == behind) {
      throw ValidationError("cannot derive the direction of the component through edge " +
                            std::to_string(labels.front()) + "; use X+/X- terms");
    }
    decision[c] = ahead > behind ? 1 : -1;
  }

  std::vector<Crossing> crossings;
  crossings.reserve(terms.size());
  for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
    const auto& term = terms[static_cast<std::size_t>(t)];
    Crossing c;
    c.kind = term.kind;
    c.edges = term.edges;
    for (int s = 0; s < 4; ++s) {
      const bool fwd = entered[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
      c.incoming[static_cast<std::size_t>(s)] = decision[static_cast<std::size_t>(component_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)])] > 0 ? fwd : !fwd;
    }
    if (c.is_classical()) {
      c.sign = c.incoming[3] ? 1 : -1;
      if (term.sign && *term.sign != c.sign) {
        throw ValidationError("explicit sign contradicts orientation at " + slot_text(term.edges));
      }
    }
    crossings.push_back(c);
  }
  return Diagram(std::move(crossings), source.unknots);
}

Diagram parse_pd(std::string_view text) { return orient(parse_pd_terms(text)); }

Diagram parse_pd(std::string_view text, int unknots) {
  PdSource src = parse_pd_terms(text);
  src.unknots += unknots;
  return orient(src);
}

std::string_view compass_name(Compass c) {
  switch (c) {
    case Compass::SW: return "SW";
    case Compass::SE: return "SE";
    case Compass::NE: return "NE";
    case Compass::NW: return "NW";
  }
  return "?";
}

CompassFrame canonical_frame(const Crossing& c) {
  if (!c.is_classical()) throw ValidationError("canonical frame of a virtual crossing");
  if (c.sign > 0) return {Compass::SW, Compass::SE, Compass::NE, Compass::NW};
  return {Compass::NW, Compass::SW, Compass::SE, Compass::NE};
}

}  // namespace skeinkit
