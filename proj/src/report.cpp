#include "skeinkit/report.hpp"

#include <sstream>

#include "skeinkit/error.hpp"

namespace skeinkit {

using nlohmann::json;

namespace {

template <class Multiset>
void add_values(InvariantReport& r, const Multiset& m) {
  for (const auto& v : m.values) r.values.push_back({v.coloring, v.value.to_string()});
}

}  // namespace

InvariantReport compute_report(const std::string& name, const Diagram& d, InvariantKind kind) {
  InvariantReport r;
  r.diagram = name;
  r.invariant = std::string(invariant_kind_name(kind));
  r.writhe = d.writhe();
  switch (kind) {
    case InvariantKind::kauffman: r.values.push_back({0, kauffman_bracket(d).to_string()}); break;
    case InvariantKind::jones: r.values.push_back({0, kauffman_f(d).to_string()}); break;
    case InvariantKind::tri: r.values.push_back({0, tri_count(d).str()}); break;
    case InvariantKind::enhanced: {
      const auto m = enhanced_invariant(d);
      if (m.diagnostic) throw ColoringError(*m.diagnostic);
      add_values(r, m);
      break;
    }
    case InvariantKind::nor: {
      const auto m = nor_phi(d);
      if (m.diagnostic) throw ColoringError(*m.diagnostic);
      add_values(r, m);
      break;
    }
    case InvariantKind::tricolor: add_values(r, tricolor_invariant(d)); break;
  }
  return r;
}

json to_json(const InvariantReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back({{"coloring", v.coloring}, {"value", v.value}});
  return {{"diagram", r.diagram}, {"invariant", r.invariant}, {"values", values}, {"writhe", r.writhe}};
}

InvariantReport invariant_report_from_json(const json& j) {
  InvariantReport r;
  r.diagram = j.at("diagram").get<std::string>();
  r.invariant = j.at("invariant").get<std::string>();
  r.writhe = j.at("writhe").get<int>();
  for (const auto& v : j.at("values")) r.values.push_back({v.at("coloring").get<int>(), v.at("value").get<std::string>()});
  return r;
}

json to_json(const ConstraintReport& r) {
  json out = json::array();
  for (const auto& e : r.entries) {
    out.push_back({{"eq", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"residual", e.residual}, {"ok", e.ok}});
  }
  return out;
}

ConstraintReport constraint_report_from_json(const json& j) {
  ConstraintReport r;
  for (const auto& e : j) {
    r.entries.push_back({e.at("eq").get<std::string>(), e.value("lhs", ""), e.value("rhs", ""),
                         e.at("residual").get<std::string>(), e.at("ok").get<bool>()});
  }
  return r;
}

json to_json(const MoveInvarianceReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"move", c.description}, {"diagram", c.diagram}, {"values", c.values}, {"equal", c.equal}});
  }
  return {{"invariant", std::string(invariant_kind_name(r.kind))},
          {"original", r.original},
          {"checks", checks},
          {"ok", r.all_equal()}};
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << r.diagram << " " << r.invariant << " (writhe " << r.writhe << ")\n";
  for (const auto& v : r.values) {
    if (r.values.size() > 1) out << "  [" << v.coloring << "] ";
    else out << "  ";
    out << v.value << "\n";
  }
  return out.str();
}

}  // namespace skeinkit
