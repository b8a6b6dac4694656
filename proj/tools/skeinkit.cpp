#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeinkit/axioms.hpp"
#include "skeinkit/error.hpp"
#include "skeinkit/report.hpp"
#include "skeinkit/table.hpp"

#ifndef SKEINKIT_DATA_DIR
#define SKEINKIT_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
using namespace skeinkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string invariant = "enhanced";
  std::string pd;
  std::string scheme = "all";
  std::string table;
  std::string format = "text";
  double tolerance = 1e-6;
  std::uint64_t seed = 7;
  int count = 20;
  std::string moves = "r1,r2,r3";
  std::string name;
  bool check = false;
};

std::string default_table() { return std::string(SKEINKIT_DATA_DIR) + "/knots.jsonl"; }

struct NamedDiagram {
  std::string name;
  Diagram diagram;
};

std::vector<NamedDiagram> input_diagrams(const Options& o) {
  if (!o.pd.empty()) {
    const std::filesystem::path p(o.pd);
    std::error_code ec;
    const std::string name = std::filesystem::is_regular_file(p, ec) ? p.stem().string() : "inline";
    return {{name, load_diagram(o.pd)}};
  }
  std::vector<NamedDiagram> out;
  for (auto& e : load_table(o.table.empty() ? default_table() : o.table)) {
    if (!o.name.empty() && e.name != o.name) continue;
    out.push_back({e.name, e.diagram});
  }
  if (!o.name.empty() && out.empty()) throw ParseError("no table entry named '" + o.name + "'");
  return out;
}

int cmd_compute(const Options& o) {
  const InvariantKind kind = invariant_kind_from_string(o.invariant);
  json all = json::array();
  for (const auto& [name, d] : input_diagrams(o)) {
    const InvariantReport r = compute_report(name, d, kind);
    if (o.format == "json") all.push_back(to_json(r));
    else std::cout << to_text(r);
  }
  if (o.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

template <Ring R>
json axiom_suite(const CoefficientScheme<R>& scheme, bool& ok, std::ostream& text) {
  const ConstraintReport r2 = verify_r2_equations(scheme);
  const ConstraintReport r3 = verify_r3_equations(scheme);
  ConstraintReport out;
  for (int i = 0; i < 5; ++i) out.entries.push_back(verify_out_equation(i, scheme));
  const auto [pos, neg] = kink_factors(scheme);
  const R product = pos * neg;
  const bool kink_ok = product == ring_one(product);
  ok = ok && r2.all_ok() && r3.all_ok() && out.all_ok() && kink_ok;
  text << scheme.family << ": R2 " << r2.satisfied() << "/" << r2.entries.size() << ", R3 " << r3.satisfied() << "/"
       << r3.entries.size() << ", closures " << out.satisfied() << "/" << out.entries.size() << ", kink factors ("
       << pos.to_string() << ", " << neg.to_string() << ")" << (kink_ok ? "" : " product != 1") << "\n";
  for (const ConstraintReport* rep : std::array<const ConstraintReport*, 3>{&r2, &r3, &out}) {
    for (const auto& e : rep->entries) {
      if (!e.ok) text << "  FAILED " << e.id << ": residual " << e.residual << "\n";
    }
  }
  return {{"scheme", scheme.family},
          {"r2", to_json(r2)},
          {"r3", to_json(r3)},
          {"closures", to_json(out)},
          {"kink", {{"positive", pos.to_string()}, {"negative", neg.to_string()}, {"ok", kink_ok}}}};
}

int cmd_verify_axioms(const Options& o) {
  bool ok = true;
  std::ostringstream text;
  json j = json::array();
  if (o.scheme != "all") scheme_family_from_string(o.scheme);
  if (o.scheme == "all" || o.scheme == "symbolic") j.push_back(axiom_suite(make_symbolic_scheme(), ok, text));
  if (o.scheme == "all" || o.scheme == "nor") j.push_back(axiom_suite(make_nor_scheme(), ok, text));
  if (o.format == "json") std::cout << json{{"suite", "axioms"}, {"ok", ok}, {"results", j}}.dump(2) << "\n";
  else std::cout << text.str() << (ok ? "all satisfied\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

std::vector<MoveKind> parse_move_kinds(const std::string& list) {
  std::vector<MoveKind> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "r1") out.insert(out.end(), {MoveKind::r1_add, MoveKind::r1_remove});
    else if (item == "r2") out.insert(out.end(), {MoveKind::r2_add, MoveKind::r2_remove});
    else if (item == "r3") out.push_back(MoveKind::r3);
    else throw CLI::ValidationError("--moves", "unknown move '" + item + "' (expected r1, r2, r3)");
  }
  if (out.empty()) throw CLI::ValidationError("--moves", "empty move list");
  return out;
}

int cmd_verify_moves(const Options& o, const std::vector<MoveKind>& kinds) {
  const InvariantKind kind = invariant_kind_from_string(o.invariant);
  bool ok = true;
  json results = json::array();
  for (const auto& [name, d] : input_diagrams(o)) {
    const auto walk = random_move_walk(d, kinds, o.count, o.seed);
    const MoveInvarianceReport r = move_invariance_check(d, walk, kind);
    ok = ok && r.all_equal();
    json j = to_json(r);
    j["diagram"] = name;
    results.push_back(j);
    if (o.format != "json") {
      int equal = 0;
      for (const auto& c : r.checks) equal += c.equal ? 1 : 0;
      std::cout << name << ": " << equal << "/" << r.checks.size() << " moves preserve " << o.invariant
                << (r.all_equal() ? "" : "  FAILED") << "\n";
      for (const auto& c : r.checks) {
        if (!c.equal) std::cout << "  changed after " << c.description << "\n";
      }
    }
  }
  if (o.format == "json") {
    std::cout << json{{"suite", "moves"}, {"seed", o.seed}, {"ok", ok}, {"results", results}}.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_tri_jones(const Options& o) {
  bool ok = true;
  json results = json::array();
  const std::complex<double> t = std::polar(1.0, std::numbers::pi / 3.0);
  for (const auto& [name, d] : input_diagrams(o)) {
    const Integer tri = tri_count(d);
    const double predicted = 3.0 * std::norm(jones_eval(d, t));
    const double diff = std::abs(static_cast<double>(tri) - predicted);
    const bool good = diff <= o.tolerance;
    ok = ok && good;
    results.push_back({{"diagram", name}, {"tri", tri.str()}, {"three_v_squared", predicted}, {"ok", good}});
    if (o.format != "json") {
      std::cout << name << ": tri " << tri.str() << ", 3|V|^2 " << predicted << (good ? "" : "  FAILED") << "\n";
    }
  }
  if (o.format == "json") {
    std::cout << json{{"suite", "tri-jones"}, {"tolerance", o.tolerance}, {"ok", ok}, {"results", results}}.dump(2)
              << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// Compares the "expected" fields a table entry carries.
std::vector<std::string> expectation_mismatches(const KnotTableEntry& e) {
  std::vector<std::string> bad;
  const Diagram& d = e.diagram;
  for (const auto& [key, want] : e.expected.items()) {
    std::string got;
    if (key == "tri") got = tri_count(d).str();
    else if (key == "crossings") got = std::to_string(d.crossing_count());
    else if (key == "classical") got = std::to_string(d.classical_count());
    else if (key == "components") got = std::to_string(d.component_count());
    else if (key == "writhe") got = std::to_string(d.writhe());
    else if (key == "bicolorings") got = std::to_string(enumerate_bicolorings(d).colorings.size());
    else if (key == "kauffman") got = kauffman_bracket(d).to_string();
    else continue;
    const std::string w = want.is_string() ? want.get<std::string>() : want.dump();
    if (w != got) bad.push_back(key + ": expected " + w + ", got " + got);
  }
  return bad;
}

int cmd_table(const Options& o) {
  const auto entries = load_table(o.table.empty() ? default_table() : o.table);
  bool ok = true;
  json out = json::array();
  for (const auto& e : entries) {
    const auto bad = o.check ? expectation_mismatches(e) : std::vector<std::string>{};
    ok = ok && bad.empty();
    json j = entry_to_json(e.name, e.diagram, e.expected);
    if (o.check) j["mismatches"] = bad;
    out.push_back(j);
    if (o.format != "json") {
      std::cout << e.name << ": " << e.diagram.crossing_count() << " crossings, " << e.diagram.component_count()
                << " components, writhe " << e.diagram.writhe() << "\n";
      for (const auto& b : bad) std::cout << "  MISMATCH " << b << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinkit: colored bracket invariants of link diagrams"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> invariants{"kauffman", "jones", "enhanced", "nor", "tricolor", "tri"};
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "Compute an invariant of a diagram or of table entries");
  compute->add_option("--invariant", o.invariant, "kauffman, jones, enhanced, nor, tricolor or tri")
      ->required()
      ->check(CLI::IsMember(invariants));
  compute->add_option("--pd", o.pd, "PD file or inline PD text");
  compute->add_option("--table", o.table, "JSONL knot table");
  compute->add_option("--name", o.name, "Only this table entry");
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* axioms = verify->add_subcommand("axioms", "Reidemeister constraint systems and kink factors");
  axioms->add_option("--scheme", o.scheme, "symbolic, nor or all")->check(CLI::IsMember({"symbolic", "nor", "all"}));
  add_common(axioms);

  auto* moves = verify->add_subcommand("moves", "Invariance under seeded random Reidemeister moves");
  moves->add_option("--pd", o.pd, "PD file or inline PD text");
  moves->add_option("--table", o.table, "JSONL knot table");
  moves->add_option("--name", o.name, "Only this table entry");
  moves->add_option("--moves", o.moves, "Comma-separated subset of r1,r2,r3");
  moves->add_option("--seed", o.seed, "Random seed");
  moves->add_option("--count", o.count, "Moves per diagram")->check(CLI::NonNegativeNumber);
  moves->add_option("--invariant", o.invariant, "Invariant to compare")->check(CLI::IsMember(invariants));
  add_common(moves);

  auto* tri_jones = verify->add_subcommand("tri-jones", "tri(L) against 3|V(e^{2 pi i/6})|^2");
  tri_jones->add_option("--pd", o.pd, "PD file or inline PD text");
  tri_jones->add_option("--table", o.table, "JSONL knot table");
  tri_jones->add_option("--name", o.name, "Only this table entry");
  tri_jones->add_option("--tolerance", o.tolerance, "Absolute tolerance")->check(CLI::NonNegativeNumber);
  add_common(tri_jones);

  auto* table = app.add_subcommand("table", "List and check a knot table");
  table->add_option("--table", o.table, "JSONL knot table");
  table->add_flag("--check", o.check, "Compare the entries' expected values");
  add_common(table);

  try {
    app.parse(argc, argv);
    std::vector<MoveKind> kinds;
    if (*moves) kinds = parse_move_kinds(o.moves);
    if (*compute) return cmd_compute(o);
    if (*axioms) return cmd_verify_axioms(o);
    if (*moves) return cmd_verify_moves(o, kinds);
    if (*tri_jones) return cmd_verify_tri_jones(o);
    if (*table) return cmd_table(o);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const skeinkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
