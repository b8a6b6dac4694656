#include "skeinkit/table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "skeinkit/error.hpp"

namespace skeinkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

PdTerm term_from(const json& tuple, const std::string& kind, int line) {
  if (!tuple.is_array() || tuple.size() != 4) fail(line, "each pd entry must be an array of 4 edge ids");
  PdTerm t;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!tuple[k].is_number_integer() || tuple[k].get<long long>() < 0) fail(line, "edge ids must be nonnegative integers");
    t.edges[k] = tuple[k].get<int>();
  }
  if (kind == "X") {
  } else if (kind == "X+") {
    t.sign = 1;
  } else if (kind == "X-") {
    t.sign = -1;
  } else if (kind == "P") {
    t.kind = CrossingKind::virtual_crossing;
  } else {
    fail(line, "unknown crossing kind '" + kind + "'");
  }
  return t;
}

KnotTableEntry entry_from(const json& j, int line) {
  if (!j.is_object()) fail(line, "entry must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "pd" && key != "kinds" && key != "unknots" && key != "expected") {
      fail(line, "unknown field '" + key + "'");
    }
  }
  KnotTableEntry e;
  e.line = line;
  if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty()) {
    fail(line, "missing or empty \"name\"");
  }
  e.name = j["name"].get<std::string>();
  if (!j.contains("pd") || !j["pd"].is_array()) fail(line, "missing \"pd\" array");
  const json& pd = j["pd"];
  std::vector<std::string> kinds(pd.size(), "X");
  if (j.contains("kinds")) {
    if (!j["kinds"].is_array() || j["kinds"].size() != pd.size()) fail(line, "\"kinds\" must match \"pd\" in length");
    for (std::size_t i = 0; i < pd.size(); ++i) {
      if (!j["kinds"][i].is_string()) fail(line, "\"kinds\" entries must be strings");
      kinds[i] = j["kinds"][i].get<std::string>();
    }
  }
  PdSource src;
  for (std::size_t i = 0; i < pd.size(); ++i) src.terms.push_back(term_from(pd[i], kinds[i], line));
  if (j.contains("unknots")) {
    if (!j["unknots"].is_number_integer() || j["unknots"].get<long long>() < 0) {
      fail(line, "\"unknots\" must be a nonnegative integer");
    }
    src.unknots = j["unknots"].get<int>();
  }
  if (j.contains("expected")) {
    if (!j["expected"].is_object()) fail(line, "\"expected\" must be an object");
    e.expected = j["expected"];
  }
  try {
    e.diagram = orient(src);
  } catch (const Error& err) {
    fail(line, e.name + ": " + err.what());
  }
  return e;
}

}  // namespace

std::vector<KnotTableEntry> parse_table(std::string_view text) {
  std::vector<KnotTableEntry> out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::parse_error& err) {
      fail(line, std::string("invalid JSON: ") + err.what());
    }
    KnotTableEntry e = entry_from(j, line);
    if (!names.insert(e.name).second) fail(line, "duplicate name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<KnotTableEntry> load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

nlohmann::json entry_to_json(const std::string& name, const Diagram& d, const nlohmann::json& expected) {
  json pd = json::array();
  json kinds = json::array();
  for (const auto& c : d.crossings()) {
    pd.push_back(c.edges);
    kinds.push_back(c.is_virtual() ? "P" : (c.sign > 0 ? "X+" : "X-"));
  }
  json j{{"name", name}, {"pd", pd}, {"kinds", kinds}, {"unknots", d.unknots()}};
  if (!expected.empty()) j["expected"] = expected;
  return j;
}

Diagram load_diagram(const std::string& file_or_inline) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file_or_inline, ec)) {
    std::ifstream in(file_or_inline);
    if (!in) throw ParseError("cannot open '" + file_or_inline + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pd(buf.str());
  }
  return parse_pd(file_or_inline);
}

}  // namespace skeinkit
