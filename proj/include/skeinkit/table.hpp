#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// One line of a knot table: {"name", "pd", "kinds", "unknots", "expected"}.
struct KnotTableEntry {
  std::string name;
  Diagram diagram;
  nlohmann::json expected = nlohmann::json::object();
  int line = 0;
};

// JSONL text, one entry per non-blank line. Throws ParseError naming the
// offending line for schema violations, invalid PD data or duplicate names.
std::vector<KnotTableEntry> parse_table(std::string_view text);
std::vector<KnotTableEntry> load_table(const std::filesystem::path& path);

// The entry as a table line.
nlohmann::json entry_to_json(const std::string& name, const Diagram& d, const nlohmann::json& expected);

// PD source from a file path if one exists, otherwise the text itself.
Diagram load_diagram(const std::string& file_or_inline);

}  // namespace skeinkit
