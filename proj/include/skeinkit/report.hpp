#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skeinkit/axioms.hpp"

namespace skeinkit {

struct ReportValue {
  int coloring = 0;
  std::string value;
  friend bool operator==(const ReportValue&, const ReportValue&) = default;
};

// Result of one invariant computation on one diagram.
struct InvariantReport {
  std::string diagram;
  std::string invariant;
  std::vector<ReportValue> values;
  int writhe = 0;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Computes `kind` on `d`. Multi-valued invariants list one value per
// coloring in enumeration order; the others list a single value.
InvariantReport compute_report(const std::string& name, const Diagram& d, InvariantKind kind);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstraintReport& r);
ConstraintReport constraint_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MoveInvarianceReport& r);

// Human-readable text for an invariant report.
std::string to_text(const InvariantReport& r);

}  // namespace skeinkit
