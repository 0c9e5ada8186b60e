#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/topology.hpp"

#include <json.hpp>

namespace convlab {

enum class NodeKind { convergence, topology };

struct DiagramNode {
  std::string name;
  NodeKind kind;
  std::variant<Convergence, Topology> payload;
  /// Σ|λ(S)| over all classes, or the number of open sets.
  std::uint64_t size = 0;
};

struct DiagramRelation {
  std::string lhs;
  std::string rhs;
  /// "eq" for equal payloads, "le" (convergences) or "subset" (topologies)
  /// when lhs lies strictly below rhs.
  std::string rel;
  bool strict = false;
  /// Where rhs exceeds lhs, for strict pairs.
  std::string witness;
  std::string note;
};

struct DiagramReport {
  Carrier carrier;
  std::vector<DiagramNode> nodes;
  std::vector<DiagramRelation> relations;
  /// Node names grouped by equal payloads, in node order.
  std::vector<std::vector<std::string>> convergence_classes;
  std::vector<std::vector<std::string>> topology_classes;
  /// Covering pairs (lower, upper) between classes, by class index.
  std::vector<std::pair<std::size_t, std::size_t>> convergence_hasse;
  std::vector<std::pair<std::size_t, std::size_t>> topology_hasse;
  /// Expected relations that failed, each with a witness.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  int collapse_convergences() const { return static_cast<int>(convergence_classes.size()); }
  int collapse_topologies() const { return static_cast<int>(topology_classes.size()); }
};

/// Computes the ten convergence nodes and four topology nodes, compares every
/// pair and checks the expected hierarchy between them. Limited to
/// kMaxSweepAtoms.
DiagramReport build_diagram(const Carrier& carrier);

enum class ReportFormat { dot, json, table };
/// Throws ValidationError for anything but "dot", "json" or "table".
ReportFormat parse_report_format(std::string_view name);

std::string emit(const DiagramReport& report, ReportFormat format);
std::string emit(const DiagramReport& report, std::string_view format);

nlohmann::ordered_json report_to_json(const DiagramReport& report);
/// Checks the report schema; on failure returns false and fills `why`.
bool validate_report_json(const nlohmann::json& doc, std::string* why = nullptr);

}  // namespace convlab
