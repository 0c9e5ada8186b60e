#include "convlab/report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace convlab {

namespace {

constexpr const char* kAllowsStrict = "equal at this scale (strict in general)";

const Convergence& conv(const DiagramNode& n) { return std::get<Convergence>(n.payload); }
const Topology& topo(const DiagramNode& n) { return std::get<Topology>(n.payload); }

std::uint64_t convergence_size(const Convergence& c) {
  std::uint64_t total = 0;
  for (auto v : c.table().subspan(1)) total += static_cast<std::uint64_t>(std::popcount(v));
  return total;
}

bool below(const DiagramNode& a, const DiagramNode& b) {
  return a.kind == NodeKind::convergence ? leq_conv(conv(a), conv(b))
                                         : topo(a).coarser_than(topo(b));
}

// First open set of b that is not open in a.
std::optional<ElementSet> extra_open(const Topology& a, const Topology& b) {
  for (const auto& u : b.opens()) {
    if (!a.is_open(u)) return u;
  }
  return std::nullopt;
}

// Describes where `upper` exceeds `lower`.
std::string excess_witness(const DiagramNode& lower, const DiagramNode& upper) {
  if (lower.kind == NodeKind::convergence) {
    if (auto w = find_excess(conv(upper), conv(lower))) {
      return "class " + w->cls.to_string() + ": " + w->element.to_string() + " in " + upper.name +
             " only";
    }
    return {};
  }
  if (auto u = extra_open(topo(lower), topo(upper))) {
    return "open " + u->to_string() + " in " + upper.name + " only";
  }
  return {};
}

struct Expectation {
  enum Kind { edge, strict, equal } kind;
  std::string lower;
  std::string upper;
};

const std::vector<Expectation>& expectations() {
  static const std::vector<Expectation> list = {
      {Expectation::strict, "lambda_s", "lambda_ls"},
      {Expectation::strict, "lambda_s", "lambda_li"},
      {Expectation::strict, "lambda_s*", "lambda_ls*"},
      {Expectation::strict, "lambda_s*", "lambda_li*"},
      {Expectation::strict, "lim_O_lsi", "lim_O_ls"},
      {Expectation::strict, "lim_O_lsi", "lim_O_li"},
      {Expectation::edge, "lambda_ls", "lambda_ls*"},
      {Expectation::edge, "lambda_li", "lambda_li*"},
      {Expectation::edge, "lambda_s", "lambda_s*"},
      {Expectation::edge, "lambda_ls*", "lim_O_ls"},
      {Expectation::edge, "lambda_li*", "lim_O_li"},
      {Expectation::edge, "lim_O_s", "lim_O_lsi"},
      {Expectation::equal, "lambda_s*", "lim_O_s"},
      {Expectation::strict, "O_ls", "O_lsi"},
      {Expectation::strict, "O_li", "O_lsi"},
      {Expectation::edge, "O_lsi", "O_s"},
  };
  return list;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(
    const std::vector<std::size_t>& reps, const std::vector<std::vector<bool>>& le) {
  const std::size_t k = reps.size();
  auto lt = [&](std::size_t a, std::size_t b) {
    return a != b && le[reps[a]][reps[b]] && !le[reps[b]][reps[a]];
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m) covered = !(lt(a, m) && lt(m, b));
      if (covered) edges.emplace_back(a, b);
    }
  }
  return edges;
}

}  // namespace

DiagramReport build_diagram(const Carrier& carrier) {
  require_tabulable(carrier, "diagram construction");
  const Convergence ls = ls_convergence(carrier);
  const Convergence li = li_convergence(carrier);
  const Convergence s = s_convergence(carrier);
  const Topology o_ls = synthesize_O_lambda(ls);
  const Topology o_li = synthesize_O_lambda(li);
  const Topology o_s = synthesize_O_lambda(s);
  const Topology o_lsi = join_topologies(o_ls, o_li);

  DiagramReport report{carrier, {}, {}, {}, {}, {}, {}, {}};
  auto add_conv = [&](const Convergence& c, const std::string& name) {
    report.nodes.push_back({name, NodeKind::convergence, c.renamed(name), convergence_size(c)});
  };
  auto add_topo = [&](const Topology& t, const std::string& name) {
    report.nodes.push_back({name, NodeKind::topology, t, t.open_count()});
  };
  add_conv(ls, "lambda_ls");
  add_conv(li, "lambda_li");
  add_conv(s, "lambda_s");
  add_conv(star(ls), "lambda_ls*");
  add_conv(star(li), "lambda_li*");
  add_conv(star(s), "lambda_s*");
  add_conv(lim_of_topology_as_convergence(o_ls), "lim_O_ls");
  add_conv(lim_of_topology_as_convergence(o_li), "lim_O_li");
  add_conv(lim_of_topology_as_convergence(o_s), "lim_O_s");
  add_conv(lim_of_topology_as_convergence(o_lsi), "lim_O_lsi");
  add_topo(o_ls, "O_ls");
  add_topo(o_li, "O_li");
  add_topo(o_s, "O_s");
  add_topo(o_lsi, "O_lsi");

  const std::size_t n = report.nodes.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[report.nodes[i].name] = i;

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = i == j || (report.nodes[i].kind == report.nodes[j].kind &&
                            below(report.nodes[i], report.nodes[j]));
    }
  }

  // Expected hierarchy.
  std::map<std::pair<std::size_t, std::size_t>, Expectation::Kind> expected;
  for (const auto& e : expectations()) {
    const std::size_t lo = index.at(e.lower), hi = index.at(e.upper);
    expected[{lo, hi}] = e.kind;
    const auto& a = report.nodes[lo];
    const auto& b = report.nodes[hi];
    if (!le[lo][hi]) {
      report.violations.push_back(e.lower + " <= " + e.upper + " fails: " + excess_witness(b, a));
      continue;
    }
    if (e.kind == Expectation::strict && le[hi][lo]) {
      report.violations.push_back(e.lower + " < " + e.upper + " fails: the two are equal");
    }
    if (e.kind == Expectation::equal && !le[hi][lo]) {
      report.violations.push_back(e.lower + " = " + e.upper + " fails: " + excess_witness(a, b));
    }
  }
  auto meet_law = [&](const char* x, const char* y, const char* z) {
    const Convergence lhs = meet_conv(conv(report.nodes[index.at(x)]), conv(report.nodes[index.at(y)]));
    const Convergence& rhs = conv(report.nodes[index.at(z)]);
    if (!equal_conv(lhs, rhs)) {
      auto w = find_excess(lhs, rhs);
      if (!w) w = find_excess(rhs, lhs);
      report.violations.push_back(std::string(x) + " & " + y + " = " + z + " fails at class " +
                                  w->cls.to_string());
    }
  };
  meet_law("lambda_ls", "lambda_li", "lambda_s");
  meet_law("lambda_ls*", "lambda_li*", "lambda_s*");
  meet_law("lim_O_ls", "lim_O_li", "lim_O_lsi");

  // Pairwise relations.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = report.nodes[i];
      const auto& b = report.nodes[j];
      if (a.kind != b.kind) continue;
      const char* order = a.kind == NodeKind::convergence ? "le" : "subset";
      DiagramRelation r;
      std::size_t lo = i, hi = j;
      if (le[i][j] && le[j][i]) {
        r = {a.name, b.name, "eq", false, {}, {}};
      } else if (le[i][j] || le[j][i]) {
        if (!le[i][j]) std::swap(lo, hi);
        r = {report.nodes[lo].name, report.nodes[hi].name, order, true,
             excess_witness(report.nodes[lo], report.nodes[hi]), {}};
      } else {
        continue;
      }
      auto it = expected.find({lo, hi});
      if (it == expected.end()) it = expected.find({hi, lo});
      if (it != expected.end()) {
        if (it->second == Expectation::edge && !r.strict) r.note = kAllowsStrict;
        if (it->second == Expectation::strict && r.strict) r.note = "strict as expected";
        if (it->second == Expectation::edge && r.strict) r.note = "diagram edge";
        if (it->second == Expectation::equal && !r.strict) r.note = "equal as expected";
      }
      report.relations.push_back(std::move(r));
    }
  }

  // Equality classes and covering edges, per kind.
  for (auto kind : {NodeKind::convergence, NodeKind::topology}) {
    auto& classes =
        kind == NodeKind::convergence ? report.convergence_classes : report.topology_classes;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      if (report.nodes[i].kind != kind) continue;
      auto found = std::find_if(reps.begin(), reps.end(),
                                [&](std::size_t r) { return le[r][i] && le[i][r]; });
      if (found == reps.end()) {
        reps.push_back(i);
        classes.push_back({report.nodes[i].name});
      } else {
        classes[static_cast<std::size_t>(found - reps.begin())].push_back(report.nodes[i].name);
      }
    }
    (kind == NodeKind::convergence ? report.convergence_hasse : report.topology_hasse) =
        hasse(reps, le);
  }
  return report;
}

// ------------------------------------------------------------------- emit

ReportFormat parse_report_format(std::string_view name) {
  if (name == "dot") return ReportFormat::dot;
  if (name == "json") return ReportFormat::json;
  if (name == "table") return ReportFormat::table;
  throw ValidationError("unknown report format '" + std::string(name) +
                        "' (expected dot, json or table)");
}

namespace {

std::string join_names(const std::vector<std::string>& names, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

std::string emit_dot(const DiagramReport& r) {
  std::ostringstream os;
  os << "digraph convergences {\n  rankdir=BT;\n  node [shape=box];\n";
  auto cluster = [&](const char* id, const char* label, const char* prefix,
                     const std::vector<std::vector<std::string>>& classes,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    os << "  subgraph cluster_" << id << " {\n    label=\"" << label << "\";\n";
    for (std::size_t k = 0; k < classes.size(); ++k) {
      os << "    " << prefix << k << " [label=\"" << join_names(classes[k], " = ") << "\"];\n";
    }
    for (const auto& [lo, hi] : edges) os << "    " << prefix << lo << " -> " << prefix << hi << ";\n";
    os << "  }\n";
  };
  cluster("convergences", "convergences", "c", r.convergence_classes, r.convergence_hasse);
  cluster("topologies", "topologies", "t", r.topology_classes, r.topology_hasse);
  os << "}\n";
  return os.str();
}

std::string emit_table(const DiagramReport& r) {
  std::ostringstream os;
  os << "P(" << r.carrier.atoms() << "): " << r.collapse_convergences()
     << " distinct convergences, " << r.collapse_topologies() << " distinct topologies\n\n";

  std::size_t name_w = 4;
  for (const auto& n : r.nodes) name_w = std::max(name_w, n.name.size());
  os << "nodes\n";
  for (const auto& n : r.nodes) {
    os << "  " << n.name << std::string(name_w - n.name.size(), ' ') << "  "
       << (n.kind == NodeKind::convergence ? "convergence" : "topology   ") << "  " << n.size
       << "\n";
  }
  os << "\nequality classes\n";
  for (const auto* classes : {&r.convergence_classes, &r.topology_classes}) {
    for (const auto& c : *classes) os << "  " << join_names(c, " = ") << "\n";
  }

  std::size_t lhs_w = 3, rel_w = 3, rhs_w = 3;
  for (const auto& rel : r.relations) {
    lhs_w = std::max(lhs_w, rel.lhs.size());
    rel_w = std::max(rel_w, rel.rel.size());
    rhs_w = std::max(rhs_w, rel.rhs.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  os << "\nrelations\n  " << pad("lhs", lhs_w) << "  " << pad("rel", rel_w) << "  "
     << pad("rhs", rhs_w) << "  strict  witness / note\n";
  for (const auto& rel : r.relations) {
    std::string tail = rel.witness;
    if (!rel.note.empty()) tail += (tail.empty() ? "" : "; ") + rel.note;
    os << "  " << pad(rel.lhs, lhs_w) << "  " << pad(rel.rel, rel_w) << "  " << pad(rel.rhs, rhs_w)
       << "  " << (rel.strict ? "yes   " : "no    ") << "  " << tail << "\n";
  }
  os << "\n" << (r.ok() ? "all expected relations hold" : "VIOLATIONS") << "\n";
  for (const auto& v : r.violations) os << "  " << v << "\n";
  return os.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const DiagramReport& r) {
  nlohmann::ordered_json doc;
  doc["carrier"] = {{"atoms", r.carrier.atoms()}};
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back({{"name", n.name},
                     {"kind", n.kind == NodeKind::convergence ? "convergence" : "topology"},
                     {"size", n.size}});
  }
  auto& rels = doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& rel : r.relations) {
    nlohmann::ordered_json entry = {{"lhs", rel.lhs},
                                    {"rhs", rel.rhs},
                                    {"rel", rel.rel},
                                    {"strict", rel.strict},
                                    {"witness", rel.witness}};
    if (!rel.note.empty()) entry["note"] = rel.note;
    rels.push_back(std::move(entry));
  }
  doc["collapse"] = {{"convergences", r.collapse_convergences()},
                     {"topologies", r.collapse_topologies()}};
  doc["violations"] = r.violations;
  return doc;
}

bool validate_report_json(const nlohmann::json& doc, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!doc.is_object()) return fail("document is not an object");
  for (const char* key : {"carrier", "nodes", "relations", "collapse"}) {
    if (!doc.contains(key)) return fail(std::string("missing key '") + key + "'");
  }
  const auto& carrier = doc["carrier"];
  if (!carrier.is_object() || !carrier.contains("atoms") || !carrier["atoms"].is_number_integer()) {
    return fail("carrier.atoms must be an integer");
  }
  const auto atoms = carrier["atoms"].get<int>();
  if (atoms < 1 || atoms > kMaxAtoms) return fail("carrier.atoms out of range");

  if (!doc["nodes"].is_array()) return fail("nodes must be an array");
  std::set<std::string> names;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("name") || !n["name"].is_string() || !n.contains("kind") ||
        !n["kind"].is_string() || !n.contains("size") || !n["size"].is_number_unsigned()) {
      return fail("node entries need string name, string kind, unsigned size");
    }
    const auto kind = n["kind"].get<std::string>();
    if (kind != "convergence" && kind != "topology") return fail("unknown node kind " + kind);
    if (!names.insert(n["name"].get<std::string>()).second) return fail("duplicate node name");
  }

  if (!doc["relations"].is_array()) return fail("relations must be an array");
  for (const auto& r : doc["relations"]) {
    if (!r.is_object()) return fail("relation entries must be objects");
    for (const char* key : {"lhs", "rhs", "rel", "witness"}) {
      if (!r.contains(key) || !r[key].is_string()) {
        return fail(std::string("relation.") + key + " must be a string");
      }
    }
    if (!r.contains("strict") || !r["strict"].is_boolean()) return fail("relation.strict must be boolean");
    if (!names.count(r["lhs"].get<std::string>()) || !names.count(r["rhs"].get<std::string>())) {
      return fail("relation refers to an unknown node");
    }
    const auto rel = r["rel"].get<std::string>();
    if (rel != "eq" && rel != "le" && rel != "subset") return fail("unknown relation " + rel);
    if ((rel == "eq") == r["strict"].get<bool>()) return fail("strict flag contradicts relation");
  }

  const auto& collapse = doc["collapse"];
  if (!collapse.is_object() || !collapse.contains("convergences") ||
      !collapse.contains("topologies") || !collapse["convergences"].is_number_integer() ||
      !collapse["topologies"].is_number_integer()) {
    return fail("collapse needs integer convergences and topologies");
  }
  return true;
}

std::string emit(const DiagramReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::dot: return emit_dot(report);
    case ReportFormat::json: return report_to_json(report).dump(2) + "\n";
    case ReportFormat::table: return emit_table(report);
  }
  return {};
}

std::string emit(const DiagramReport& report, std::string_view format) {
  return emit(report, parse_report_format(format));
}

}  // namespace convlab
