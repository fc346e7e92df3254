#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdkit/catalog.hpp"
#include "cdkit/classify.hpp"
#include "cdkit/lattice.hpp"
#include "cdkit/measure.hpp"

namespace cdkit {

using json = nlohmann::ordered_json;

inline json check_result_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  if (!c.passed) {
    json w;
    w["subgroups"] = c.witness_subgroups;
    w["detail"] = c.detail;
    j["witness"] = std::move(w);
  }
  return j;
}

// Field names and ordering are fixed so reports diff cleanly. Measures are
// decimal strings.
inline json cd_report_json(const CDReport& rep, const std::vector<CheckResult>& checks) {
  json j;
  j["label"] = rep.label;
  j["order"] = rep.order;
  j["m_star"] = std::to_string(rep.m_star);
  json image = json::array();
  for (auto m : rep.image) image.push_back(std::to_string(m));
  j["image"] = std::move(image);
  j["delta"] = rep.delta;
  j["v"] = rep.v;
  j["cd_member_count"] = rep.cd_members.size();
  json flags;
  flags["is_sublattice"] = rep.is_sublattice;
  flags["is_modular"] = rep.is_modular;
  flags["is_self_dual"] = rep.is_self_dual;
  flags["min_abelian"] = rep.min_abelian;
  flags["min_normal"] = rep.min_normal;
  flags["min_contains_center"] = rep.min_contains_center;
  if (rep.min_characteristic == TriState::Skipped)
    flags["min_characteristic"] = "skipped";
  else
    flags["min_characteristic"] = rep.min_characteristic == TriState::True;
  j["flags"] = std::move(flags);
  json cs = json::array();
  for (const auto& c : checks) cs.push_back(check_result_json(c));
  j["checks"] = std::move(cs);
  return j;
}

// Hasse diagram in DOT form: one node per subgroup labeled
// "H<idx> |H|=<order> m=<measure>", CD members double-circled.
inline std::string dot_export(const SubgroupLattice& lat, const CDReport& rep) {
  std::vector<char> in_cd(lat.size(), 0);
  for (int i : rep.cd_members) in_cd[i] = 1;
  std::ostringstream out;
  out << "digraph cd_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  for (int i = 0; i < lat.size(); ++i) {
    out << "  H" << i << " [label=\"H" << i << " |H|=" << lat.subgroups[i].order()
        << " m=" << rep.measures[i] << "\"";
    if (in_cd[i]) out << ", peripheries=2";
    out << "];\n";
  }
  for (auto [h, k] : hasse_diagram(lat)) out << "  H" << h << " -> H" << k << ";\n";
  out << "}\n";
  return out.str();
}

// Human-readable subgroup table for the cd subcommand. Subgroups appear in
// lattice order; conjugacy-class representatives are starred.
inline std::string render_cd_table(const SubgroupLattice& lat, const CDReport& rep) {
  std::ostringstream out;
  out << "group " << rep.label << "  order " << rep.order << "\n";
  out << "idx   order  measure  cd  class\n";
  std::vector<char> in_cd(lat.size(), 0);
  for (int i : rep.cd_members) in_cd[i] = 1;
  for (int i = 0; i < lat.size(); ++i) {
    int cls = lat.class_of[i];
    bool repr = lat.classes[cls][0] == i;
    out << "H" << i;
    for (int pad = static_cast<int>(std::to_string(i).size()) + 1; pad < 6; ++pad) out << ' ';
    std::string ord = std::to_string(lat.subgroups[i].order());
    out << ord;
    for (int pad = static_cast<int>(ord.size()); pad < 7; ++pad) out << ' ';
    std::string ms = std::to_string(rep.measures[i]);
    out << ms;
    for (int pad = static_cast<int>(ms.size()); pad < 9; ++pad) out << ' ';
    out << (in_cd[i] ? "*" : ".") << "   " << cls << (repr ? "*" : "") << "\n";
  }
  out << "m* = " << rep.m_star << ", delta = " << rep.delta << ", v = " << rep.v << "\n";
  return out.str();
}

inline std::string render_info(const Group& g, const StructureTag& tag, bool nilpotent,
                               int center_order) {
  std::ostringstream out;
  out << "group: " << g.label() << "\n";
  out << "construction: " << g.construction() << "\n";
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  out << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
  out << "center order: " << center_order << "\n";
  out << "exponent: " << exponent(g) << "\n";
  out << "element orders:";
  for (auto [ord, cnt] : order_histogram(g)) out << " " << ord << "^" << cnt;
  out << "\n";
  out << "structure: " << tag.to_string() << "\n";
  return out.str();
}

inline json fingerprint_json(const Fingerprint& fp) {
  json j;
  j["order"] = fp.order;
  j["abelian"] = fp.abelian;
  j["center_order"] = fp.center_order;
  json hist = json::array();
  for (auto [ord, cnt] : fp.order_histogram) hist.push_back(json::array({ord, cnt}));
  j["order_histogram"] = std::move(hist);
  j["class_sizes"] = fp.class_sizes;
  if (fp.subgroup_count) j["subgroup_count"] = *fp.subgroup_count;
  return j;
}

inline json catalog_manifest_json(const Catalog& cat) {
  json j;
  j["max_order"] = cat.max_order;
  json entries = json::array();
  for (const auto& e : cat.entries) {
    json je;
    je["label"] = e.group.label();
    je["order"] = e.group.order();
    je["construction"] = e.group.construction();
    je["fingerprint"] = fingerprint_json(e.fp);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  json cov = json::array();
  for (auto [order, exhaustive] : cat.coverage) {
    json jc;
    jc["order"] = order;
    jc["exhaustive"] = exhaustive;
    cov.push_back(std::move(jc));
  }
  j["coverage"] = std::move(cov);
  return j;
}

}  // namespace cdkit
