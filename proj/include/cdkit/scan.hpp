#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cdkit/report.hpp"

namespace cdkit {

struct ScanOptions {
  int max_order = 60;
  std::string check = "all";  // delta | v | props | all
  int jobs = 1;
};

struct ScanOutcome {
  json report;
  long long counterexamples = 0;
};

namespace detail {

struct GroupScan {
  json entry;
  long long counterexamples = 0;
  bool nilpotent_v3 = false;
  std::string label;
};

inline CheckResult cd_structure_check(const CDReport& rep) {
  const char* name = "cd_structure";
  std::string why;
  if (!rep.is_sublattice) why = "CD is not closed under meet/join";
  else if (!rep.is_modular) why = "CD violates the modular law";
  else if (!rep.modular_check_complete) why = "modular-law check exceeded its budget";
  else if (!rep.is_self_dual) why = "centralizer map is not an order-reversing involution on CD";
  else if (!rep.min_unique) why = "minimal CD member is not unique";
  else if (!rep.min_abelian) why = "minimal CD member is not abelian";
  else if (!rep.min_normal) why = "minimal CD member is not normal";
  else if (!rep.min_contains_center) why = "minimal CD member does not contain the center";
  else if (rep.min_characteristic == TriState::False)
    why = "minimal CD member is moved by an automorphism";
  if (why.empty()) return CheckResult::pass(name);
  return CheckResult::fail(name, why, {rep.min_member});
}

inline GroupScan scan_one(const Group& g, const std::string& selection) {
  GroupScan out;
  out.label = g.label();
  SubgroupLattice lat = all_subgroups(g);
  CDReport rep = cd_report(g, lat);
  StructureTag tag = recognize(g);
  bool nilpotent = is_nilpotent(g, lat);

  std::vector<CheckResult> checks;
  const bool want_delta = selection == "delta" || selection == "all";
  const bool want_v = selection == "v" || selection == "all";
  const bool want_props = selection == "props" || selection == "all";

  if (want_delta) {
    std::string err = delta_classification_violation(tag, rep.delta);
    checks.push_back(err.empty() ? CheckResult::pass("delta_classification")
                                 : CheckResult::fail("delta_classification", err, {}));
  }
  if (want_v) {
    std::string err = v_classification_violation(tag, rep.v, nilpotent);
    checks.push_back(err.empty() ? CheckResult::pass("v_classification")
                                 : CheckResult::fail("v_classification", err, {}));
    if (nilpotent && rep.v == 3) out.nilpotent_v3 = true;
  }
  if (want_props) {
    checks.push_back(check_centralizer_duality(g, lat));
    checks.push_back(check_measure_divisibility(g, lat));
    checks.push_back(check_consecutive_image(g, lat));
    checks.push_back(check_center_equivalences(g, lat));
    checks.push_back(check_image_lower_bound(g, lat));
    checks.push_back(cd_structure_check(rep));
  }

  json je;
  je["label"] = g.label();
  je["order"] = g.order();
  je["delta"] = rep.delta;
  je["v"] = rep.v;
  je["tag"] = tag.to_string();
  json jc = json::array();
  for (const auto& c : checks) {
    if (!c.passed) ++out.counterexamples;
    jc.push_back(check_result_json(c));
  }
  je["checks"] = std::move(jc);
  out.entry = std::move(je);
  return out;
}

}  // namespace detail

// Runs the selected checkers over the builtin catalog. Workers process one
// group each; results are merged in catalog order, so the report is
// byte-identical for any job count.
inline ScanOutcome run_scan(const ScanOptions& opt) {
  if (opt.check != "delta" && opt.check != "v" && opt.check != "props" &&
      opt.check != "all")
    throw ParseError("unknown check selection '" + opt.check + "'");
  if (opt.max_order < 1 || opt.max_order > 200)
    throw InvalidParameters("scan max order must be in 1..200");

  Catalog cat = builtin_catalog(opt.max_order);
  const std::size_t count = cat.entries.size();
  std::vector<detail::GroupScan> results(count);

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i)
      results[i] = detail::scan_one(cat.entries[i].group, opt.check);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = detail::scan_one(cat.entries[i].group, opt.check);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  ScanOutcome out;
  json groups = json::array();
  json nilpotent_v3 = json::array();
  for (auto& r : results) {
    out.counterexamples += r.counterexamples;
    if (r.nilpotent_v3) nilpotent_v3.push_back(r.label);
    groups.push_back(std::move(r.entry));
  }

  json report;
  report["max_order"] = opt.max_order;
  report["check"] = opt.check;
  report["groups"] = std::move(groups);
  json summary;
  summary["groups_scanned"] = count;
  summary["counterexamples"] = out.counterexamples;
  json exhaustive = json::array();
  for (auto [order, flag] : cat.coverage)
    if (flag) exhaustive.push_back(order);
  summary["orders_exhaustive"] = std::move(exhaustive);
  if (opt.check == "v" || opt.check == "all")
    summary["nilpotent_v3"] = std::move(nilpotent_v3);
  report["summary"] = std::move(summary);
  out.report = std::move(report);
  return out;
}

}  // namespace cdkit
