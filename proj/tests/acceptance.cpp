// Acceptance suite: end-to-end checks of the computed delta/v values, the
// CD lattices of the quaternion and modular families, the structural
// property suite over the builtin catalog, oracle equivalence for the
// subgroup enumeration, and determinism of the scan CLI.
//
// Usage: acceptance <path-to-cdkit-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdkit/catalog.hpp"
#include "cdkit/classify.hpp"
#include "cdkit/measure.hpp"
#include "cdkit/scan.hpp"

using namespace cdkit;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void criterion(int number, bool ok, const std::string& description) {
  std::printf("criterion %d: %s - %s\n", number, ok ? "PASS" : "FAIL", description.c_str());
  for (const auto& n : g_notes) std::printf("    %s\n", n.c_str());
  g_notes.clear();
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct DeltaVExpectation {
  Group group;
  long long delta = -1;  // -1 means unchecked
  long long v = -1;
};

// Computes delta and v and enforces the per-group sub-second requirement.
bool check_delta_v(const DeltaVExpectation& e) {
  auto start = Clock::now();
  auto lat = all_subgroups(e.group);
  auto rep = cd_report(e.group, lat);
  double elapsed = seconds_since(start);
  bool ok = elapsed < 1.0;
  if (!ok) note(e.group.label() + ": took " + std::to_string(elapsed) + "s");
  if (e.delta >= 0 && rep.delta != e.delta) {
    note(e.group.label() + ": delta = " + std::to_string(rep.delta) + ", expected " +
         std::to_string(e.delta));
    ok = false;
  }
  if (e.v >= 0 && rep.v != e.v) {
    note(e.group.label() + ": v = " + std::to_string(rep.v) + ", expected " +
         std::to_string(e.v));
    ok = false;
  }
  return ok;
}

bool criterion1_delta_values() {
  std::vector<DeltaVExpectation> cases;
  for (int p : {2, 3, 5, 7}) cases.push_back({cyclic(p), 1, -1});
  cases.push_back({dicyclic(2), 1, -1});
  for (int p : {2, 3, 5}) cases.push_back({cyclic(p * p), 2, -1});
  cases.push_back({cyclic(6), 3, -1});
  cases.push_back({cyclic(15), 3, -1});
  for (int p : {2, 3, 5}) cases.push_back({cyclic(p * p * p), 3, -1});
  for (int p : {2, 3}) cases.push_back({cyclic(p * p * p * p), 4, -1});
  cases.push_back({abelian_from_invariants({2, 2}), 4, -1});
  cases.push_back({modular_group(3, 3), 4, -1});
  bool ok = true;
  for (const auto& c : cases) ok = check_delta_v(c) && ok;
  return ok;
}

bool criterion2_v_values() {
  std::vector<DeltaVExpectation> cases;
  for (int p : {2, 3, 5, 7}) cases.push_back({cyclic(p), -1, 1});
  cases.push_back({dicyclic(2), -1, 1});
  for (int q : {2, 3, 5}) cases.push_back({cyclic(q * q), -1, 2});
  for (int p : {3, 5, 7}) cases.push_back({modular_group(p, 3), -1, 2});
  cases.push_back({metacyclic(3, 2, 2), -1, 3});   // nonabelian order 6
  cases.push_back({metacyclic(5, 2, 4), -1, 3});   // nonabelian order 10
  cases.push_back({metacyclic(7, 3, 2), -1, 3});   // nonabelian order 21
  bool ok = true;
  for (const auto& c : cases) ok = check_delta_v(c) && ok;
  return ok;
}

bool criterion3_quaternion_cd_sets() {
  bool ok = true;
  for (int n : {3, 4, 5}) {
    int m = 1 << (n - 2);
    Group q = dicyclic(m);
    auto lat = all_subgroups(q);
    auto rep = cd_report(q, lat);
    Measure expect_mstar = static_cast<Measure>(ipow(2, 2 * n - 2));
    if (rep.m_star != expect_mstar) {
      note(q.label() + ": m* = " + std::to_string(rep.m_star) + ", expected " +
           std::to_string(expect_mstar));
      ok = false;
    }
    std::set<std::vector<int>> got;
    for (int i : rep.cd_members) got.insert(lat.subgroups[i].elements());
    std::set<std::vector<int>> want;
    if (n == 3) {
      // Q8, <a>, <b>, <ab>, <a^2> with a = index 1, b = index 2m
      want.insert(SubgroupSet::full(q).elements());
      want.insert(SubgroupSet::generated(q, {1}).elements());
      want.insert(SubgroupSet::generated(q, {2 * m}).elements());
      want.insert(SubgroupSet::generated(q, {q.mult(1, 2 * m)}).elements());
      want.insert(SubgroupSet::generated(q, {q.mult(1, 1)}).elements());
    } else {
      want.insert(SubgroupSet::generated(q, {1}).elements());
    }
    if (got != want) {
      note(q.label() + ": CD member sets differ from the expected list");
      ok = false;
    }
  }
  return ok;
}

bool criterion4_modular_family() {
  bool ok = true;
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {3, 4}, {7, 3}}) {
    Group g = modular_group(p, n);
    auto lat = all_subgroups(g);
    auto rep = cd_report(g, lat);
    std::string name = g.label();
    Measure expect_mstar = static_cast<Measure>(ipow(p, 2 * n - 2));
    if (rep.m_star != expect_mstar) {
      note(name + ": m* = " + std::to_string(rep.m_star) + ", expected " +
           std::to_string(expect_mstar));
      ok = false;
    }
    int a_idx = lat.index_of(SubgroupSet::generated(g, {1}).members());
    bool a_in_cd = a_idx >= 0 && std::find(rep.cd_members.begin(), rep.cd_members.end(),
                                           a_idx) != rep.cd_members.end();
    if (!a_in_cd) {
      note(name + ": <a> is not in the CD lattice");
      ok = false;
    }
    int non_normal_classes = 0, representative = -1;
    for (const auto& cls : lat.classes)
      if (cls.size() > 1) {
        ++non_normal_classes;
        representative = cls.front();
      }
    if (non_normal_classes != 1) {
      note(name + ": " + std::to_string(non_normal_classes) + " non-normal classes");
      ok = false;
    } else {
      if (lat.subgroups[representative].order() != p) {
        note(name + ": non-normal class representative has order " +
             std::to_string(lat.subgroups[representative].order()));
        ok = false;
      }
      // <b> (b = index p^(n-1)) belongs to that class
      int b_idx = lat.index_of(
          SubgroupSet::generated(g, {static_cast<int>(ipow(p, n - 1))}).members());
      if (b_idx < 0 || lat.class_of[b_idx] != lat.class_of[representative]) {
        note(name + ": <b> is not in the non-normal class");
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion5_property_suite() {
  auto start = Clock::now();
  Catalog cat = builtin_catalog(100);
  bool ok = true;
  long long failures = 0;
  for (const auto& e : cat.entries) {
    const Group& g = e.group;
    auto lat = all_subgroups(g);
    auto rep = cd_report(g, lat);
    std::vector<CheckResult> checks{
        check_centralizer_duality(g, lat), check_measure_divisibility(g, lat),
        check_consecutive_image(g, lat),   check_center_equivalences(g, lat),
        check_image_lower_bound(g, lat),
    };
    for (const auto& c : checks)
      if (!c.passed) {
        note(g.label() + " " + c.name + ": " + c.detail);
        ++failures;
      }
    bool structure = rep.is_sublattice && rep.is_modular && rep.modular_check_complete &&
                     rep.is_self_dual && rep.min_unique && rep.min_abelian &&
                     rep.min_normal && rep.min_contains_center;
    if (g.order() <= 64) {
      if (rep.min_characteristic != TriState::True) {
        note(g.label() + ": minimal member characteristic check did not verify");
        structure = false;
      }
    }
    if (!structure) {
      note(g.label() + ": CD structure flags failed");
      ++failures;
    }
  }
  double elapsed = seconds_since(start);
  if (failures > 0) ok = false;
  if (elapsed >= 60.0) {
    note("property suite took " + std::to_string(elapsed) + "s (budget 60s)");
    ok = false;
  }
  note(std::to_string(cat.entries.size()) + " groups to order 100 in " +
       std::to_string(elapsed) + "s, " + std::to_string(failures) + " failures");
  return ok;
}

bool criterion6_oracle_equivalence() {
  Catalog cat = builtin_catalog(16);
  bool ok = true;
  for (const auto& e : cat.entries) {
    const Group& g = e.group;
    const int n = g.order();
    std::set<std::vector<int>> oracle;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (!(mask & 1)) continue;
      if (n % __builtin_popcount(mask) != 0) continue;
      bool closed = true;
      for (int a = 0; a < n && closed; ++a) {
        if (!(mask & (1u << a))) continue;
        for (int b = 0; b < n; ++b) {
          if (!(mask & (1u << b))) continue;
          if (!(mask & (1u << g.mult(a, b)))) {
            closed = false;
            break;
          }
        }
      }
      if (!closed) continue;
      std::vector<int> elems;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) elems.push_back(i);
      oracle.insert(std::move(elems));
    }
    auto lat = all_subgroups(g);
    std::set<std::vector<int>> enumerated;
    for (const auto& h : lat.subgroups) enumerated.insert(h.elements());
    if (enumerated != oracle) {
      note(g.label() + ": enumeration (" + std::to_string(enumerated.size()) +
           ") differs from subset oracle (" + std::to_string(oracle.size()) + ")");
      ok = false;
    }
  }
  return ok;
}

int run_command(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return rc >> 8;  // wait status -> exit code on POSIX
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion7_scan_cli(const std::string& binary, std::string& report_j1) {
  std::string out = "acceptance_scan_j1.json";
  int rc = run_command("\"" + binary + "\" scan --max-order 60 --check all --jobs 1 --out " +
                       out + " > /dev/null");
  if (rc != 0) {
    note("scan exited with code " + std::to_string(rc));
    return false;
  }
  report_j1 = read_file(out);
  json j;
  try {
    j = json::parse(report_j1);
  } catch (const std::exception& e) {
    note(std::string("report is not valid JSON: ") + e.what());
    return false;
  }
  if (j["summary"]["counterexamples"] != 0) {
    note("report lists counterexamples");
    return false;
  }
  std::set<int> exhaustive(j["summary"]["orders_exhaustive"].begin(),
                           j["summary"]["orders_exhaustive"].end());
  std::set<int> expected;
  for (int n = 2; n <= 60; ++n) {
    auto f = factorize(n);
    if ((f.size() == 1 && f[0].second <= 3) ||
        (f.size() == 2 && f[0].second == 1 && f[1].second == 1))
      expected.insert(n);
  }
  if (exhaustive != expected) {
    note("orders_exhaustive does not match {p, p^2, p^3, pq <= 60}");
    return false;
  }
  // every group at an exhaustively covered order passes both theorem checks
  for (const auto& g : j["groups"]) {
    if (!exhaustive.count(g["order"].get<int>())) continue;
    for (const auto& c : g["checks"])
      if (!c["passed"].get<bool>()) {
        note("counterexample at exhaustive order: " + g["label"].get<std::string>());
        return false;
      }
  }
  return true;
}

bool criterion8_determinism(const std::string& binary, const std::string& report_j1) {
  std::string out = "acceptance_scan_j8.json";
  int rc = run_command("\"" + binary + "\" scan --max-order 60 --check all --jobs 8 --out " +
                       out + " > /dev/null");
  if (rc != 0) {
    note("scan --jobs 8 exited with code " + std::to_string(rc));
    return false;
  }
  std::string report_j8 = read_file(out);
  if (report_j1.empty() || report_j1 != report_j8) {
    note("reports differ between --jobs 1 and --jobs 8");
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cdkit-binary>\n");
    return 2;
  }
  std::string binary = argv[1];

  criterion(1, criterion1_delta_values(), "delta values of the classified groups");
  criterion(2, criterion2_v_values(), "v values of the classified groups");
  criterion(3, criterion3_quaternion_cd_sets(), "CD lattices of Q8, Q16, Q32");
  criterion(4, criterion4_modular_family(), "modular group family M_p^n suite");
  criterion(5, criterion5_property_suite(),
            "structural property suite over the catalog to order 100");
  criterion(6, criterion6_oracle_equivalence(),
            "subgroup enumeration matches the subset-closure oracle to order 16");
  std::string report_j1;
  criterion(7, criterion7_scan_cli(binary, report_j1),
            "scan --max-order 60 --check all exits cleanly with exhaustive coverage");
  criterion(8, criterion8_determinism(binary, report_j1),
            "scan reports are byte-identical across --jobs 1 and --jobs 8");

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", g_failures);
  return 1;
}
