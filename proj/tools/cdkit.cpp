// cdkit command-line front end: group inspection, Chermak-Delgado lattice
// computation, catalog scans and DOT/JSON export.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cdkit/group_spec.hpp"
#include "cdkit/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitCap = 4;

int element_cap() {
  if (const char* env = std::getenv("CDKIT_ELEMENT_CAP")) {
    int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return cdkit::kDefaultElementCap;
}

int cmd_info(const std::string& spec) {
  cdkit::Group g = cdkit::group_from_spec(spec, element_cap());
  cdkit::StructureTag tag = cdkit::recognize(g);
  bool nilpotent = cdkit::is_nilpotent(g);
  int zorder = cdkit::center(g).order();
  std::cout << cdkit::render_info(g, tag, nilpotent, zorder);
  return kExitOk;
}

int cmd_cd(const std::string& spec, bool as_json, const std::string& dot_path) {
  cdkit::Group g = cdkit::group_from_spec(spec, element_cap());
  cdkit::SubgroupLattice lat = cdkit::all_subgroups(g);
  cdkit::CDReport rep = cdkit::cd_report(g, lat);
  std::vector<cdkit::CheckResult> checks{
      cdkit::check_centralizer_duality(g, lat),
      cdkit::check_measure_divisibility(g, lat),
      cdkit::check_consecutive_image(g, lat),
      cdkit::check_center_equivalences(g, lat),
      cdkit::check_image_lower_bound(g, lat),
  };
  if (!dot_path.empty()) cdkit::atomic_write(dot_path, cdkit::dot_export(lat, rep));
  if (as_json)
    std::cout << cdkit::cd_report_json(rep, checks).dump(2) << "\n";
  else
    std::cout << cdkit::render_cd_table(lat, rep);
  return kExitOk;
}

int cmd_scan(int max_order, const std::string& check, int jobs, const std::string& out_path) {
  cdkit::ScanOptions opt;
  opt.max_order = max_order;
  opt.check = check;
  opt.jobs = jobs;
  cdkit::ScanOutcome outcome = cdkit::run_scan(opt);
  std::string doc = outcome.report.dump(2) + "\n";
  if (!out_path.empty()) cdkit::save_report(out_path, doc);
  const auto& summary = outcome.report["summary"];
  std::cout << "scanned " << summary["groups_scanned"] << " groups to order " << max_order
            << ", counterexamples: " << outcome.counterexamples << "\n";
  if (outcome.counterexamples > 0) {
    for (const auto& g : outcome.report["groups"])
      for (const auto& c : g["checks"])
        if (!c["passed"].get<bool>())
          std::cerr << "counterexample: " << g["label"].get<std::string>() << " "
                    << c["name"].get<std::string>() << ": "
                    << c["witness"]["detail"].get<std::string>() << "\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_catalog(int max_order, const std::string& out_path) {
  cdkit::Catalog cat = cdkit::builtin_catalog(max_order);
  std::string doc = cdkit::catalog_manifest_json(cat).dump(2) + "\n";
  if (!out_path.empty())
    cdkit::save_report(out_path, doc);
  else
    std::cout << doc;
  if (!out_path.empty())
    std::cout << "catalog of " << cat.entries.size() << " groups written to " << out_path
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cdkit: Chermak-Delgado measures, lattices and classification checks"};
  app.require_subcommand(1);

  std::string spec;
  auto* info = app.add_subcommand("info", "print order, flags and recognized structure");
  info->add_option("spec", spec, "group spec, e.g. Q8, M27, C2xC2, @file.grp")->required();

  std::string cd_spec, dot_path;
  bool as_json = false;
  auto* cd = app.add_subcommand("cd", "compute the Chermak-Delgado lattice report");
  cd->add_option("spec", cd_spec, "group spec")->required();
  cd->add_flag("--json", as_json, "emit the JSON report instead of the table");
  cd->add_option("--dot", dot_path, "write the Hasse diagram in DOT form to this path");

  int max_order = 60, jobs = 1;
  std::string check = "all", out_path;
  auto* scan = app.add_subcommand("scan", "run checkers over the builtin catalog");
  scan->add_option("--max-order", max_order, "catalog bound (<= 200)");
  scan->add_option("--check", check, "delta, v, props or all");
  scan->add_option("--jobs", jobs, "worker threads (per-group parallelism)");
  scan->add_option("--out", out_path, "write the JSON report to this path");

  int cat_max_order = 60;
  std::string cat_out;
  auto* catalog = app.add_subcommand("catalog", "emit the builtin catalog manifest");
  catalog->add_option("--max-order", cat_max_order, "catalog bound (<= 200)");
  catalog->add_option("--out", cat_out, "write the manifest to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (info->parsed()) return cmd_info(spec);
    if (cd->parsed()) return cmd_cd(cd_spec, as_json, dot_path);
    if (scan->parsed()) return cmd_scan(max_order, check, jobs, out_path);
    if (catalog->parsed()) return cmd_catalog(cat_max_order, cat_out);
  } catch (const cdkit::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const cdkit::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return kExitParse;
  } catch (const cdkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  }
  return kExitOk;
}
