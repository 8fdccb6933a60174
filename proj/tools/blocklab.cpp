// blocklab: catalogue listing, invariant records, verification suites and the inclusion diagram.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blocklab/blockalg.hpp"
#include "blocklab/catalogue.hpp"
#include "blocklab/groupspec.hpp"
#include "blocklab/harness.hpp"
#include "blocklab/registry.hpp"

using namespace blocklab;

namespace {

int cmd_catalogue(bool json) {
  const auto& cat = catalogue();
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : cat) {
      nlohmann::json row{{"label", e.label},
                         {"iso_type", e.iso_type},
                         {"order", e.group.order()},
                         {"fixed_dim", common_fixed_dim(6, e.generators)},
                         {"classification_rows", e.classification_rows}};
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : e.generators) gens.push_back(g.to_rows());
      row["generators"] = gens;
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : cat) {
    std::printf("%-14s order %-4zu fixed_dim %d  iso %s\n", e.label.c_str(), e.group.order(),
                common_fixed_dim(6, e.generators), e.iso_type.c_str());
  }
  return 0;
}

void print_record(const InvariantRecord& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << r.label << ": |G| = " << r.order << ", k = " << r.k << ", l = " << r.l << ", dim J^2(Z) = " << r.dim_J2
            << "\n";
  std::cout << "  Loewy(Z):";
  for (auto x : r.loewy) std::cout << " " << x;
  std::cout << "\n  blocks: " << r.blocks.size() << "\n";
  for (const auto& b : r.blocks)
    std::cout << "    " << (b.principal ? "principal " : "          ") << "k = " << b.k << ", l = " << b.l
              << ", defect " << b.defect << ", Cartan " << b.cartan_hash << "\n";
}

int cmd_invariants(Harness& h, const std::string& label, const std::string& group_file, const std::string& cache_dir,
                   bool json) {
  if (!group_file.empty()) {
    print_record(record_for_spec(load_group_spec(group_file), RecordCache(cache_dir)), json);
    return 0;
  }
  if (find_entry(catalogue(), label)) {
    print_record(h.catalogue_record(label), json);
    return 0;
  }
  if (find_registry_entry(label)) {
    print_record(h.registry_record(label), json);
    return 0;
  }
  throw std::invalid_argument("unknown label " + label);
}

int cmd_verify(Harness& h, const std::string& suite, bool json, const std::string& report) {
  const VerificationReport r = h.verify(suite);
  if (json)
    std::cout << r.to_json(false).dump(2) << "\n";
  else
    std::cout << r.to_text();
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw std::runtime_error("cannot write " + report);
    out << r.to_json(true).dump(2) << "\n";
  }
  return r.pass() ? 0 : 1;
}

int cmd_diagram(const std::string& path) {
  const auto& cat = catalogue();
  const std::string dot = diagram_dot(cat, inclusion_diagram(cat));
  if (path == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dot;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block invariants of (C2)^6 x| E"};
  app.require_subcommand(1);

  const char* env = std::getenv("BLOCKLAB_CACHE_DIR");
  std::string cache_dir = env ? env : "";
  unsigned threads = 1;

  bool cat_json = false;
  auto* cat = app.add_subcommand("catalogue", "list the catalogue of actions E <= GL_6(2)");
  cat->add_flag("--json", cat_json, "emit JSON");

  std::string label, group_file;
  bool inv_json = false;
  auto* inv = app.add_subcommand("invariants", "invariant record of a catalogue entry or named group");
  inv->add_option("label", label, "catalogue or registry label");
  inv->add_option("--group", group_file, "group-spec JSON file")->check(CLI::ExistingFile);
  inv->add_flag("--json", inv_json, "emit JSON");
  inv->add_option("--cache-dir", cache_dir, "record cache directory");

  std::string suite, report;
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name or 'all'")->required();
  ver->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--cache-dir", cache_dir, "record cache directory");
  ver->add_option("--report", report, "write the JSON report here");
  ver->add_flag("--json", ver_json, "print the report as JSON");

  std::string dot_path;
  auto* dia = app.add_subcommand("diagram", "emit the inclusion diagram");
  dia->add_option("--dot", dot_path, "output path, '-' for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*ver) {
      std::vector<std::string> known = Harness::suites();
      known.push_back("all");
      if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
    }
    Harness h({threads, cache_dir});
    if (*cat) return cmd_catalogue(cat_json);
    if (*inv) {
      if (label.empty() == group_file.empty()) {
        std::cerr << "give exactly one of <label> or --group\n";
        return 2;
      }
      return cmd_invariants(h, label, group_file, cache_dir, inv_json);
    }
    if (*ver) return cmd_verify(h, suite, ver_json, report);
    if (*dia) return cmd_diagram(dot_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
