// Acceptance run: one PASS/FAIL line per criterion A1..A10, failing checks listed below each line.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "blocklab/harness.hpp"
#include "blocklab/registry.hpp"

using namespace blocklab;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  const char* id;
  const char* suite;
  const char* title;
};

const Criterion kCriteria[] = {
    {"A1", "lemma-l", "l of the principal block for all 25 listed types"},
    {"A2", "centralizers", "fixed-space dimensions and named actions"},
    {"A3", "single-block", "each catalogue group algebra is one block"},
    {"A4", "distinguish", "exactly two Cartan collisions, both split by dim J^2(Z)"},
    {"A5", "fingerprint", "(k, l, Loewy vector) distinct over the catalogue"},
    {"A6", "cartan", "Cartan by weights equals D^T D; det equals centralizer product"},
    {"A7", "blocks6", "block statistics of the central-extension groups"},
    {"A8", "tables", "character-table integrity over all groups"},
    {"A9", "census", "small-n subgroup census"},
};

bool line(const char* id, bool pass, const std::string& text) {
  std::printf("%s %s %s\n", id, pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  const fs::path cache = fs::temp_directory_path() / "blocklab_acceptance_cache";
  fs::remove_all(cache);
  bool all = true;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    Harness h1({1, ""});
    const VerificationReport r1 = h1.verify("all");
    const double first_run = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& c : kCriteria) {
      const std::string prefix = std::string(c.suite) + ".";
      std::size_t n = 0, failed = 0;
      std::string details;
      for (const auto& chk : r1.checks) {
        if (chk.id.rfind(prefix, 0) != 0) continue;
        ++n;
        if (!chk.pass) {
          ++failed;
          details += "    " + chk.id + ": expected " + chk.expected + ", computed " + chk.computed + "\n";
        }
      }
      all &= line(c.id, n > 0 && failed == 0,
                  std::string(c.title) + " (" + std::to_string(n - failed) + "/" + std::to_string(n) + ")");
      std::fputs(details.c_str(), stdout);
    }

    // A10: the same JSON for one and two threads, cold and warm cache; largest group within 10 minutes.
    const std::string j1 = r1.to_json(false).dump();
    Harness h2({2, cache.string()});
    const std::string j2 = h2.verify("all").to_json(false).dump();
    Harness h3({2, cache.string()});
    const std::string j3 = h3.verify("all").to_json(false).dump();
    const RegistryEntry* big = find_registry_entry("f21-pair-ext");
    const auto t1 = std::chrono::steady_clock::now();
    const GroupAnalysis a = analyze_group(build_registry_group(*big));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "verify all reproducible (threads 1 vs 2: %s, cold vs warm cache: %s); order %llu analysed in %.1f s "
                  "(limit 600 s); first full run %.1f s",
                  j1 == j2 ? "identical" : "differ", j2 == j3 ? "identical" : "differ",
                  static_cast<unsigned long long>(a.order), secs, first_run);
    all &= line("A10", j1 == j2 && j2 == j3 && a.order == 84672 && secs < 600, buf);
  } catch (const std::exception& e) {
    std::printf("error: %s\n", e.what());
    fs::remove_all(cache);
    return 2;
  }
  fs::remove_all(cache);
  return all ? 0 : 1;
}
