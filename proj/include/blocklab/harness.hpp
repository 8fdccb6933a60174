#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blocklab/blockalg.hpp"
#include "blocklab/catalogue.hpp"
#include "blocklab/registry.hpp"

namespace blocklab {

/// One comparison in a report. basis is "stated" for published values and "oracle"
/// for values produced by an independent computation.
struct Check {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  std::string basis;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
  std::size_t failures() const;
  nlohmann::json to_json(bool with_time = true) const;
  std::string to_text() const;
};

/// Version stamp mixed into cache keys.
const std::string& code_version();

/// Directory of InvariantRecord JSON files, one per key; disabled when dir is empty.
class RecordCache {
public:
  explicit RecordCache(std::string dir = {});
  bool enabled() const { return !dir_.empty(); }
  static std::string key(const std::string& label, const std::string& payload);
  std::optional<InvariantRecord> load(const std::string& key) const;
  /// Written to a temporary file and renamed into place.
  void store(const std::string& key, const InvariantRecord& rec) const;

private:
  std::string dir_;
};

struct HarnessOptions {
  unsigned threads = 1;
  std::string cache_dir;
};

class Harness {
public:
  explicit Harness(HarnessOptions opt = {});

  /// Records for the 38 catalogue entries, in catalogue order.
  const std::vector<InvariantRecord>& catalogue_records();
  const InvariantRecord& catalogue_record(const std::string& label);
  const InvariantRecord& registry_record(const std::string& label);

  static const std::vector<std::string>& suites();
  /// Throws std::invalid_argument for an unknown suite.
  VerificationReport verify(const std::string& suite);

private:
  HarnessOptions opt_;
  RecordCache cache_;
  std::vector<InvariantRecord> catalogue_;
  std::map<std::string, InvariantRecord> registry_;
  std::mutex mu_;

  void run_suite(const std::string& suite, VerificationReport& r);
  void lemma_l(VerificationReport& r);
  void centralizers(VerificationReport& r);
  void single_block(VerificationReport& r);
  void distinguish(VerificationReport& r);
  void fingerprint(VerificationReport& r);
  void cartan(VerificationReport& r);
  void blocks6(VerificationReport& r);
  void tables(VerificationReport& r);
  void census(VerificationReport& r);
  void diagram(VerificationReport& r);
};

/// Cached or fresh record for an arbitrary group-spec file.
InvariantRecord record_for_spec(const GroupSpec& spec, const RecordCache& cache);

}  // namespace blocklab
