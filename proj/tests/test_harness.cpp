#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blocklab/harness.hpp"

using namespace blocklab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
  const fs::path p = fs::temp_directory_path() / ("blocklab_test_" + std::string(name));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip is byte identical") {
  const fs::path dir = scratch("cache");
  RecordCache cache(dir.string());
  REQUIRE(cache.enabled());
  const InvariantRecord r = invariant_record(*find_entry(catalogue(), "(C3)_2"));
  const std::string key = RecordCache::key(r.label, "payload");
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, r);
  auto loaded = cache.load(key);
  REQUIRE(loaded.has_value());
  CHECK(to_json(*loaded).dump() == to_json(r).dump());
  CHECK(RecordCache::key(r.label, "payload") == key);
  CHECK(RecordCache::key(r.label, "other") != key);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == 1);
  // a corrupt file is a miss, not an error
  std::ofstream(dir / (key + ".json")) << "{ not json";
  CHECK_FALSE(cache.load(key).has_value());
  fs::remove_all(dir);
}

TEST_CASE("disabled cache") {
  RecordCache cache;
  CHECK_FALSE(cache.enabled());
  CHECK_FALSE(cache.load("anything").has_value());
}

TEST_CASE("report rendering") {
  VerificationReport r;
  r.suite = "demo";
  r.checks.push_back({"a", "first", "1", "1", "oracle", true});
  r.checks.push_back({"b", "second", "2", "3", "stated", false});
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);
  const auto j = r.to_json(false);
  CHECK(j["checks"].size() == 2);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(r.to_text().find("FAIL b") != std::string::npos);
}

TEST_CASE("diagram suite") {
  Harness h;
  const auto r = h.verify("diagram");
  CHECK(r.pass());
  CHECK(r.checks.size() == 3);
  CHECK_THROWS_AS(h.verify("no-such-suite"), std::invalid_argument);
}

TEST_CASE("catalogue and registry records") {
  Harness h;
  CHECK(h.catalogue_record("(C3)_2").l == 3);
  CHECK_THROWS_AS(h.catalogue_record("(C99)_1"), std::invalid_argument);
  CHECK_THROWS_AS(h.registry_record("no-such-group"), std::invalid_argument);
}
