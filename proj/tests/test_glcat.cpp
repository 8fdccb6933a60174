#include <doctest.h>

#include <algorithm>
#include <set>

#include "blocklab/catalogue.hpp"
#include "blocklab/matgroup.hpp"
#include "blocklab/subenum.hpp"

using namespace blocklab;

TEST_CASE("catalogue has 38 faithful odd-order entries") {
  const auto& cat = catalogue();
  CHECK(cat.size() == 38);
  std::set<std::string> labels;
  for (const auto& e : cat) {
    labels.insert(e.label);
    CHECK(e.group.order() % 2 == 1);
    CHECK(e.group.order() == e.expected_order);
    CHECK(is_faithful_odd(e.group));
    if (e.expected_fixed_dim) CHECK(common_fixed_dim(6, e.generators) == *e.expected_fixed_dim);
  }
  CHECK(labels.size() == 38);
}

TEST_CASE("named fixed-point dimensions") {
  auto fd = [](const char* l) { return common_fixed_dim(6, find_entry(catalogue(), l)->generators); };
  CHECK(fd("(C15)_2") == 2);
  CHECK(fd("(C7)_1") == 3);
  CHECK(fd("(C3)_3") == 0);
  CHECK(fd("{1}") == 6);
  CHECK(find_entry(catalogue(), "C15_2") == find_entry(catalogue(), "(C15)_2"));
  CHECK(find_entry(catalogue(), "nonsense") == nullptr);
}

TEST_CASE("Singer cycle acts regularly on nonzero vectors") {
  const BitMatrix s = singer_cycle(6);
  CHECK(matrix_order(s) == 63);
  std::set<std::uint64_t> orbit;
  std::uint64_t v = 1;
  for (int i = 0; i < 63; ++i) {
    orbit.insert(v);
    v = s.apply(v);
  }
  CHECK(orbit.size() == 63);
  CHECK(orbit.count(0) == 0);
  const BitMatrix f = frobenius_matrix(6);
  CHECK(matrix_order(f) == 6);
  const BitMatrix c = f * s * inverse_gf2(f);
  CHECK((c == s.pow(2) || c == s.pow(32)));
}

TEST_CASE("action equivalence is invariant under conjugation") {
  const auto* e = find_entry(catalogue(), "(F21)_2");
  const BitMatrix g = singer_cycle(6) + BitMatrix::identity(6);  // some invertible matrix
  REQUIRE(rank_gf2(g) == 6);
  const BitMatrix gi = inverse_gf2(g);
  std::vector<BitMatrix> conj;
  for (const auto& x : e->generators) conj.push_back(g * x * gi);
  const MatGroupGF2 h = MatGroupGF2::close(6, conj);
  CHECK(subgroup_action_equivalent(e->group, h));
  CHECK(action_invariants(h) == action_invariants(e->group));
  CHECK_FALSE(subgroup_action_equivalent(find_entry(catalogue(), "(F21)_1")->group, h));
}

TEST_CASE("catalogue validation and its negative controls") {
  const auto v = validate_catalogue_n6(catalogue());
  CHECK(v.pass());
  CHECK_FALSE(v.completeness_checked);
  auto dup = catalogue();
  dup.push_back(dup[7]);
  dup.back().label = "copy";
  const auto w = validate_catalogue_n6(dup);
  REQUIRE(w.equivalent_pairs.size() == 1);
  CHECK(w.equivalent_pairs[0].first == catalogue()[7].label);
  CHECK(w.equivalent_pairs[0].second == "copy");
  const auto empty = validate_catalogue_n6({});
  CHECK(empty.pass());
  CHECK_FALSE(empty.warnings.empty());
}

TEST_CASE("inclusion diagram") {
  const auto edges = inclusion_diagram(catalogue());
  auto has = [&](const char* a, const char* b) {
    return std::find_if(edges.begin(), edges.end(), [&](const DiagramEdge& e) {
             return e.from_label == a && e.to_label == b;
           }) != edges.end();
  };
  CHECK(has("(C7)_2", "(C21)_2"));
  CHECK(has("C5", "(C15)_1"));
  CHECK_FALSE(has("(C21)_2", "(C7)_2"));
  for (const auto& e : edges) CHECK(e.from_label != "{1}");
  const std::string dot = diagram_dot(catalogue(), edges);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dotted") != std::string::npos);
}
