#include <doctest.h>

#include "blocklab/catalogue.hpp"
#include "blocklab/group.hpp"
#include "blocklab/groupspec.hpp"
#include "blocklab/matgroup.hpp"
#include "blocklab/registry.hpp"
#include "blocklab/sdpgroup.hpp"

using namespace blocklab;

namespace {

// k(G) = #{(x, y) : xy = yx} / |G|
std::size_t commuting_pairs_class_count(const Group& g) {
  const std::size_t n = g.order();
  std::size_t pairs = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) pairs += g.mul(x, y) == g.mul(y, x);
  return pairs / n;
}

SdpGroup a4() { return SdpGroup::from_matrix_group(MatGroupGF2::close(2, {BitMatrix::companion(0b111)}), "A4"); }

}  // namespace

TEST_CASE("semidirect product A4") {
  const SdpGroup g = a4();
  CHECK(g.order() == 12);
  const ConjClasses cc = conjugacy_classes(g);
  CHECK(cc.count() == 4);
  CHECK(cc.count() == commuting_pairs_class_count(g));
  CHECK(cc.regular_count() == 3);
  std::uint64_t total = 0;
  for (auto s : cc.sizes) total += s;
  CHECK(total == 12);
  for (std::size_t c = 0; c < cc.count(); ++c) CHECK(cc.sizes[c] * centralizer_order(g, cc, cc.reps[c]) == 12);
}

TEST_CASE("group axioms on a catalogue product") {
  const auto* e = find_entry(catalogue(), "(C3)_1");
  REQUIRE(e);
  const SdpGroup g = SdpGroup::from_matrix_group(e->group);
  CHECK(g.order() == 192);
  for (Elem a = 0; a < g.order(); a += 7)
    for (Elem b = 0; b < g.order(); b += 11) {
      CHECK(g.mul(g.mul(a, b), g.inv(b)) == a);
      CHECK(g.mul(a, g.mul(b, 5)) == g.mul(g.mul(a, b), 5));
    }
  const ConjClasses cc = conjugacy_classes(g);
  CHECK(cc.count() == commuting_pairs_class_count(g));
}

TEST_CASE("power maps and exponent") {
  const SdpGroup g = a4();
  const ConjClasses cc = conjugacy_classes(g);
  CHECK(cc.exponent == 6);
  const auto sq = power_map(g, cc, 2);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    if (cc.rep_orders[c] == 2) CHECK(sq[c] == cc.class_of[0]);
    if (cc.rep_orders[c] == 3) CHECK(sq[c] == cc.inverse_class[c]);
  }
}

TEST_CASE("quotient by O_2 and inertial quotient") {
  const auto* e = find_entry(catalogue(), "(F21)_1");
  REQUIRE(e);
  const SdpGroup g = SdpGroup::from_matrix_group(e->group);
  const ConjClasses cc = conjugacy_classes(g);
  const FusionMap f = quotient_by_O2(g, cc);
  CHECK(f.target.count() == 5);
  const MatGroupGF2 q = inertial_quotient(g);
  CHECK(q.order() == 21);
  CHECK(subgroup_action_equivalent(q, e->group));
}

TEST_CASE("group spec round trip") {
  CHECK(format_cycles(parse_cycles("(1,2,3)(4,5)", 6)) == "(1,2,3)(4,5)");
  CHECK(parse_cycles("()", 3) == std::vector<std::uint32_t>{0, 1, 2});
  for (const auto& r : central_extension_groups()) {
    const GroupSpec s = parse_group_spec(group_spec_to_json(r.spec));
    CHECK(group_spec_to_json(s) == group_spec_to_json(r.spec));
  }
  CHECK_THROWS(parse_group_spec(nlohmann::json::parse(R"({"name":"x","generators":[{"action":["10","011"]}]})")));
}

TEST_CASE("registry groups match their stated orders") {
  for (const auto& r : central_extension_groups()) {
    if (r.expected_order > 200000) continue;
    const SdpGroup g = build_registry_group(r);
    CHECK(g.order() == r.expected_order);
    CHECK(inertial_quotient(g).order() == r.expected_image_order);
  }
}
