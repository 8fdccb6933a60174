#include <doctest.h>

#include <algorithm>

#include "blocklab/catalogue.hpp"
#include "blocklab/chartab.hpp"
#include "blocklab/sdpgroup.hpp"

using namespace blocklab;

namespace {

std::size_t commuting_pairs_class_count(const Group& g) {
  const std::size_t n = g.order();
  std::size_t pairs = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) pairs += g.mul(x, y) == g.mul(y, x);
  return pairs / n;
}

const FiniteGroup& abstract(const char* label) { return find_entry(catalogue(), label)->group.abstract(); }

std::vector<std::int64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("cyclic group of order 3") {
  const FiniteGroup& g = abstract("(C3)_1");
  const ConjClasses cc = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cc);
  CHECK(t.count() == 3);
  CHECK(sorted_degrees(t) == std::vector<std::int64_t>{1, 1, 1});
  CHECK_NOTHROW(verify_orthogonality(t, cc));
  // row sums over a nontrivial character vanish
  for (std::size_t i = 1; i < 3; ++i) {
    CyclotomicInteger s(t.conductor);
    for (std::size_t c = 0; c < 3; ++c) s += t.values[i][c];
    CHECK(s.is_zero());
  }
}

TEST_CASE("Frobenius group of order 21") {
  const FiniteGroup& g = abstract("(F21)_1");
  const ConjClasses cc = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cc);
  CHECK(t.count() == commuting_pairs_class_count(g));
  CHECK(sorted_degrees(t) == std::vector<std::int64_t>{1, 1, 1, 3, 3});
  CHECK_NOTHROW(verify_orthogonality(t, cc));
  CHECK(t.degrees[0] == 1);  // trivial row first
}

TEST_CASE("extraspecial group of order 27") {
  const auto& cat = catalogue();
  const auto it = std::find_if(cat.begin(), cat.end(), [](const auto& e) { return e.iso_type == "3^{1+2}_+"; });
  REQUIRE(it != cat.end());
  const FiniteGroup& g = it->group.abstract();
  const ConjClasses cc = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cc);
  CHECK(t.count() == 11);
  auto d = sorted_degrees(t);
  CHECK(std::count(d.begin(), d.end(), 1) == 9);
  CHECK(std::count(d.begin(), d.end(), 3) == 2);
}

TEST_CASE("A4 table values") {
  const SdpGroup g = SdpGroup::from_matrix_group(MatGroupGF2::close(2, {BitMatrix::companion(0b111)}));
  const ConjClasses cc = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cc);
  REQUIRE(t.count() == 4);
  CHECK_NOTHROW(verify_orthogonality(t, cc));
  const std::size_t big = 3;
  REQUIRE(t.degrees[big] == 3);
  for (std::size_t c = 0; c < 4; ++c) {
    const auto v = t.values[big][c].as_integer();
    REQUIRE(v);
    if (cc.rep_orders[c] == 1) CHECK(*v == 3);
    if (cc.rep_orders[c] == 2) CHECK(*v == -1);
    if (cc.rep_orders[c] == 3) CHECK(*v == 0);
  }
  // one 2-block
  std::vector<std::vector<ExtFieldElement>> keys;
  for (std::size_t i = 0; i < t.count(); ++i) keys.push_back(block_distribution_key(t, cc, i, 2));
  CHECK(partition_by_keys(keys).size() == 1);
}

TEST_CASE("tables of catalogue products agree with class counts") {
  for (const char* label : {"(C3)_2", "C5", "(C7)_3", "C9"}) {
    const SdpGroup g = SdpGroup::from_matrix_group(find_entry(catalogue(), label)->group);
    const ConjClasses cc = conjugacy_classes(g);
    const CharacterTable t = character_table(g, cc);
    CHECK(t.count() == cc.count());
    CHECK_NOTHROW(verify_orthogonality(t, cc));
    std::uint64_t sq = 0;
    for (auto d : t.degrees) sq += d * d;
    CHECK(sq == g.order());
  }
  const SdpGroup g = SdpGroup::from_matrix_group(find_entry(catalogue(), "(C3)_1")->group);
  CHECK(conjugacy_classes(g).count() == commuting_pairs_class_count(g));
}
