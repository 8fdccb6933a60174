#include <doctest.h>

#include <algorithm>
#include <set>

#include "blocklab/subenum.hpp"

using namespace blocklab;

namespace {

std::vector<std::string> shapes(const std::vector<SubgroupClass>& v) {
  std::vector<std::string> s;
  for (const auto& c : v) s.push_back(c.shape);
  return s;
}

}  // namespace

TEST_CASE("general linear groups") {
  CHECK(general_linear_group(1).order() == 1);
  CHECK(general_linear_group(2).order() == 6);
  CHECK(general_linear_group(3).order() == 168);
  CHECK(general_linear_group(4).order() == 20160);
}

TEST_CASE("small censuses match brute force") {
  CHECK(shapes(enumerate_odd_subgroups(1)) == std::vector<std::string>{"1"});
  CHECK(shapes(enumerate_odd_subgroups(2)) == std::vector<std::string>{"1", "C3"});
  for (int n = 1; n <= 3; ++n) {
    const auto a = enumerate_odd_subgroups(n), b = brute_force_odd_subgroups(n);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].order == b[i].order);
      CHECK(a[i].fingerprint == b[i].fingerprint);
      CHECK(conjugate_in(general_linear_group(n), a[i].representative, b[i].representative));
    }
  }
  CHECK(shapes(enumerate_odd_subgroups(3)) == std::vector<std::string>{"1", "C3", "C7", "C7:C3"});
}

TEST_CASE("GL_4(2) census") {
  const auto v = enumerate_odd_subgroups(4);
  std::set<std::uint64_t> orders;
  std::vector<int> c3_fixed;
  for (const auto& c : v) {
    orders.insert(c.order);
    CHECK(c.order % 2 == 1);
    CHECK(20160 % c.order == 0);
    if (c.order == 3) c3_fixed.push_back(c.fingerprint.global_fixed_dim);
  }
  std::sort(c3_fixed.begin(), c3_fixed.end());
  CHECK(c3_fixed == std::vector<int>{0, 2});
  for (std::uint64_t o : {1, 3, 5, 7, 9, 15, 21}) CHECK(orders.count(o) == 1);
  // pairwise non-conjugate
  const MatGroupGF2 gl = general_linear_group(4);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i].order == v[j].order && v[i].fingerprint == v[j].fingerprint)
        CHECK_FALSE(conjugate_in(gl, v[i].representative, v[j].representative));
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(enumerate_odd_subgroups(5), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_odd_subgroups(4), std::invalid_argument);
}
