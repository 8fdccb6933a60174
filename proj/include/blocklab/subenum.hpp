#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blocklab/catalogue.hpp"
#include "blocklab/matgroup.hpp"

namespace blocklab {

struct SubgroupClass {
  MatGroupGF2 representative;
  std::uint64_t order = 1;
  ActionInvariant fingerprint;
  std::string shape;  // "1", "C3", "C3xC3", "C7:C3", ...
};

/// GL_n(2) generated by its elementary transvections.
MatGroupGF2 general_linear_group(int n);

/// Odd-order subgroups of GL_n(2) up to conjugacy, by cyclic extension; n <= 4.
/// Sorted by (order, fingerprint).
std::vector<SubgroupClass> enumerate_odd_subgroups(int n);

/// Same classes from every subgroup of the abstract group; n <= 3.
std::vector<SubgroupClass> brute_force_odd_subgroups(int n);

/// Whether some g in the ambient group has g A g^-1 = B.
bool conjugate_in(const MatGroupGF2& ambient, const MatGroupGF2& a, const MatGroupGF2& b);

/// Small structural name from element orders and commutativity.
std::string subgroup_shape(const MatGroupGF2& h);

struct CatalogueValidation {
  std::size_t entries = 0;
  std::vector<std::pair<std::string, std::string>> equivalent_pairs;
  std::vector<std::string> warnings;
  bool completeness_checked = false;
  bool pass() const { return equivalent_pairs.empty(); }
};

/// Pairwise action-inequivalence of the entries (which implies non-conjugacy in GL_6(2)).
/// Completeness of the list is not checked.
CatalogueValidation validate_catalogue_n6(const std::vector<CatalogueEntry>& cat);

}  // namespace blocklab
