#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/matgroup.hpp"

namespace blocklab {

struct CatalogueEntry {
  std::string label;
  std::string iso_type;
  std::vector<std::string> classification_rows;  // roman numerals of the classification rows using this quotient
  std::vector<BitMatrix> generators;
  std::uint64_t expected_order = 1;
  std::optional<int> expected_fixed_dim;
  MatGroupGF2 group;
};

/// The 38 inertial-quotient actions inside GL_6(2), validated on construction.
std::vector<CatalogueEntry> build_catalogue();
/// Process-wide cached catalogue.
const std::vector<CatalogueEntry>& catalogue();
/// Lookup by label; parentheses and spaces are ignored when matching.
const CatalogueEntry* find_entry(const std::vector<CatalogueEntry>& cat, const std::string& label);
std::string normalize_label(const std::string& label);

struct DiagramEdge {
  std::string from_label;
  std::string to_label;
  bool solid = false;
};

/// Edge H -> K whenever [K:H] is an odd prime and K has a subgroup acting like H;
/// solid if some such subgroup is normal in K.
std::vector<DiagramEdge> inclusion_diagram(const std::vector<CatalogueEntry>& cat);
std::string diagram_dot(const std::vector<CatalogueEntry>& cat, const std::vector<DiagramEdge>& edges);

/// Subgroups of the entry's group of a given order, as matrix groups.
std::vector<MatGroupGF2> matrix_subgroups_of_order(const MatGroupGF2& k, std::size_t order);

}  // namespace blocklab
