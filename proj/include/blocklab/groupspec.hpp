#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/sdpgroup.hpp"

namespace blocklab {

/// One factor of the carrier of P: a permutation group or a matrix group mod a prime.
struct ComponentSpec {
  enum class Kind { Permutation, Matrix };
  Kind kind = Kind::Matrix;
  int degree = 1;
  std::uint32_t modulus = 2;  // matrices only
};

struct GeneratorSpec {
  /// Per component: permutation images (0-based) or matrix entries row-major.
  std::vector<std::vector<std::uint32_t>> data;
  BitMatrix action;
};

/// P is the group generated by the tuples (component values..., action matrix);
/// the action is the projection to the last coordinate, hence a homomorphism.
struct GroupSpec {
  std::string name;
  int n = 6;
  std::vector<ComponentSpec> components;
  std::vector<GeneratorSpec> generators;
  std::optional<std::uint64_t> expected_order;  // |P|
};

SdpGroup build_group(const GroupSpec& spec, std::size_t cap = 200000);

GroupSpec parse_group_spec(const nlohmann::json& j);
GroupSpec load_group_spec(const std::string& path);
nlohmann::json group_spec_to_json(const GroupSpec& spec);

/// "(1,2,3)(4,5)" on points 1..degree -> 0-based image list.
std::vector<std::uint32_t> parse_cycles(const std::string& text, int degree);
std::string format_cycles(const std::vector<std::uint32_t>& images);

}  // namespace blocklab
