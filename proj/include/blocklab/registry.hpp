#pragma once

#include <string>
#include <vector>

#include "blocklab/groupspec.hpp"
#include "blocklab/sdpgroup.hpp"

namespace blocklab {

struct RegistryEntry {
  std::string label;        // e.g. "c7-pair-ext"
  std::string description;  // group in words
  GroupSpec spec;
  std::uint64_t expected_order = 0;        // |G|
  std::uint64_t expected_image_order = 0;  // order of the inertial quotient
  bool experimental = false;
};

/// Named central-extension groups (C_2)^6 x| P with P acting through a catalogue-type action.
const std::vector<RegistryEntry>& central_extension_groups();
const RegistryEntry* find_registry_entry(const std::string& label);
/// Builds the group and validates |G| and the inertial quotient order.
SdpGroup build_registry_group(const RegistryEntry& e);

}  // namespace blocklab
