#include "blocklab/registry.hpp"

#include <stdexcept>

#include "blocklab/matgroup.hpp"

namespace blocklab {

namespace {

using Mat = std::vector<std::uint32_t>;

const Mat kI3 = {1, 0, 0, 0, 1, 0, 0, 0, 1};
const Mat kHeisX = {1, 1, 0, 0, 1, 0, 0, 0, 1};
const Mat kHeisY = {1, 0, 0, 0, 1, 1, 0, 0, 1};

BitMatrix block_sum(std::initializer_list<BitMatrix> blocks) {
  BitMatrix out;
  bool first = true;
  for (const auto& b : blocks) {
    out = first ? b : BitMatrix::direct_sum(out, b);
    first = false;
  }
  return out;
}

BitMatrix id(int n) { return BitMatrix::identity(n); }

ComponentSpec matrix_component(int degree, std::uint32_t p) {
  return {ComponentSpec::Kind::Matrix, degree, p};
}

RegistryEntry make(std::string label, std::string description, GroupSpec spec, std::uint64_t image, bool experimental = false) {
  RegistryEntry e;
  e.label = std::move(label);
  e.description = std::move(description);
  e.expected_order = *spec.expected_order << spec.n;
  e.expected_image_order = image;
  e.experimental = experimental;
  spec.name = e.label;
  e.spec = std::move(spec);
  return e;
}

std::vector<RegistryEntry> build_registry() {
  const BitMatrix chi = BitMatrix::companion(0b111);
  const BitMatrix psi = BitMatrix::companion(0b1011);
  const BitMatrix f16 = BitMatrix::companion(0b10011);
  const BitMatrix sig3 = frobenius_matrix(3);
  std::vector<RegistryEntry> out;

  {  // C5 x 3^{1+2}_+: C5 and the order-3 part of C15 on D_1 (dim 4), the other generator on D_2
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(1, 11), matrix_component(3, 3)};
    s.generators = {{{{3}, kI3}, block_sum({f16.pow(3), id(2)})},
                    {{{1}, kHeisX}, block_sum({f16.pow(5), id(2)})},
                    {{{1}, kHeisY}, block_sum({id(4), chi})}};
    s.expected_order = 135;
    out.push_back(make("c5-heis-ext", "(C2)^6 x| (C5 x 3^{1+2}_+)", s, 45));
  }
  {  // 7^{1+2}_+ with the two generators acting on D_1 and D_2
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 7)};
    s.generators = {{{kHeisX}, block_sum({psi, id(3)})}, {{kHeisY}, block_sum({id(3), psi})}};
    s.expected_order = 343;
    out.push_back(make("c7-pair-ext", "(C2)^6 x| 7^{1+2}_+", s, 49));
  }
  {  // (C7 x C7) x| 3^{1+2}_+: F21 on each factor, the two C3 generating 3^{1+2}_+
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 3)};
    s.generators = {{{kI3}, block_sum({psi, id(3)})},
                    {{kI3}, block_sum({id(3), psi})},
                    {{kHeisX}, block_sum({sig3, id(3)})},
                    {{kHeisY}, block_sum({id(3), sig3})}};
    s.expected_order = 1323;
    out.push_back(make("f21-pair-ext", "(C2)^6 x| ((C7 x C7) x| 3^{1+2}_+)", s, 441));
  }
  {  // 3^{1+2}_+ acting through (C3)_2 x (C3)_1 with trivial center
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 3)};
    s.generators = {{{kHeisX}, block_sum({chi, chi, id(2)})}, {{kHeisY}, block_sum({id(4), chi})}};
    s.expected_order = 27;
    out.push_back(make("a4-heis-ext", "(C2)^6 x| 3^{1+2}_+ (non-faithful)", s, 9));
  }
  {  // (C2)^4 x| 3^{1+2}_+ (one simple module in the nonprincipal blocks) times (C2)^2
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 3)};
    s.generators = {{{kHeisX}, block_sum({chi, id(4)})}, {{kHeisY}, block_sum({id(2), chi, id(2)})}};
    s.expected_order = 27;
    out.push_back(make("heis-x-klein", "((C2)^4 x| 3^{1+2}_+) x (C2)^2", s, 9));
  }
  {  // the same block factor times A_4
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 3), matrix_component(1, 7)};
    s.generators = {{{kHeisX, {1}}, block_sum({chi, id(4)})},
                    {{kHeisY, {1}}, block_sum({id(2), chi, id(2)})},
                    {{kI3, {2}}, block_sum({id(4), chi})}};
    s.expected_order = 81;
    out.push_back(make("heis-x-a4", "((C2)^4 x| 3^{1+2}_+) x A4", s, 27));
  }
  {  // free exponent-3 class-2 group on three generators, inside three Heisenberg factors
    GroupSpec s;
    s.n = 6;
    s.components = {matrix_component(3, 3), matrix_component(3, 3), matrix_component(3, 3)};
    s.generators = {{{kHeisX, kHeisX, kI3}, block_sum({chi, id(4)})},
                    {{kHeisY, kI3, kHeisX}, block_sum({id(2), chi, id(2)})},
                    {{kI3, kHeisY, kHeisY}, block_sum({id(4), chi})}};
    s.expected_order = 729;
    out.push_back(make("a4-cube-ext", "(C2)^6 x| SmallGroup(729,122)", s, 27, true));
  }
  return out;
}

}  // namespace

const std::vector<RegistryEntry>& central_extension_groups() {
  static const std::vector<RegistryEntry> reg = build_registry();
  return reg;
}

const RegistryEntry* find_registry_entry(const std::string& label) {
  for (const auto& e : central_extension_groups())
    if (e.label == label) return &e;
  return nullptr;
}

SdpGroup build_registry_group(const RegistryEntry& e) {
  SdpGroup g = build_group(e.spec);
  if (g.order() != e.expected_order) throw std::runtime_error("registry " + e.label + ": wrong group order");
  if (inertial_quotient(g).order() != e.expected_image_order)
    throw std::runtime_error("registry " + e.label + ": wrong inertial quotient order");
  return g;
}

}  // namespace blocklab
