#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/group.hpp"
#include "blocklab/matgroup.hpp"

namespace blocklab {

/// G = (C_2)^n x| P for an odd-order group P acting on F_2^n through a (possibly
/// non-injective) homomorphism. Element index = p * 2^n + v for the pair (v, p).
class SdpGroup : public Group {
public:
  /// action[p] is the matrix of P-element p; validated to be a homomorphism.
  SdpGroup(int n, std::shared_ptr<const FiniteGroup> p, std::vector<BitMatrix> action, std::string name = {});
  /// D x| E for a matrix group with a multiplication table.
  static SdpGroup from_matrix_group(const MatGroupGF2& e, std::string name = {});

  std::size_t order() const override { return p_->order() << n_; }
  Elem mul(Elem a, Elem b) const override {
    const Elem pa = a >> n_, pb = b >> n_;
    const Elem v = (a & mask_) ^ act_[(static_cast<std::size_t>(pa) << n_) | (b & mask_)];
    return (p_->mul(pa, pb) << n_) | v;
  }
  Elem inv(Elem a) const override {
    const Elem pi = p_->inv(a >> n_);
    return (pi << n_) | act_[(static_cast<std::size_t>(pi) << n_) | (a & mask_)];
  }
  std::vector<Elem> generators() const override;

  int rank() const { return n_; }
  const std::string& name() const { return name_; }
  const FiniteGroup& complement() const { return *p_; }
  std::shared_ptr<const FiniteGroup> complement_ptr() const { return p_; }
  const BitMatrix& action_of(Elem p) const { return action_[p]; }
  Elem pack(std::uint32_t v, Elem p) const { return (p << n_) | v; }
  std::uint32_t vector_part(Elem g) const { return g & mask_; }
  Elem complement_part(Elem g) const { return g >> n_; }

private:
  int n_;
  Elem mask_;
  std::shared_ptr<const FiniteGroup> p_;
  std::vector<BitMatrix> action_;
  std::vector<std::uint8_t> act_;
  std::string name_;
};

/// Class fusion of G onto Q = G/D = P.
struct FusionMap {
  ConjClasses target;  // classes of P
  std::vector<std::uint32_t> image_class;  // per G-class: P-class of the image of its representative
  /// count[K][C] = #{x in K : image of x lies in C}; the image of the class sum K is
  /// sum_C (count[K][C] / |C|) * C.
  std::vector<std::vector<std::uint64_t>> count;
  /// G-class containing the complement element (0, p_C) for each P-class C.
  std::vector<std::uint32_t> lift_class;

  /// Coefficient of the P-class sum C in the image of the G-class sum K.
  std::uint64_t coefficient(std::size_t k, std::size_t c) const { return count[k][c] / target.sizes[c]; }
};

FusionMap quotient_by_O2(const SdpGroup& g, const ConjClasses& classes);
/// Image of P in GL_n(2).
MatGroupGF2 inertial_quotient(const SdpGroup& g);

}  // namespace blocklab
