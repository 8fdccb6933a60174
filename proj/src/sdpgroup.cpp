#include "blocklab/sdpgroup.hpp"

#include <stdexcept>

namespace blocklab {

SdpGroup::SdpGroup(int n, std::shared_ptr<const FiniteGroup> p, std::vector<BitMatrix> action, std::string name)
    : n_(n), mask_((Elem{1} << n) - 1), p_(std::move(p)), action_(std::move(action)), name_(std::move(name)) {
  if (n < 0 || n > 8) throw std::invalid_argument("SdpGroup: rank must be at most 8");
  if (p_->order() % 2 == 0) throw std::invalid_argument("SdpGroup: complement must have odd order");
  if (action_.size() != p_->order()) throw std::invalid_argument("SdpGroup: one action matrix per element required");
  if (p_->order() << n > (std::size_t{1} << 31)) throw std::length_error("SdpGroup: group too large");
  const std::size_t dim = std::size_t{1} << n;
  act_.resize(p_->order() * dim);
  for (std::size_t q = 0; q < p_->order(); ++q)
    for (std::size_t v = 0; v < dim; ++v) act_[q * dim + v] = static_cast<std::uint8_t>(action_[q].apply(v));
  if (!action_[0].is_identity()) throw std::invalid_argument("SdpGroup: identity must act trivially");
  for (Elem s : p_->generators())
    for (std::size_t q = 0; q < p_->order(); ++q)
      if (!(action_[q] * action_[s] == action_[p_->mul(static_cast<Elem>(q), s)]))
        throw std::invalid_argument("SdpGroup: action is not a homomorphism");
}

SdpGroup SdpGroup::from_matrix_group(const MatGroupGF2& e, std::string name) {
  auto table = std::make_shared<const FiniteGroup>(e.abstract());
  return SdpGroup(e.dim(), std::move(table), e.elements(), name.empty() ? e.name() : std::move(name));
}

std::vector<Elem> SdpGroup::generators() const {
  std::vector<Elem> g;
  for (int i = 0; i < n_; ++i) g.push_back(Elem{1} << i);
  for (Elem s : p_->generators()) g.push_back(s << n_);
  return g;
}

FusionMap quotient_by_O2(const SdpGroup& g, const ConjClasses& classes) {
  const FiniteGroup& p = g.complement();
  FusionMap f;
  f.target = conjugacy_classes(p);
  const std::size_t kg = classes.count(), kp = f.target.count();
  f.count.assign(kg, std::vector<std::uint64_t>(kp, 0));
  for (Elem x = 0; x < g.order(); ++x) ++f.count[classes.class_of[x]][f.target.class_of[g.complement_part(x)]];
  for (std::size_t k = 0; k < kg; ++k) {
    f.image_class.push_back(f.target.class_of[g.complement_part(classes.reps[k])]);
    for (std::size_t c = 0; c < kp; ++c)
      if (f.count[k][c] % f.target.sizes[c] != 0) throw std::logic_error("quotient_by_O2: fibre counts not uniform");
  }
  for (std::size_t c = 0; c < kp; ++c) f.lift_class.push_back(classes.class_of[g.pack(0, f.target.reps[c])]);
  return f;
}

MatGroupGF2 inertial_quotient(const SdpGroup& g) {
  std::vector<BitMatrix> gens;
  for (Elem s : g.complement().generators()) gens.push_back(g.action_of(s));
  return MatGroupGF2::close(g.rank(), std::move(gens), g.name());
}

}  // namespace blocklab
