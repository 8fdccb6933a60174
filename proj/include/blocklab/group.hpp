#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace blocklab {

using Elem = std::uint32_t;

/// A finite group whose elements are numbered 0..order()-1, with 0 the identity.
class Group {
public:
  virtual ~Group() = default;
  virtual std::size_t order() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual std::vector<Elem> generators() const = 0;

  Elem pow(Elem a, std::uint64_t e) const;
  std::uint64_t element_order(Elem a) const;
  Elem conj(Elem g, Elem s) const { return mul(inv(s), mul(g, s)); }
};

/// Group given by a full multiplication table.
class FiniteGroup : public Group {
public:
  FiniteGroup() = default;
  /// Table from the right action of generators on elements listed in BFS order:
  /// right[i * ngens + s] = i * gen_s, and element j = parent[j] * gen_{via[j]}.
  static FiniteGroup from_generator_action(std::size_t n, std::size_t ngens, const std::vector<Elem>& right,
                                           const std::vector<Elem>& parent, const std::vector<std::uint32_t>& via);

  std::size_t order() const override { return n_; }
  Elem mul(Elem a, Elem b) const override { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const override { return inverse_[a]; }
  std::vector<Elem> generators() const override { return gens_; }

private:
  std::size_t n_ = 1;
  std::vector<Elem> table_{0};
  std::vector<Elem> inverse_{0};
  std::vector<Elem> gens_;
};

/// Elements of <gens> (BFS from the identity, generators in the given order) and the group table.
template <class T, class Mul, class Hash, class Eq = std::equal_to<T>>
std::pair<std::vector<T>, FiniteGroup> close_elements(const T& identity, const std::vector<T>& gens, Mul mul,
                                                      std::size_t cap = 1000000) {
  std::vector<T> elts{identity};
  std::unordered_map<T, Elem, Hash, Eq> index;
  index.emplace(identity, 0);
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Elem> right;
  const std::size_t ng = gens.size();
  for (std::size_t i = 0; i < elts.size(); ++i) {
    const T cur = elts[i];
    for (std::size_t s = 0; s < ng; ++s) {
      T t = mul(cur, gens[s]);
      auto it = index.find(t);
      if (it == index.end()) {
        if (elts.size() >= cap) throw std::length_error("group closure exceeds cap");
        it = index.emplace(t, static_cast<Elem>(elts.size())).first;
        elts.push_back(std::move(t));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }
  FiniteGroup g = FiniteGroup::from_generator_action(elts.size(), ng, right, parent, via);
  return {std::move(elts), std::move(g)};
}

/// Conjugacy classes; representatives are the least element of each class, classes sorted by representative.
struct ConjClasses {
  std::vector<Elem> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint64_t> rep_orders;
  std::vector<bool> regular;  // representative of odd order
  std::vector<std::uint32_t> inverse_class;
  std::uint64_t exponent = 1;

  std::size_t count() const { return reps.size(); }
  std::size_t regular_count() const;
};

ConjClasses conjugacy_classes(const Group& g, std::size_t cap = 1000000);
std::uint64_t centralizer_order(const Group& g, const ConjClasses& cc, Elem x);
/// Class of x^m for every class.
std::vector<std::uint32_t> power_map(const Group& g, const ConjClasses& cc, std::int64_t m);
/// Class of rep^r for r = 0..order-1, per class.
std::vector<std::vector<std::uint32_t>> power_sequences(const Group& g, const ConjClasses& cc);

std::uint64_t two_part(std::uint64_t n);
int two_valuation(std::uint64_t n);

}  // namespace blocklab
