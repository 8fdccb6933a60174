#include "blocklab/group.hpp"

#include <numeric>

namespace blocklab {

Elem Group::pow(Elem a, std::uint64_t e) const {
  Elem r = 0;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Group::element_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::from_generator_action(std::size_t n, std::size_t ngens, const std::vector<Elem>& right,
                                               const std::vector<Elem>& parent,
                                               const std::vector<std::uint32_t>& via) {
  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Elem* row = g.table_.data() + i * n;
    row[0] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = right[static_cast<std::size_t>(row[parent[j]]) * ngens + via[j]];
  }
  g.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem* row = g.table_.data() + i * n;
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] == 0) {
        g.inverse_[i] = static_cast<Elem>(j);
        break;
      }
  }
  for (std::size_t s = 0; s < ngens; ++s) g.gens_.push_back(right[s]);
  return g;
}

std::size_t ConjClasses::regular_count() const {
  std::size_t c = 0;
  for (bool r : regular) c += r;
  return c;
}

ConjClasses conjugacy_classes(const Group& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) throw std::length_error("conjugacy_classes: group exceeds size cap");
  const auto gens = g.generators();
  std::vector<Elem> gens_inv;
  for (Elem s : gens) gens_inv.push_back(g.inv(s));
  ConjClasses cc;
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  cc.class_of.assign(n, unset);
  std::vector<Elem> queue;
  for (std::size_t e = 0; e < n; ++e) {
    if (cc.class_of[e] != unset) continue;
    const auto cls = static_cast<std::uint32_t>(cc.reps.size());
    queue.assign(1, static_cast<Elem>(e));
    cc.class_of[e] = cls;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Elem y = g.mul(gens_inv[s], g.mul(x, gens[s]));
        if (cc.class_of[y] == unset) {
          cc.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    cc.reps.push_back(static_cast<Elem>(e));
    cc.sizes.push_back(queue.size());
  }
  cc.exponent = 1;
  for (Elem r : cc.reps) {
    const std::uint64_t o = g.element_order(r);
    cc.rep_orders.push_back(o);
    cc.regular.push_back(o % 2 == 1);
    cc.exponent = std::lcm(cc.exponent, o);
    cc.inverse_class.push_back(cc.class_of[g.inv(r)]);
  }
  return cc;
}

std::uint64_t centralizer_order(const Group& g, const ConjClasses& cc, Elem x) {
  return g.order() / cc.sizes[cc.class_of[x]];
}

std::vector<std::uint32_t> power_map(const Group& g, const ConjClasses& cc, std::int64_t m) {
  std::vector<std::uint32_t> out(cc.count());
  for (std::size_t i = 0; i < cc.count(); ++i) {
    const auto o = static_cast<std::int64_t>(cc.rep_orders[i]);
    const std::int64_t e = ((m % o) + o) % o;
    out[i] = cc.class_of[g.pow(cc.reps[i], static_cast<std::uint64_t>(e))];
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> power_sequences(const Group& g, const ConjClasses& cc) {
  std::vector<std::vector<std::uint32_t>> out(cc.count());
  for (std::size_t i = 0; i < cc.count(); ++i) {
    Elem x = 0;
    for (std::uint64_t r = 0; r < cc.rep_orders[i]; ++r) {
      out[i].push_back(cc.class_of[x]);
      x = g.mul(x, cc.reps[i]);
    }
  }
  return out;
}

std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

int two_valuation(std::uint64_t n) { return n == 0 ? 0 : __builtin_ctzll(n); }

}  // namespace blocklab
