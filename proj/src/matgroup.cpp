#include "blocklab/matgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "blocklab/extfield.hpp"

namespace blocklab {

MatGroupGF2 MatGroupGF2::close(int n, std::vector<BitMatrix> gens, std::string name, std::size_t cap) {
  MatGroupGF2 g;
  g.n_ = n;
  g.name_ = std::move(name);
  for (const auto& m : gens)
    if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
      throw std::invalid_argument("MatGroupGF2::close: generator has wrong size");
  g.gens_ = std::move(gens);
  auto& elts = *g.elements_;
  auto& index = *g.index_;
  elts.push_back(BitMatrix::identity(n));
  index.emplace(elts[0], 0);
  std::vector<Elem> parent{0}, right;
  std::vector<std::uint32_t> via{0};
  const std::size_t ng = g.gens_.size();
  for (std::size_t i = 0; i < elts.size(); ++i) {
    const BitMatrix cur = elts[i];
    for (std::size_t s = 0; s < ng; ++s) {
      BitMatrix t = cur * g.gens_[s];
      auto it = index.find(t);
      if (it == index.end()) {
        if (elts.size() >= cap) throw std::length_error("MatGroupGF2::close: closure exceeds cap");
        it = index.emplace(t, static_cast<Elem>(elts.size())).first;
        elts.push_back(std::move(t));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }
  if (elts.size() <= 5000)
    g.table_ = std::make_shared<FiniteGroup>(FiniteGroup::from_generator_action(elts.size(), ng, right, parent, via));
  return g;
}

std::optional<Elem> MatGroupGF2::index_of(const BitMatrix& m) const {
  auto it = index_->find(m);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

const FiniteGroup& MatGroupGF2::abstract() const {
  if (!table_) throw std::logic_error("MatGroupGF2: group too large for a multiplication table");
  return *table_;
}

BitMatrix singer_cycle(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("singer_cycle: n out of range");
  return BitMatrix::companion(standard_modulus(n));
}

BitMatrix frobenius_matrix(int n) {
  const std::uint64_t f = standard_modulus(n);
  BitMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t xj = std::uint64_t{1} << j;
    const std::uint64_t sq = gf2m_mul(xj, xj, n, f);
    for (int i = 0; i < n; ++i) m.set(i, j, (sq >> i) & 1u);
  }
  return m;
}

int fixed_dim(const BitMatrix& m) {
  return static_cast<int>(m.cols() - rank_gf2(m + BitMatrix::identity(m.rows())));
}

int common_fixed_dim(int n, const std::vector<BitMatrix>& gens) {
  if (gens.empty()) return n;
  BitMatrix stacked(gens.size() * n, n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const BitMatrix d = gens[g] + BitMatrix::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.set(g * n + r, c, d.get(r, c));
  }
  return n - static_cast<int>(rank_gf2(stacked));
}

ActionInvariant action_invariants(const MatGroupGF2& e) {
  const int n = e.dim();
  ActionInvariant inv;
  inv.group_order = e.order();
  inv.fixed_dim_histogram.assign(n + 1, 0);
  for (const auto& m : e.elements()) {
    ++inv.fixed_dim_histogram[fixed_dim(m)];
    ++inv.charpolys[charpoly_gf2(m)];
  }
  inv.global_fixed_dim = common_fixed_dim(n, e.generators());

  const std::size_t points = std::size_t{1} << n;
  std::vector<std::size_t> uf(points);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& g : e.generators())
    for (std::size_t v = 0; v < points; ++v) {
      const std::size_t a = find(v), b = find(g.apply(v));
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::uint64_t> sizes;
  for (std::size_t v = 0; v < points; ++v) ++sizes[find(v)];
  for (auto& [root, s] : sizes) inv.orbit_sizes.push_back(s);
  std::sort(inv.orbit_sizes.begin(), inv.orbit_sizes.end());
  return inv;
}

bool is_faithful_odd(const MatGroupGF2& e) {
  if (e.order() % 2 == 0) return false;
  std::size_t identities = 0;
  for (const auto& m : e.elements()) identities += m.is_identity();
  return identities == 1;
}

std::vector<Elem> generated_subgroup(const Group& k, const std::vector<Elem>& gens) {
  std::vector<char> seen(k.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      const Elem y = k.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Elem> small_generating_set(const Group& a) {
  std::vector<Elem> order_sorted(a.order());
  std::iota(order_sorted.begin(), order_sorted.end(), 0);
  std::vector<std::uint64_t> ord(a.order());
  for (Elem x = 0; x < a.order(); ++x) ord[x] = a.element_order(x);
  std::stable_sort(order_sorted.begin(), order_sorted.end(), [&](Elem x, Elem y) { return ord[x] > ord[y]; });
  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  for (Elem x : order_sorted) {
    if (current.size() == a.order()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generated_subgroup(a, gens);
  }
  return gens;
}

class IsoSearch {
public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Gf2Poly>& cpa,
            const std::vector<Gf2Poly>& cpb)
      : a_(a), b_(b), cpa_(cpa), cpb_(cpb) {
    gens_ = small_generating_set(a_);
    std::vector<std::uint64_t> oa(a.order()), ob(b.order());
    for (Elem x = 0; x < a.order(); ++x) oa[x] = a.element_order(x);
    for (Elem y = 0; y < b.order(); ++y) ob[y] = b.element_order(y);
    for (Elem g : gens_) {
      std::vector<Elem> c;
      for (Elem y = 0; y < b.order(); ++y)
        if (ob[y] == oa[g] && cpb[y] == cpa[g]) c.push_back(y);
      cand_.push_back(std::move(c));
    }
  }

  bool run() {
    img_.assign(gens_.size(), 0);
    return extend(0);
  }

private:
  bool extend(std::size_t t) {
    if (t == gens_.size()) return true;
    for (Elem y : cand_[t]) {
      img_[t] = y;
      if (consistent(t + 1) && extend(t + 1)) return true;
    }
    return false;
  }

  bool consistent(std::size_t t) {
    constexpr Elem unset = ~Elem{0};
    map_.assign(a_.order(), unset);
    used_.assign(b_.order(), 0);
    map_[0] = 0;
    used_[0] = 1;
    queue_.assign(1, 0);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const Elem x = queue_[q];
      for (std::size_t i = 0; i < t; ++i) {
        const Elem xa = a_.mul(x, gens_[i]);
        const Elem y = b_.mul(map_[x], img_[i]);
        if (map_[xa] == unset) {
          if (used_[y] || cpa_[xa] != cpb_[y]) return false;
          map_[xa] = y;
          used_[y] = 1;
          queue_.push_back(xa);
        } else if (map_[xa] != y) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  const std::vector<Gf2Poly>& cpa_;
  const std::vector<Gf2Poly>& cpb_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<Elem> img_;
  std::vector<Elem> map_;
  std::vector<char> used_;
  std::vector<Elem> queue_;
};

}  // namespace

bool subgroup_action_equivalent(const MatGroupGF2& e1, const MatGroupGF2& h) {
  if (e1.dim() != h.dim() || e1.order() != h.order()) return false;
  std::vector<Gf2Poly> cpa, cpb;
  std::map<Gf2Poly, std::uint64_t> ma, mb;
  for (const auto& m : e1.elements()) ++ma[cpa.emplace_back(charpoly_gf2(m))];
  for (const auto& m : h.elements()) ++mb[cpb.emplace_back(charpoly_gf2(m))];
  if (ma != mb) return false;
  return IsoSearch(e1.abstract(), h.abstract(), cpa, cpb).run();
}

std::vector<Subgroup> subgroups_of_order(const Group& k, std::size_t m) {
  std::vector<Subgroup> out;
  if (k.order() % m != 0) return out;
  std::set<std::vector<Elem>> known;
  std::vector<Subgroup> queue;
  for (Elem x = 0; x < k.order(); ++x) {
    if (m % k.element_order(x) != 0) continue;
    Subgroup s{generated_subgroup(k, {x}), {x}};
    if (s.gens.front() == 0) s.gens.clear();
    if (known.insert(s.elements).second) queue.push_back(std::move(s));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Subgroup s = queue[q];
    if (s.elements.size() == m) {
      out.push_back(s);
      continue;
    }
    for (Elem x = 0; x < k.order(); ++x) {
      if (std::binary_search(s.elements.begin(), s.elements.end(), x)) continue;
      if (m % k.element_order(x) != 0) continue;
      Subgroup t{{}, s.gens};
      t.gens.push_back(x);
      t.elements = generated_subgroup(k, t.gens);
      if (m % t.elements.size() != 0) continue;
      if (known.insert(t.elements).second) queue.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return out;
}

bool is_normal(const Group& k, const Subgroup& h) {
  for (Elem s : k.generators())
    for (Elem x : h.gens)
      if (!std::binary_search(h.elements.begin(), h.elements.end(), k.conj(x, s))) return false;
  return true;
}

}  // namespace blocklab
