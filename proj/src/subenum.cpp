#include "blocklab/subenum.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "blocklab/primefield.hpp"

namespace blocklab {

namespace {

auto sort_key(const SubgroupClass& c) {
  return std::tie(c.order, c.fingerprint.global_fixed_dim, c.fingerprint.fixed_dim_histogram,
                  c.fingerprint.orbit_sizes, c.fingerprint.charpolys);
}

SubgroupClass make_class(MatGroupGF2 h) {
  SubgroupClass c;
  c.order = h.order();
  c.fingerprint = action_invariants(h);
  c.shape = subgroup_shape(h);
  c.representative = std::move(h);
  return c;
}

bool known(const std::vector<SubgroupClass>& classes, const MatGroupGF2& ambient, const MatGroupGF2& k,
           const ActionInvariant& inv) {
  for (const auto& c : classes)
    if (c.order == k.order() && c.fingerprint == inv && conjugate_in(ambient, c.representative, k)) return true;
  return false;
}

void sort_classes(std::vector<SubgroupClass>& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
}

}  // namespace

MatGroupGF2 general_linear_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("general_linear_group: n out of range");
  std::vector<BitMatrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      BitMatrix t = BitMatrix::identity(n);
      t.set(i, j, true);
      gens.push_back(t);
    }
  return MatGroupGF2::close(n, std::move(gens), "GL" + std::to_string(n) + "(2)", 50'000);
}

bool conjugate_in(const MatGroupGF2& ambient, const MatGroupGF2& a, const MatGroupGF2& b) {
  if (a.order() != b.order()) return false;
  for (const auto& g : ambient.elements()) {
    const BitMatrix gi = inverse_gf2(g);
    bool ok = true;
    for (const auto& h : a.generators())
      if (!b.contains(g * h * gi)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::string subgroup_shape(const MatGroupGF2& h) {
  const std::uint64_t o = h.order();
  if (o == 1) return "1";
  bool abelian = true;
  std::uint64_t max_order = 1;
  for (const auto& x : h.elements()) max_order = std::max(max_order, matrix_order(x));
  for (const auto& x : h.generators())
    for (const auto& y : h.generators())
      if (x * y != y * x) abelian = false;
  if (max_order == o) return "C" + std::to_string(o);
  const auto primes = prime_factors(o);
  if (abelian && primes.size() == 1 && max_order * max_order == o)
    return "C" + std::to_string(max_order) + "xC" + std::to_string(max_order);
  if (!abelian && primes.size() == 2 && primes[0] * primes[1] == o)
    return "C" + std::to_string(primes[1]) + ":C" + std::to_string(primes[0]);
  return (abelian ? "abelian-" : "order-") + std::to_string(o);
}

std::vector<SubgroupClass> enumerate_odd_subgroups(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("enumerate_odd_subgroups: only n <= 4 is supported");
  const MatGroupGF2 gl = general_linear_group(n);
  std::vector<SubgroupClass> classes{make_class(MatGroupGF2::close(n, {}))};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const MatGroupGF2 h = classes[idx].representative;
      std::vector<BitMatrix> normalizer;
      for (const auto& g : gl.elements()) {
        const BitMatrix gi = inverse_gf2(g);
        bool ok = true;
        for (const auto& x : h.generators())
          if (!h.contains(g * x * gi)) {
            ok = false;
            break;
          }
        if (ok) normalizer.push_back(g);
      }
      std::vector<MatGroupGF2> built;
      for (const auto& x : normalizer) {
        if (h.contains(x)) continue;
        if (std::any_of(built.begin(), built.end(), [&](const MatGroupGF2& k) { return k.contains(x); })) continue;
        // order of x modulo H
        std::uint64_t p = 1;
        BitMatrix y = x;
        while (!h.contains(y)) {
          y = y * x;
          ++p;
        }
        if (p % 2 == 0 || !is_prime(p)) continue;
        auto gens = h.generators();
        gens.push_back(x);
        MatGroupGF2 k = MatGroupGF2::close(n, std::move(gens));
        const ActionInvariant inv = action_invariants(k);
        built.push_back(k);
        if (known(classes, gl, k, inv)) continue;
        next.push_back(classes.size());
        classes.push_back(make_class(std::move(k)));
      }
    }
    frontier = std::move(next);
  }
  sort_classes(classes);
  return classes;
}

std::vector<SubgroupClass> brute_force_odd_subgroups(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("brute_force_odd_subgroups: only n <= 3 is supported");
  const MatGroupGF2 gl = general_linear_group(n);
  const FiniteGroup& abs = gl.abstract();
  std::vector<SubgroupClass> classes;
  for (std::size_t m = 1; m <= gl.order(); m += 2) {
    if (gl.order() % m) continue;
    for (const auto& s : subgroups_of_order(abs, m)) {
      std::vector<BitMatrix> gens;
      for (Elem e : s.gens) gens.push_back(gl.elements()[e]);
      MatGroupGF2 k = MatGroupGF2::close(n, std::move(gens));
      const ActionInvariant inv = action_invariants(k);
      if (!known(classes, gl, k, inv)) classes.push_back(make_class(std::move(k)));
    }
  }
  sort_classes(classes);
  return classes;
}

CatalogueValidation validate_catalogue_n6(const std::vector<CatalogueEntry>& cat) {
  CatalogueValidation v;
  v.entries = cat.size();
  if (cat.empty()) v.warnings.push_back("empty catalogue: nothing to compare");
  v.warnings.push_back("completeness of the list is not checked");
  std::vector<ActionInvariant> inv;
  for (const auto& e : cat) inv.push_back(action_invariants(e.group));
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (!(inv[i] == inv[j])) continue;
      if (subgroup_action_equivalent(cat[i].group, cat[j].group))
        v.equivalent_pairs.emplace_back(cat[i].label, cat[j].label);
    }
  return v;
}

}  // namespace blocklab
