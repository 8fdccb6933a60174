#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/group.hpp"

namespace blocklab {

/// Subgroup of GL_n(2) with its full element list (BFS order from the identity).
class MatGroupGF2 {
public:
  MatGroupGF2() = default;
  static MatGroupGF2 close(int n, std::vector<BitMatrix> gens, std::string name = {},
                           std::size_t cap = 1000000);

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<BitMatrix>& generators() const { return gens_; }
  const std::vector<BitMatrix>& elements() const { return *elements_; }
  std::size_t order() const { return elements_->size(); }
  std::optional<Elem> index_of(const BitMatrix& m) const;
  bool contains(const BitMatrix& m) const { return index_of(m).has_value(); }

  /// Abstract group on the element indices; available for orders up to 5000.
  const FiniteGroup& abstract() const;
  bool has_table() const { return table_ != nullptr; }

private:
  int n_ = 0;
  std::string name_;
  std::vector<BitMatrix> gens_;
  std::shared_ptr<std::vector<BitMatrix>> elements_ = std::make_shared<std::vector<BitMatrix>>();
  std::shared_ptr<std::unordered_map<BitMatrix, Elem, BitMatrixHash>> index_ =
      std::make_shared<std::unordered_map<BitMatrix, Elem, BitMatrixHash>>();
  std::shared_ptr<FiniteGroup> table_;
};

/// Companion matrix of the fixed degree-n modulus, an element of order 2^n - 1.
BitMatrix singer_cycle(int n);
/// The Frobenius map v -> v^2 of GF(2^n), in the polynomial basis of the fixed modulus.
BitMatrix frobenius_matrix(int n);

struct ActionInvariant {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> fixed_dim_histogram;  // index d: #{e : dim C_D(e) = d}
  int global_fixed_dim = 0;
  std::vector<std::uint64_t> orbit_sizes;  // ascending
  std::map<Gf2Poly, std::uint64_t> charpolys;

  bool operator==(const ActionInvariant&) const = default;
};

ActionInvariant action_invariants(const MatGroupGF2& e);
/// dim C_D(e) for a single matrix.
int fixed_dim(const BitMatrix& m);
/// Dimension of the subspace fixed by every generator.
int common_fixed_dim(int n, const std::vector<BitMatrix>& gens);

bool is_faithful_odd(const MatGroupGF2& e);

/// True iff some abstract isomorphism E1 -> H preserves characteristic polynomials.
bool subgroup_action_equivalent(const MatGroupGF2& e1, const MatGroupGF2& h);

/// A subgroup of an abstract group, as sorted element indices plus generators.
struct Subgroup {
  std::vector<Elem> elements;
  std::vector<Elem> gens;
};

/// All subgroups of order m of a (small) group.
std::vector<Subgroup> subgroups_of_order(const Group& k, std::size_t m);
bool is_normal(const Group& k, const Subgroup& h);
/// Subgroup generated by elements, as sorted indices.
std::vector<Elem> generated_subgroup(const Group& k, const std::vector<Elem>& gens);

}  // namespace blocklab
