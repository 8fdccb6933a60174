#pragma once

#include <cstdint>
#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/extfield.hpp"
#include "blocklab/group.hpp"

namespace blocklab {

/// Ordinary character table. Rows are sorted by (degree, trivial first, multiplicity vectors);
/// values are exact, stored at the conductor exp(G).
struct CharacterTable {
  std::uint64_t group_order = 1;
  int conductor = 1;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<CyclotomicInteger>> values;  // [character][class]
  std::uint64_t ell = 0;                               // prime used for the modular workspace
  std::uint64_t zeta = 0;                              // image of zeta_conductor mod ell
  std::vector<std::vector<std::uint64_t>> residues;    // values under zeta_conductor -> zeta

  std::size_t count() const { return degrees.size(); }
};

/// Burnside-Dixon: simultaneous eigenvectors of the class matrices mod ell, then exact
/// values by discrete Fourier inversion over each cyclic subgroup.
CharacterTable character_table(const Group& g, const ConjClasses& cc, std::uint64_t seed = 0x5eed);

/// Exact row and column orthogonality plus sum of squared degrees; throws std::logic_error on failure.
void verify_orthogonality(const CharacterTable& t, const ConjClasses& cc);

std::size_t k_of(const ConjClasses& cc);

/// omega(K) = |K| chi(g_K) / chi(1), exact; throws if some value is not integral.
std::vector<CyclotomicInteger> central_character(const CharacterTable& t, const ConjClasses& cc, std::size_t chi);

/// Reductions of the central character over GF(2^m), one per class.
std::vector<ExtFieldElement> block_distribution_key(const CharacterTable& t, const ConjClasses& cc, std::size_t chi,
                                                    int m);

/// Characters grouped by equal keys, ordered by first member; the group containing the
/// trivial character comes first.
std::vector<std::vector<std::size_t>> partition_by_keys(const std::vector<std::vector<ExtFieldElement>>& keys);

}  // namespace blocklab
