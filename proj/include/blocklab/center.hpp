#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/extfield.hpp"
#include "blocklab/group.hpp"

namespace blocklab {

using ExtVec = std::vector<ExtFieldElement>;

/// Z(kG) over GF(2) in the basis of class sums. product(i, j) holds the parities of
/// the structure constants a_{ijl}, l = 0..k-1.
class CenterAlgebra {
public:
  static CenterAlgebra from_group(const Group& g, const ConjClasses& cc);

  std::size_t dim() const { return k_; }
  std::size_t words() const { return words_; }
  const BitVec& product(std::size_t i, std::size_t j) const { return table_[i * k_ + j]; }
  BitVec unit() const;
  BitVec basis_vector(std::size_t i) const;

  BitVec mul(const BitVec& a, const BitVec& b) const;
  /// Row j is K_j * a.
  BitMatrix multiplication_matrix(const BitVec& a) const;
  /// Row i is K_i^2; squaring x -> x^2 is the linear map v -> v L.
  const BitMatrix& squaring_matrix() const { return square_; }
  BitVec square(const BitVec& a) const;

  /// Products of elements with GF(2^m) coefficients.
  ExtVec mul(const ExtVec& a, const ExtVec& b) const;
  ExtVec square(const ExtVec& a) const;

  /// Random associativity and commutativity spot checks.
  bool spot_check(std::mt19937_64& rng, int trials) const;

private:
  std::size_t k_ = 0;
  std::size_t words_ = 0;
  std::vector<BitVec> table_;
  BitMatrix square_;
};

BitVec row_times(const BitVec& v, const BitMatrix& m);

/// Nilradical: the kernel of x -> x^(2^t) with 2^t >= dim.
BitSubspace nilradical(const CenterAlgebra& z);
/// Dimension of the nilradical of Z tensored with GF(2^m), by elimination over GF(2^m).
std::size_t nilradical_dim_over(const CenterAlgebra& z, int m);

/// Small set g_1..g_s with J = sum_s g_s Z.
std::vector<BitVec> ideal_generators(const CenterAlgebra& z, const BitSubspace& j);

/// Powers J^0 = Z, J^1, J^2, ..., ending with the zero space.
std::vector<BitSubspace> radical_powers(const CenterAlgebra& z);
/// The filtration e J^i of the ideal eZ for an idempotent e.
std::vector<BitSubspace> restrict_powers(const CenterAlgebra& z, const std::vector<BitSubspace>& powers,
                                         const BitVec& idempotent);
/// Layer dimensions dim J^i / J^(i+1).
std::vector<std::size_t> loewy_vector(const std::vector<BitSubspace>& powers);
std::size_t dim_J2(const std::vector<BitSubspace>& powers);

/// Rank of a matrix over GF(2^m) (rows of field elements).
std::size_t ext_rank(std::vector<ExtVec> rows);

}  // namespace blocklab
