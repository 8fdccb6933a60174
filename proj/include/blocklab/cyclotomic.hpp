#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blocklab/extfield.hpp"
#include "blocklab/primefield.hpp"

namespace blocklab {

/// Exact element of Z[zeta_n] stored as multiplicities: value = sum_i mults[i] * zeta_n^i.
/// The representation is redundant; equality and divisibility go through the
/// canonical power-basis form modulo the cyclotomic polynomial Phi_n.
class CyclotomicInteger {
public:
  CyclotomicInteger() : CyclotomicInteger(1) {}
  explicit CyclotomicInteger(int conductor);
  CyclotomicInteger(int conductor, std::vector<std::int64_t> mults);

  static CyclotomicInteger integer(int conductor, std::int64_t v);
  /// zeta_n^k
  static CyclotomicInteger root_of_unity(int conductor, int k);

  int conductor() const { return n_; }
  const std::vector<std::int64_t>& mults() const { return mults_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(std::int64_t s) const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return *this = *this + o; }

  /// Complex conjugate (zeta -> zeta^-1).
  CyclotomicInteger conj() const;
  /// Galois image under zeta -> zeta^k (k coprime to n).
  CyclotomicInteger galois(int k) const;
  /// Re-express with a conductor that is a multiple of the current one.
  CyclotomicInteger lift_to(int conductor) const;

  /// Coordinates in the power basis 1, zeta, ..., zeta^(phi(n)-1).
  std::vector<std::int64_t> power_basis() const;
  bool equals(const CyclotomicInteger& o) const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  /// Exact division by an integer; nullopt if the quotient is not integral.
  std::optional<CyclotomicInteger> divide_exact(std::int64_t d) const;

  /// Image in GF(l) under zeta_n -> z, z a primitive n-th root of unity mod l.
  std::uint64_t evaluate_mod(const PrimeField& f, std::uint64_t z) const;

  std::string to_string() const;

private:
  int n_;
  std::vector<std::int64_t> mults_;
};

/// Coefficients of Phi_n, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Reduction data for the ring homomorphism Z[zeta_n] -> GF(2^m) sending
/// zeta_n to beta^u, where beta = extfield_element_of_order(m, n') for the odd part n' of n,
/// and u is the inverse of the 2-part of n modulo n'.
class Mod2Reduction {
public:
  Mod2Reduction(int conductor, int m);

  int conductor() const { return n_; }
  int degree() const { return m_; }
  ExtFieldElement zeta_image(int k) const;
  ExtFieldElement reduce(const CyclotomicInteger& x) const;
  /// x / 2^k reduced modulo the same prime ideal, computed 2-adically.
  /// Throws std::domain_error if x is not divisible by 2^k at that ideal.
  ExtFieldElement reduce_divided(const CyclotomicInteger& x, int k) const;

private:
  int n_;
  int m_;
  int odd_;
  int u_;
  ExtFieldElement beta_;
};

/// Smallest m with odd_part(n) | 2^m - 1.
int splitting_degree(int conductor);

ExtFieldElement reduce_cyclotomic_mod2(const CyclotomicInteger& x, int m);

}  // namespace blocklab
