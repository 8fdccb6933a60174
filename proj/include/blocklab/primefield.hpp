#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace blocklab {

/// Arithmetic in Z/lZ for a prime l < 2^31.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Representative in (-l/2, l/2].
  std::int64_t lift_signed(std::uint64_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }
  /// An element of multiplicative order exactly d; requires d | l - 1.
  std::uint64_t root_of_unity(std::uint64_t d) const;

private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Smallest prime l with l = 1 (mod m) and l > bound.
std::uint64_t smallest_prime_one_mod(std::uint64_t m, std::uint64_t bound);

/// Dense matrix over GF(l), row-major.
class PrimeFieldMatrix {
public:
  PrimeFieldMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols);
  static PrimeFieldMatrix identity(std::uint64_t modulus, std::size_t n);

  std::uint64_t modulus() const { return field_.modulus(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PrimeFieldMatrix operator*(const PrimeFieldMatrix& rhs) const;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(PrimeFieldMatrix& m);
/// Basis of {v : M v = 0} as the rows of the result.
PrimeFieldMatrix kernel_mod(const PrimeFieldMatrix& m);
/// Basis (rows) of ker(M - lambda I).
PrimeFieldMatrix eigenspace_mod_l(const PrimeFieldMatrix& m, std::uint64_t lambda);
/// Characteristic polynomial det(xI - M), coefficients low degree first.
std::vector<std::uint64_t> charpoly_mod(const PrimeFieldMatrix& m);
/// Solve A X = B for square invertible A; throws std::domain_error if singular.
PrimeFieldMatrix solve_mod(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

/// Polynomials over GF(l), coefficients low degree first, no trailing zeros.
namespace polymod {
using Poly = std::vector<std::uint64_t>;
void trim(Poly& a);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly rem(const PrimeField& f, Poly a, const Poly& m);
Poly gcd(const PrimeField& f, Poly a, Poly b);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m);
/// Distinct roots in GF(l) of a nonzero polynomial, ascending.
std::vector<std::uint64_t> roots(const PrimeField& f, const Poly& a, std::mt19937_64& rng);
}  // namespace polymod

}  // namespace blocklab
