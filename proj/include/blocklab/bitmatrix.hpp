#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace blocklab {

/// Polynomial over GF(2) of degree < 64; bit i is the coefficient of x^i.
using Gf2Poly = std::uint64_t;

int gf2poly_degree(Gf2Poly p);
std::string gf2poly_to_string(Gf2Poly p);

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Rows given as strings of '0'/'1' characters, most significant column first.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  /// Companion matrix of a monic polynomial of degree n (acts as multiplication by x).
  static BitMatrix companion(Gf2Poly poly);
  /// Block diagonal sum.
  static BitMatrix direct_sum(const BitMatrix& a, const BitMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = data_[r * wpr_ + (c >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }
  const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix operator+(const BitMatrix& rhs) const;
  bool operator==(const BitMatrix& rhs) const = default;
  bool operator<(const BitMatrix& rhs) const;

  BitMatrix transpose() const;
  BitMatrix pow(std::uint64_t e) const;
  bool is_zero() const;
  bool is_identity() const;

  /// Matrix-vector product for n <= 64 with vectors packed into one word
  /// (bit j = coordinate j). Requires cols() <= 64.
  std::uint64_t apply(std::uint64_t v) const;
  /// Row vector times matrix for matrices with cols() <= 64.
  std::uint64_t row_word(std::size_t r) const { return data_[r * wpr_]; }

  std::size_t hash() const;
  std::string to_string() const;
  std::vector<std::string> to_rows() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BitMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref_gf2(const BitMatrix& m);
std::size_t rank_gf2(const BitMatrix& m);
/// Rows form a basis of {v : M v = 0}.
BitMatrix kernel_gf2(const BitMatrix& m);
/// Inverse of a square matrix; throws std::domain_error if singular.
BitMatrix inverse_gf2(const BitMatrix& m);
/// Characteristic polynomial det(xI - M), square matrices up to 63 x 63.
Gf2Poly charpoly_gf2(const BitMatrix& m);
/// Multiplicative order of an invertible matrix (searched up to `cap`); 0 if not found.
std::uint64_t matrix_order(const BitMatrix& m, std::uint64_t cap = 1u << 20);

/// Packed GF(2) vector, bit i of word i/64 is coordinate i.
using BitVec = std::vector<std::uint64_t>;

inline bool bitvec_get(const BitVec& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void bitvec_flip(BitVec& v, std::size_t i) { v[i >> 6] ^= std::uint64_t{1} << (i & 63); }
inline void bitvec_xor(BitVec& a, const BitVec& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}
bool bitvec_is_zero(const BitVec& v);

/// Subspace of GF(2)^n held as a semi-echelon basis (distinct lowest set bits).
class BitSubspace {
public:
  explicit BitSubspace(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<BitVec>& basis() const { return rows_; }

  /// Adds v to the span; false if v was already in it.
  bool insert(BitVec v);
  bool contains(BitVec v) const;
  /// v reduced against the basis.
  BitVec reduce(BitVec v) const;

private:
  std::size_t n_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

struct BitMatrixHash {
  std::size_t operator()(const BitMatrix& m) const { return m.hash(); }
};

}  // namespace blocklab
