#include "blocklab/bitmatrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace blocklab {

int gf2poly_degree(Gf2Poly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::string gf2poly_to_string(Gf2Poly p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = gf2poly_degree(p); i >= 0; --i) {
    if (!((p >> i) & 1u)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "x";
    else
      out += "x^" + std::to_string(i);
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged bit matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("bit matrix entries must be 0/1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

BitMatrix BitMatrix::companion(Gf2Poly poly) {
  const int n = gf2poly_degree(poly);
  if (n < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  BitMatrix m(n, n);
  for (int j = 0; j + 1 < n; ++j) m.set(j + 1, j, true);
  for (int i = 0; i < n; ++i) m.set(i, n - 1, (poly >> i) & 1u);
  return m;
}

BitMatrix BitMatrix::direct_sum(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.set(r, c, a.get(r, c));
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m.set(a.rows_ + r, a.cols_ + c, b.get(r, c));
  return m;
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row_ptr(dst);
  const std::uint64_t* s = row_ptr(src);
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < wpr_; ++w) std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = row_ptr(r);
  for (std::size_t w = 0; w < wpr_; ++w)
    if (p[w]) return false;
  return true;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("bit matrix product: dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* o = out.row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* s = rhs.row_ptr(k);
      for (std::size_t w = 0; w < out.wpr_; ++w) o[w] ^= s[w];
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("bit matrix sum: dimension mismatch");
  BitMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

bool BitMatrix::operator<(const BitMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
  return data_ < rhs.data_;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square bit matrix");
  BitMatrix result = identity(rows_);
  BitMatrix base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool BitMatrix::is_zero() const {
  for (auto w : data_)
    if (w) return false;
  return true;
}

bool BitMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::uint64_t BitMatrix::apply(std::uint64_t v) const {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    out |= static_cast<std::uint64_t>(std::popcount(data_[r * wpr_] & v) & 1) << r;
  return out;
}

std::size_t BitMatrix::hash() const {
  std::size_t h = rows_ * 1000003u ^ cols_;
  for (auto w : data_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out[r][c] = '1';
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& row : to_rows()) s += row + "\n";
  return s;
}

RrefResult rref_gf2(const BitMatrix& m) {
  RrefResult res{m, 0, {}};
  BitMatrix& a = res.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && !a.get(piv, col)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, row);
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != row && a.get(r, col)) a.add_row(r, row);
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank_gf2(const BitMatrix& m) { return rref_gf2(m).rank; }

BitMatrix kernel_gf2(const BitMatrix& m) {
  const RrefResult r = rref_gf2(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  BitMatrix basis(n - r.rank, n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, true);
    for (std::size_t i = 0; i < r.rank; ++i)
      if (r.rref.get(i, free)) basis.set(out, r.pivots[i], true);
    ++out;
  }
  return basis;
}

BitMatrix inverse_gf2(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square bit matrix");
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, n + r, true);
  }
  const RrefResult rr = rref_gf2(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("singular bit matrix");
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, rr.rref.get(r, n + c));
  return inv;
}

Gf2Poly charpoly_gf2(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols() || n > 63) throw std::invalid_argument("charpoly_gf2: need square n <= 63");
  BitMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && !h.get(piv, j)) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      h.swap_rows(piv, j + 1);
      for (std::size_t r = 0; r < n; ++r) {
        const bool a = h.get(r, piv), b = h.get(r, j + 1);
        h.set(r, piv, b);
        h.set(r, j + 1, a);
      }
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (!h.get(k, j)) continue;
      h.add_row(k, j + 1);
      for (std::size_t r = 0; r < n; ++r)
        if (h.get(r, k)) h.flip(r, j + 1);
    }
  }
  std::vector<Gf2Poly> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (p[k - 1] << 1) ^ (h.get(k - 1, k - 1) ? p[k - 1] : 0);
    bool prod = true;
    for (std::size_t i = 1; i < k; ++i) {
      prod = prod && h.get(k - i, k - i - 1);
      if (!prod) break;
      if (h.get(k - 1 - i, k - 1)) p[k] ^= p[k - 1 - i];
    }
  }
  return p[n];
}

std::uint64_t matrix_order(const BitMatrix& m, std::uint64_t cap) {
  const BitMatrix id = BitMatrix::identity(m.rows());
  BitMatrix x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x * m;
  }
  return 0;
}

bool bitvec_is_zero(const BitVec& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}

BitSubspace::BitSubspace(std::size_t n) : n_(n) {}

BitVec BitSubspace::reduce(BitVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (bitvec_get(v, pivots_[r])) bitvec_xor(v, rows_[r]);
  return v;
}

bool BitSubspace::contains(BitVec v) const { return bitvec_is_zero(reduce(std::move(v))); }

bool BitSubspace::insert(BitVec v) {
  v = reduce(std::move(v));
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (!v[w]) continue;
    pivots_.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w])));
    rows_.push_back(std::move(v));
    return true;
  }
  return false;
}

}  // namespace blocklab
