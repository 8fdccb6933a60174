#include "blocklab/center.hpp"

#include <stdexcept>

namespace blocklab {

namespace {

BitVec row_of(const BitMatrix& m, std::size_t r) {
  return BitVec(m.row_ptr(r), m.row_ptr(r) + m.words_per_row());
}

template <class F>
void for_each_bit(const BitVec& v, F&& f) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    std::uint64_t bits = v[w];
    while (bits) {
      f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
}

BitVec random_vec(std::size_t k, std::mt19937_64& rng) {
  BitVec v((k + 63) / 64, 0);
  for (std::size_t i = 0; i < k; ++i)
    if (rng() & 1u) bitvec_flip(v, i);
  return v;
}

}  // namespace

CenterAlgebra CenterAlgebra::from_group(const Group& g, const ConjClasses& cc) {
  CenterAlgebra z;
  z.k_ = cc.count();
  z.words_ = (z.k_ + 63) / 64;
  z.table_.assign(z.k_ * z.k_, BitVec(z.words_, 0));
  const auto n = static_cast<Elem>(g.order());
  std::vector<Elem> inverse(n);
  for (Elem x = 0; x < n; ++x) inverse[x] = g.inv(x);
  for (std::size_t l = 0; l < z.k_; ++l) {
    const Elem rep = cc.reps[l];
    for (Elem x = 0; x < n; ++x) {
      const std::size_t i = cc.class_of[x];
      const std::size_t j = cc.class_of[g.mul(inverse[x], rep)];
      bitvec_flip(z.table_[i * z.k_ + j], l);
    }
  }
  z.square_ = BitMatrix(z.k_, z.k_);
  for (std::size_t i = 0; i < z.k_; ++i) {
    const BitVec& sq = z.table_[i * z.k_ + i];
    for (std::size_t w = 0; w < z.words_; ++w) z.square_.row_ptr(i)[w] = sq[w];
  }
  return z;
}

BitVec CenterAlgebra::unit() const { return basis_vector(0); }

BitVec CenterAlgebra::basis_vector(std::size_t i) const {
  BitVec v(words_, 0);
  bitvec_flip(v, i);
  return v;
}

BitVec CenterAlgebra::mul(const BitVec& a, const BitVec& b) const {
  BitVec out(words_, 0);
  for_each_bit(a, [&](std::size_t i) { for_each_bit(b, [&](std::size_t j) { bitvec_xor(out, product(i, j)); }); });
  return out;
}

BitMatrix CenterAlgebra::multiplication_matrix(const BitVec& a) const {
  BitMatrix m(k_, k_);
  for (std::size_t j = 0; j < k_; ++j) {
    std::uint64_t* row = m.row_ptr(j);
    for_each_bit(a, [&](std::size_t i) {
      const BitVec& p = product(j, i);
      for (std::size_t w = 0; w < words_; ++w) row[w] ^= p[w];
    });
  }
  return m;
}

BitVec CenterAlgebra::square(const BitVec& a) const { return row_times(a, square_); }

ExtVec CenterAlgebra::mul(const ExtVec& a, const ExtVec& b) const {
  const int m = a.empty() ? 1 : a[0].degree();
  ExtVec out(k_, ExtFieldElement::zero(m));
  for (std::size_t i = 0; i < k_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < k_; ++j) {
      if (b[j].is_zero()) continue;
      const ExtFieldElement c = a[i] * b[j];
      for_each_bit(product(i, j), [&](std::size_t l) { out[l] += c; });
    }
  }
  return out;
}

ExtVec CenterAlgebra::square(const ExtVec& a) const {
  const int m = a.empty() ? 1 : a[0].degree();
  ExtVec out(k_, ExtFieldElement::zero(m));
  for (std::size_t i = 0; i < k_; ++i) {
    if (a[i].is_zero()) continue;
    const ExtFieldElement c = a[i] * a[i];
    for_each_bit(row_of(square_, i), [&](std::size_t l) { out[l] += c; });
  }
  return out;
}

bool CenterAlgebra::spot_check(std::mt19937_64& rng, int trials) const {
  for (int t = 0; t < trials; ++t) {
    const BitVec a = random_vec(k_, rng), b = random_vec(k_, rng), c = random_vec(k_, rng);
    if (mul(a, b) != mul(b, a)) return false;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    if (mul(unit(), a) != a) return false;
  }
  return true;
}

BitVec row_times(const BitVec& v, const BitMatrix& m) {
  BitVec out(m.words_per_row(), 0);
  for_each_bit(v, [&](std::size_t r) {
    const std::uint64_t* row = m.row_ptr(r);
    for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= row[w];
  });
  return out;
}

namespace {

BitMatrix frobenius_power(const CenterAlgebra& z) {
  int t = 1;
  while ((std::size_t{1} << t) < z.dim()) ++t;
  BitMatrix p = z.squaring_matrix();
  for (int i = 1; i < t; ++i) p = p * z.squaring_matrix();
  return p;
}

}  // namespace

BitSubspace nilradical(const CenterAlgebra& z) {
  const BitMatrix kern = kernel_gf2(frobenius_power(z).transpose());
  BitSubspace j(z.dim());
  for (std::size_t r = 0; r < kern.rows(); ++r) j.insert(row_of(kern, r));
  return j;
}

std::size_t nilradical_dim_over(const CenterAlgebra& z, int m) {
  const BitMatrix p = frobenius_power(z);
  std::vector<ExtVec> rows(p.rows(), ExtVec(p.cols(), ExtFieldElement::zero(m)));
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (p.get(r, c)) rows[r][c] = ExtFieldElement::one(m);
  return z.dim() - ext_rank(std::move(rows));
}

std::vector<BitVec> ideal_generators(const CenterAlgebra& z, const BitSubspace& j) {
  std::vector<BitVec> gens;
  BitSubspace span(z.dim());
  for (const auto& b : j.basis()) {
    if (span.dim() == j.dim()) break;
    if (span.contains(b)) continue;
    gens.push_back(b);
    const BitMatrix mb = z.multiplication_matrix(b);
    for (std::size_t r = 0; r < mb.rows(); ++r) span.insert(row_of(mb, r));
  }
  if (span.dim() != j.dim()) throw std::logic_error("ideal_generators: span is not the radical");
  return gens;
}

std::vector<BitSubspace> radical_powers(const CenterAlgebra& z) {
  const std::size_t k = z.dim();
  const BitSubspace j = nilradical(z);
  std::vector<BitMatrix> gmats;
  for (const auto& g : ideal_generators(z, j)) gmats.push_back(z.multiplication_matrix(g));
  std::vector<BitSubspace> out;
  BitSubspace whole(k);
  for (std::size_t i = 0; i < k; ++i) whole.insert(z.basis_vector(i));
  out.push_back(std::move(whole));
  out.push_back(j);
  while (out.back().dim() > 0) {
    const BitSubspace& cur = out.back();
    BitSubspace next(k);
    for (const auto& gm : gmats)
      for (const auto& v : cur.basis()) next.insert(row_times(v, gm));
    if (next.dim() >= cur.dim()) throw std::logic_error("radical_powers: filtration does not descend");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<BitSubspace> restrict_powers(const CenterAlgebra& z, const std::vector<BitSubspace>& powers,
                                         const BitVec& idempotent) {
  const BitMatrix me = z.multiplication_matrix(idempotent);
  std::vector<BitSubspace> out;
  for (const auto& p : powers) {
    BitSubspace r(z.dim());
    for (const auto& v : p.basis()) r.insert(row_times(v, me));
    const bool zero = r.dim() == 0;
    out.push_back(std::move(r));
    if (zero) break;
  }
  return out;
}

std::vector<std::size_t> loewy_vector(const std::vector<BitSubspace>& powers) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i + 1 < powers.size(); ++i) v.push_back(powers[i].dim() - powers[i + 1].dim());
  return v;
}

std::size_t dim_J2(const std::vector<BitSubspace>& powers) { return powers.size() > 2 ? powers[2].dim() : 0; }

std::size_t ext_rank(std::vector<ExtVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const ExtFieldElement inv = rows[rank][c].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const ExtFieldElement f = rows[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] += f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace blocklab
