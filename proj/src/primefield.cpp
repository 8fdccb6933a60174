#include "blocklab/primefield.hpp"

#include <algorithm>
#include <stdexcept>

namespace blocklab {

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus < 2 || modulus >= (std::uint64_t{1} << 31) || !is_prime(modulus))
    throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::root_of_unity(std::uint64_t d) const {
  if (d == 0 || (p_ - 1) % d != 0) throw std::invalid_argument("root_of_unity: d must divide l-1");
  const auto factors = prime_factors(d);
  for (std::uint64_t g = 2; g < p_; ++g) {
    const std::uint64_t c = pow(g, (p_ - 1) / d);
    bool ok = true;
    for (auto q : factors)
      if (pow(c, d / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return 1;  // d == 1
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_prime_one_mod(std::uint64_t m, std::uint64_t bound) {
  std::uint64_t l = (bound / m + 1) * m + 1;
  while (!is_prime(l)) l += m;
  return l;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols)
    : field_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint64_t modulus, std::size_t n) {
  PrimeFieldMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix& rhs) const {
  if (cols_ != rhs.rows_ || modulus() != rhs.modulus())
    throw std::invalid_argument("PrimeFieldMatrix product mismatch");
  PrimeFieldMatrix out(modulus(), rows_, rhs.cols_);
  const std::uint64_t p = modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* o = &out.data_[r * rhs.cols_];
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(r, k);
      if (!a) continue;
      const std::uint64_t* b = &rhs.data_[k * rhs.cols_];
      for (std::size_t c = 0; c < rhs.cols_; ++c) o[c] = (o[c] + a * b[c]) % p;
    }
  }
  return out;
}

std::vector<std::size_t> rref_mod(PrimeFieldMatrix& m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    const std::uint64_t s = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const std::uint64_t t = m.at(r, col);
      if (!t) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

PrimeFieldMatrix kernel_mod(const PrimeFieldMatrix& m) {
  PrimeFieldMatrix r = m;
  const auto pivots = rref_mod(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  PrimeFieldMatrix basis(m.modulus(), n - pivots.size(), n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(out, pivots[i]) = m.field().neg(r.at(i, free));
    ++out;
  }
  return basis;
}

PrimeFieldMatrix eigenspace_mod_l(const PrimeFieldMatrix& m, std::uint64_t lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace of non-square matrix");
  PrimeFieldMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    shifted.at(i, i) = m.field().sub(shifted.at(i, i), lambda % m.modulus());
  return kernel_mod(shifted);
}

std::vector<std::uint64_t> charpoly_mod(const PrimeFieldMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  const PrimeField& f = m.field();
  PrimeFieldMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, piv), h.at(r, j + 1));
    }
    const std::uint64_t pinv = f.inv(h.at(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const std::uint64_t u = f.mul(h.at(k, j), pinv);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h.at(k, c) = f.sub(h.at(k, c), f.mul(u, h.at(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h.at(r, j + 1) = f.add(h.at(r, j + 1), f.mul(u, h.at(r, k)));
    }
  }
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> cur(k + 1, 0);
    const std::uint64_t d = h.at(k - 1, k - 1);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(d, p[k - 1][i]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h.at(k - i, k - i - 1));
      if (!prod) break;
      const std::uint64_t coef = f.mul(h.at(k - 1 - i, k - 1), prod);
      for (std::size_t t = 0; t < p[k - 1 - i].size(); ++t)
        cur[t] = f.sub(cur[t], f.mul(coef, p[k - 1 - i][t]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

PrimeFieldMatrix solve_mod(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.rows() != n) throw std::invalid_argument("solve_mod: shape mismatch");
  PrimeFieldMatrix aug(a.modulus(), n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, n + c) = b.at(r, c);
  }
  const auto piv = rref_mod(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("solve_mod: singular system");
  PrimeFieldMatrix x(a.modulus(), n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x.at(r, c) = aug.at(r, n + c);
  return x;
}

namespace polymod {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  const std::uint64_t p = f.modulus();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly rem(const PrimeField& f, Poly a, const Poly& m) {
  trim(a);
  if (m.empty()) throw std::domain_error("polynomial division by zero");
  const std::uint64_t lead_inv = f.inv(m.back());
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
  }
  return a;
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  base = rem(f, base, m);
  while (e) {
    if (e & 1u) result = rem(f, mul(f, result, base), m);
    e >>= 1;
    if (e) base = rem(f, mul(f, base, base), m);
  }
  return result;
}

namespace {

void split_linear(const PrimeField& f, const Poly& g, std::mt19937_64& rng,
                  std::vector<std::uint64_t>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  const std::uint64_t p = f.modulus();
  if (p == 2) {
    // Only candidates are 0 and 1.
    for (std::uint64_t x = 0; x < 2; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = g.size(); i-- > 0;) v = (v * x + g[i]) % 2;
      if (!v) out.push_back(x);
    }
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    const Poly shifted{dist(rng), 1};
    Poly h = powmod(f, shifted, (p - 1) / 2, g);
    if (h.empty()) h = {p - 1};
    else h[0] = f.sub(h[0], 1);
    trim(h);
    Poly d = gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      // g / d by long division
      Poly q(g.size() - d.size() + 1, 0);
      Poly r = g;
      const std::size_t dd = d.size() - 1;
      for (std::size_t k = q.size(); k-- > 0;) {
        const std::uint64_t c = r[k + dd];
        q[k] = c;
        for (std::size_t i = 0; i <= dd; ++i) r[k + i] = f.sub(r[k + i], f.mul(c, d[i]));
      }
      split_linear(f, d, rng, out);
      split_linear(f, q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots(const PrimeField& f, const Poly& a, std::mt19937_64& rng) {
  Poly g = a;
  trim(g);
  if (g.empty()) throw std::domain_error("roots of the zero polynomial");
  std::vector<std::uint64_t> out;
  if (g.size() == 1) return out;
  // Product of the distinct linear factors: gcd(g, x^l - x).
  Poly xp = powmod(f, Poly{0, 1}, f.modulus(), g);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = f.sub(xp[1], 1);
  trim(xp);
  Poly lin = xp.empty() ? g : gcd(f, g, xp);
  if (!lin.empty()) {
    const std::uint64_t s = f.inv(lin.back());
    for (auto& c : lin) c = f.mul(c, s);
  }
  split_linear(f, lin, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polymod

}  // namespace blocklab
