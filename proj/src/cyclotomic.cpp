#include "blocklab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace blocklab {

namespace {

int odd_part(int n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

int two_exponent(int n) {
  int a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++a;
  }
  return a;
}

int inverse_mod(int a, int n) {
  if (n == 1) return 0;
  for (int x = 1; x < n; ++x)
    if ((static_cast<long long>(a) * x) % n == 1) return x;
  throw std::invalid_argument("inverse_mod: not invertible");
}

std::vector<std::int64_t> poly_exact_div(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den monic
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dd, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = num[k + dd];
    q[k] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<std::int64_t>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

CyclotomicInteger::CyclotomicInteger(int conductor) : n_(conductor), mults_(conductor, 0) {
  if (conductor < 1) throw std::invalid_argument("CyclotomicInteger: conductor must be positive");
}

CyclotomicInteger::CyclotomicInteger(int conductor, std::vector<std::int64_t> mults)
    : n_(conductor), mults_(std::move(mults)) {
  if (conductor < 1 || static_cast<int>(mults_.size()) != conductor)
    throw std::invalid_argument("CyclotomicInteger: multiplicity vector length must equal conductor");
}

CyclotomicInteger CyclotomicInteger::integer(int conductor, std::int64_t v) {
  CyclotomicInteger c(conductor);
  c.mults_[0] = v;
  return c;
}

CyclotomicInteger CyclotomicInteger::root_of_unity(int conductor, int k) {
  CyclotomicInteger c(conductor);
  c.mults_[((k % conductor) + conductor) % conductor] = 1;
  return c;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  if (n_ != o.n_) {
    const int l = std::lcm(n_, o.n_);
    return lift_to(l) + o.lift_to(l);
  }
  CyclotomicInteger r = *this;
  for (int i = 0; i < n_; ++i) r.mults_[i] += o.mults_[i];
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const { return *this + o * -1; }

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  if (n_ != o.n_) {
    const int l = std::lcm(n_, o.n_);
    return lift_to(l) * o.lift_to(l);
  }
  CyclotomicInteger r(n_);
  for (int i = 0; i < n_; ++i) {
    if (!mults_[i]) continue;
    for (int j = 0; j < n_; ++j) {
      if (!o.mults_[j]) continue;
      r.mults_[(i + j) % n_] += mults_[i] * o.mults_[j];
    }
  }
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(std::int64_t s) const {
  CyclotomicInteger r = *this;
  for (auto& m : r.mults_) m *= s;
  return r;
}

CyclotomicInteger CyclotomicInteger::conj() const { return galois(-1); }

CyclotomicInteger CyclotomicInteger::galois(int k) const {
  CyclotomicInteger r(n_);
  const int kk = ((k % n_) + n_) % n_;
  for (int i = 0; i < n_; ++i) r.mults_[(static_cast<long long>(i) * kk) % n_] += mults_[i];
  return r;
}

CyclotomicInteger CyclotomicInteger::lift_to(int conductor) const {
  if (conductor % n_ != 0) throw std::invalid_argument("lift_to: conductor must be a multiple");
  CyclotomicInteger r(conductor);
  const int step = conductor / n_;
  for (int i = 0; i < n_; ++i) r.mults_[i * step] = mults_[i];
  return r;
}

std::vector<std::int64_t> CyclotomicInteger::power_basis() const {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> a = mults_;
  for (std::size_t d = a.size(); d-- > deg;) {
    const std::int64_t c = a[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= deg; ++i) a[d - deg + i] -= c * phi[i];
  }
  a.resize(deg);
  return a;
}

bool CyclotomicInteger::equals(const CyclotomicInteger& o) const {
  if (n_ != o.n_) {
    const int l = std::lcm(n_, o.n_);
    return lift_to(l).equals(o.lift_to(l));
  }
  return (*this - o).is_zero();
}

bool CyclotomicInteger::is_zero() const {
  for (auto c : power_basis())
    if (c) return false;
  return true;
}

std::optional<std::int64_t> CyclotomicInteger::as_integer() const {
  const auto pb = power_basis();
  for (std::size_t i = 1; i < pb.size(); ++i)
    if (pb[i]) return std::nullopt;
  return pb.empty() ? 0 : pb[0];
}

std::optional<CyclotomicInteger> CyclotomicInteger::divide_exact(std::int64_t d) const {
  if (d == 0) throw std::domain_error("divide_exact by zero");
  auto pb = power_basis();
  for (auto& c : pb) {
    if (c % d) return std::nullopt;
    c /= d;
  }
  pb.resize(n_, 0);
  return CyclotomicInteger(n_, std::move(pb));
}

std::uint64_t CyclotomicInteger::evaluate_mod(const PrimeField& f, std::uint64_t z) const {
  std::uint64_t acc = 0, zp = 1;
  for (int i = 0; i < n_; ++i) {
    if (mults_[i]) acc = f.add(acc, f.mul(f.reduce(mults_[i]), zp));
    zp = f.mul(zp, z);
  }
  return acc;
}

std::string CyclotomicInteger::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!mults_[i]) continue;
    if (!s.empty()) s += mults_[i] > 0 ? "+" : "";
    if (i == 0) {
      s += std::to_string(mults_[i]);
      continue;
    }
    if (mults_[i] == -1) s += "-";
    else if (mults_[i] != 1) s += std::to_string(mults_[i]) + "*";
    s += "z" + std::to_string(n_) + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

int splitting_degree(int conductor) { return multiplicative_order_of_two(odd_part(conductor)); }

Mod2Reduction::Mod2Reduction(int conductor, int m)
    : n_(conductor), m_(m), odd_(odd_part(conductor)), u_(0), beta_(ExtFieldElement::one(m)) {
  if (((std::uint64_t{1} << m) - 1) % odd_ != 0)
    throw std::invalid_argument("Mod2Reduction: extension degree too small for conductor");
  beta_ = extfield_element_of_order(m, odd_);
  u_ = inverse_mod((conductor / odd_) % odd_, odd_);
}

ExtFieldElement Mod2Reduction::zeta_image(int k) const {
  if (odd_ == 1) return ExtFieldElement::one(m_);
  const long long e = ((static_cast<long long>(k) * u_) % odd_ + odd_) % odd_;
  return beta_.pow(static_cast<std::uint64_t>(e));
}

ExtFieldElement Mod2Reduction::reduce(const CyclotomicInteger& x) const {
  if (n_ % x.conductor() != 0) throw std::invalid_argument("Mod2Reduction: conductor mismatch");
  const CyclotomicInteger y = x.conductor() == n_ ? x : x.lift_to(n_);
  ExtFieldElement acc = ExtFieldElement::zero(m_);
  for (int i = 0; i < n_; ++i)
    if (y.mults()[i] & 1) acc += zeta_image(i);
  return acc;
}

ExtFieldElement Mod2Reduction::reduce_divided(const CyclotomicInteger& x, int k) const {
  if (two_exponent(n_) > 1)
    throw std::invalid_argument("reduce_divided: conductor with 4 | n needs a ramified extension");
  if (n_ % x.conductor() != 0) throw std::invalid_argument("Mod2Reduction: conductor mismatch");
  const CyclotomicInteger y = x.conductor() == n_ ? x : x.lift_to(n_);
  const GaloisRing ring(m_, k + 1);
  const GaloisRing::Element teich = ring.teichmuller(beta_);
  // zeta_n = eta^u * (-1)^v with eta = zeta_n^(n/odd) of odd order, u*(n/odd) + v*odd = 1.
  const int two_part = n_ / odd_;
  const long long v = two_part == 1 ? 0 : (1 - static_cast<long long>(u_) * two_part) / odd_;
  GaloisRing::Element acc = ring.zero();
  for (int i = 0; i < n_; ++i) {
    const std::int64_t c = y.mults()[i];
    if (!c) continue;
    const long long e = ((static_cast<long long>(i) * u_) % odd_ + odd_) % odd_;
    const bool negate = two_part == 2 && ((static_cast<long long>(i) * v) % 2 != 0);
    const std::int64_t coef = negate ? -c : c;
    acc = ring.add(acc, ring.mul(ring.from_int(coef), ring.pow(teich, static_cast<std::uint64_t>(e))));
  }
  return ring.divide_and_reduce(acc, k);
}

ExtFieldElement reduce_cyclotomic_mod2(const CyclotomicInteger& x, int m) {
  return Mod2Reduction(x.conductor(), m).reduce(x);
}

}  // namespace blocklab
