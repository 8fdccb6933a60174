#include "blocklab/extfield.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/primefield.hpp"

namespace blocklab {

std::uint64_t gf2m_mul(std::uint64_t a, std::uint64_t b, int m, std::uint64_t modulus) {
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << m;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

namespace {

std::uint64_t gf2m_pow(std::uint64_t a, std::uint64_t e, int m, std::uint64_t modulus) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1u) r = gf2m_mul(r, a, m, modulus);
    a = gf2m_mul(a, a, m, modulus);
    e >>= 1;
  }
  return r;
}

bool x_is_primitive(std::uint64_t poly, int m) {
  if (!(poly & 1u)) return false;
  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  const std::uint64_t x = m == 1 ? 1 : 2;  // for m = 1, x = 1 mod (x+1)
  if (gf2m_pow(x, order, m, poly) != 1) return false;
  for (auto q : prime_factors(order))
    if (gf2m_pow(x, order / q, m, poly) == 1) return false;
  return true;
}

}  // namespace

std::uint64_t standard_modulus(int m) {
  if (m < 1 || m > 32) throw std::invalid_argument("standard_modulus: degree out of range");
  static std::array<std::uint64_t, 33> cache{};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache[m]) return cache[m];
  const std::uint64_t lead = std::uint64_t{1} << m;
  for (std::uint64_t low = 1; low < lead; low += 2) {
    if (x_is_primitive(lead | low, m)) {
      cache[m] = lead | low;
      return cache[m];
    }
  }
  throw std::logic_error("no primitive polynomial found");
}

ExtFieldElement::ExtFieldElement(int m, std::uint64_t poly) : m_(m), poly_(poly) {
  if (m < 1 || m > 32) throw std::invalid_argument("ExtFieldElement: degree out of range");
  if (gf2poly_degree(poly) >= m) throw std::invalid_argument("ExtFieldElement: poly not reduced");
}

ExtFieldElement ExtFieldElement::generator(int m) { return {m, m == 1 ? 1u : 2u}; }

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& o) const {
  if (m_ != o.m_) throw std::invalid_argument("ExtFieldElement: field mismatch");
  return {m_, poly_ ^ o.poly_};
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& o) const {
  if (m_ != o.m_) throw std::invalid_argument("ExtFieldElement: field mismatch");
  return {m_, gf2m_mul(poly_, o.poly_, m_, standard_modulus(m_))};
}

ExtFieldElement ExtFieldElement::pow(std::uint64_t e) const {
  return {m_, gf2m_pow(poly_, e, m_, standard_modulus(m_))};
}

ExtFieldElement ExtFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in GF(2^m)");
  return pow((std::uint64_t{1} << m_) - 2);
}

std::uint64_t ExtFieldElement::order() const {
  if (is_zero()) throw std::domain_error("order of zero");
  std::uint64_t ord = (std::uint64_t{1} << m_) - 1;
  for (auto q : prime_factors(ord))
    while (ord % q == 0 && pow(ord / q).is_one()) ord /= q;
  return ord;
}

std::string ExtFieldElement::to_string() const { return gf2poly_to_string(poly_); }

ExtFieldElement extfield_element_of_order(int m, std::uint64_t d) {
  const std::uint64_t group = (std::uint64_t{1} << m) - 1;
  if (d == 0 || group % d != 0)
    throw std::invalid_argument("extfield_element_of_order: d does not divide 2^m - 1");
  return ExtFieldElement::generator(m).pow(group / d);
}

int multiplicative_order_of_two(std::uint64_t n) {
  if (n % 2 == 0) throw std::invalid_argument("multiplicative_order_of_two: n must be odd");
  if (n == 1) return 1;
  std::uint64_t v = 2 % n;
  int k = 1;
  while (v != 1) {
    v = (v * 2) % n;
    ++k;
  }
  return k;
}

GaloisRing::GaloisRing(int m, int s)
    : m_(m), s_(s), mask_(s >= 32 ? 0xffffffffu : ((1u << s) - 1)), modulus_(standard_modulus(m)) {
  if (s < 1 || s > 30) throw std::invalid_argument("GaloisRing: precision out of range");
}

GaloisRing::Element GaloisRing::one() const {
  Element e = zero();
  e[0] = 1;
  return e;
}

GaloisRing::Element GaloisRing::from_int(std::int64_t v) const {
  Element e = zero();
  e[0] = static_cast<std::uint32_t>(v) & mask_;
  return e;
}

GaloisRing::Element GaloisRing::add(const Element& a, const Element& b) const {
  Element r(m_);
  for (int i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) & mask_;
  return r;
}

GaloisRing::Element GaloisRing::mul(const Element& a, const Element& b) const {
  std::vector<std::uint64_t> prod(2 * m_, 0);
  for (int i = 0; i < m_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  for (auto& c : prod) c &= mask_;
  // x^m = -(F - x^m) over the integers.
  for (int d = 2 * m_ - 1; d >= m_; --d) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < m_; ++i)
      if ((modulus_ >> i) & 1u) prod[d - m_ + i] = (prod[d - m_ + i] + (mask_ + 1 - c)) & mask_;
  }
  Element r(m_);
  for (int i = 0; i < m_; ++i) r[i] = static_cast<std::uint32_t>(prod[i] & mask_);
  return r;
}

GaloisRing::Element GaloisRing::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GaloisRing::Element GaloisRing::teichmuller(const ExtFieldElement& x) const {
  if (x.degree() != m_) throw std::invalid_argument("teichmuller: field mismatch");
  Element a = zero();
  for (int i = 0; i < m_; ++i) a[i] = (x.poly() >> i) & 1u;
  // Raising to q = 2^m is the identity mod 2; s further iterations converge 2-adically.
  for (int it = 0; it < s_; ++it)
    for (int k = 0; k < m_; ++k) a = mul(a, a);
  return a;
}

int GaloisRing::two_valuation(const Element& a) const {
  int v = s_;
  for (auto c : a) {
    if (!c) continue;
    int cv = 0;
    while (!((c >> cv) & 1u)) ++cv;
    v = std::min(v, cv);
  }
  return v;
}

ExtFieldElement GaloisRing::divide_and_reduce(const Element& a, int k) const {
  if (k >= s_ || two_valuation(a) < k)
    throw std::domain_error("GaloisRing: value not divisible by requested power of two");
  std::uint64_t poly = 0;
  for (int i = 0; i < m_; ++i) poly |= static_cast<std::uint64_t>((a[i] >> k) & 1u) << i;
  return {m_, poly};
}

}  // namespace blocklab
