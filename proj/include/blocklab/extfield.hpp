#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blocklab {

/// Fixed modulus of degree m for GF(2^m): the lowest primitive polynomial
/// (smallest integer encoding, bit i = coefficient of x^i). 1 <= m <= 32.
std::uint64_t standard_modulus(int m);

/// Element of GF(2^m) = GF(2)[x]/(standard_modulus(m)).
class ExtFieldElement {
public:
  ExtFieldElement() = default;
  ExtFieldElement(int m, std::uint64_t poly);

  static ExtFieldElement zero(int m) { return {m, 0}; }
  static ExtFieldElement one(int m) { return {m, 1}; }
  /// The class of x, a generator of GF(2^m)^*.
  static ExtFieldElement generator(int m);

  int degree() const { return m_; }
  std::uint64_t poly() const { return poly_; }
  std::uint64_t modulus() const { return standard_modulus(m_); }
  bool is_zero() const { return poly_ == 0; }
  bool is_one() const { return poly_ == 1; }

  ExtFieldElement operator+(const ExtFieldElement& o) const;
  ExtFieldElement operator*(const ExtFieldElement& o) const;
  ExtFieldElement& operator+=(const ExtFieldElement& o) { return *this = *this + o; }
  ExtFieldElement& operator*=(const ExtFieldElement& o) { return *this = *this * o; }
  ExtFieldElement pow(std::uint64_t e) const;
  ExtFieldElement inverse() const;
  /// Multiplicative order (element must be nonzero).
  std::uint64_t order() const;

  bool operator==(const ExtFieldElement& o) const = default;
  auto operator<=>(const ExtFieldElement& o) const = default;

  std::string to_string() const;

private:
  int m_ = 1;
  std::uint64_t poly_ = 0;
};

/// Raw product in GF(2)[x]/(modulus) for elements of degree < m.
std::uint64_t gf2m_mul(std::uint64_t a, std::uint64_t b, int m, std::uint64_t modulus);

/// An element of multiplicative order exactly d in GF(2^m).
/// Throws std::invalid_argument if d does not divide 2^m - 1.
ExtFieldElement extfield_element_of_order(int m, std::uint64_t d);

/// Multiplicative order of 2 modulo an odd n (1 for n = 1).
int multiplicative_order_of_two(std::uint64_t n);

/// Galois ring GR(2^s, m) = (Z/2^s)[x]/(F) with F the standard GF(2^m) modulus
/// read over the integers. Used for exact 2-adic division of cyclotomic values.
class GaloisRing {
public:
  using Element = std::vector<std::uint32_t>;

  GaloisRing(int m, int s);
  int degree() const { return m_; }
  int precision() const { return s_; }

  Element zero() const { return Element(m_, 0); }
  Element one() const;
  Element from_int(std::int64_t v) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// Teichmuller representative of a GF(2^m) element (the unique lift of odd order).
  Element teichmuller(const ExtFieldElement& x) const;
  /// Largest k <= s with every coefficient divisible by 2^k.
  int two_valuation(const Element& a) const;
  /// (a / 2^k) reduced modulo 2; requires two_valuation(a) >= k.
  ExtFieldElement divide_and_reduce(const Element& a, int k) const;

private:
  int m_;
  int s_;
  std::uint32_t mask_;
  std::uint64_t modulus_;
};

}  // namespace blocklab
