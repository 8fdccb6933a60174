#include <doctest.h>

#include <algorithm>
#include <random>

#include "blocklab/bitmatrix.hpp"
#include "blocklab/cyclotomic.hpp"
#include "blocklab/extfield.hpp"
#include "blocklab/primefield.hpp"

using namespace blocklab;

TEST_CASE("gf2 rank plus nullity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng() % 90, c = 1 + rng() % 90;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, (rng() & 3) == 0);
    const BitMatrix k = kernel_gf2(m);
    CHECK(rank_gf2(m) + k.rows() == c);
    // every kernel row x satisfies m x = 0
    CHECK((m * k.transpose()).is_zero());
  }
}

TEST_CASE("companion matrices and direct sums") {
  const BitMatrix c = BitMatrix::companion(0b1011);  // x^3 + x + 1
  CHECK(c.rows() == 3);
  CHECK(c.pow(7).is_identity());
  CHECK_FALSE(c.is_identity());
  const BitMatrix s = BitMatrix::direct_sum(c, BitMatrix::identity(2));
  CHECK(s.rows() == 5);
  CHECK(s.pow(7).is_identity());
  CHECK(BitMatrix::from_rows(s.to_rows()) == s);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(97);
  for (std::uint64_t a = 1; a < 97; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  const std::uint64_t z = f.root_of_unity(12);
  CHECK(f.pow(z, 12) == 1);
  CHECK(f.pow(z, 6) != 1);
  CHECK(f.pow(z, 4) != 1);
  CHECK(f.lift_signed(96) == -1);
  CHECK(is_prime(smallest_prime_one_mod(30, 1000)));
  CHECK(smallest_prime_one_mod(30, 1000) % 30 == 1);
}

TEST_CASE("polynomial roots mod p") {
  const PrimeField f(101);
  std::mt19937_64 rng(3);
  // (x - 3)(x - 5)(x - 77)
  using polymod::Poly;
  const Poly p = polymod::mul(f, polymod::mul(f, Poly{f.neg(3), 1}, Poly{f.neg(5), 1}), Poly{f.neg(77), 1});
  auto r = polymod::roots(f, p, rng);
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<std::uint64_t>{3, 5, 77});
}

TEST_CASE("extension field GF(2^m)") {
  for (int m = 1; m <= 6; ++m) {
    const auto g = ExtFieldElement::generator(m);
    CHECK(g.order() == (std::uint64_t{1} << m) - 1);
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v) {
      const ExtFieldElement x(m, v);
      CHECK((x * x.inverse()).is_one());
      // Frobenius is additive
      const ExtFieldElement y(m, (v * 5 + 1) % (std::uint64_t{1} << m));
      CHECK((x + y).pow(2) == x.pow(2) + y.pow(2));
    }
  }
  CHECK(multiplicative_order_of_two(7) == 3);
  CHECK(multiplicative_order_of_two(63) == 6);
}

TEST_CASE("cyclotomic integers") {
  const auto z = CyclotomicInteger::root_of_unity(3, 1);
  const auto z2 = CyclotomicInteger::root_of_unity(3, 2);
  CHECK((z + z2).as_integer() == std::optional<std::int64_t>(-1));
  CHECK((z * z2).as_integer() == std::optional<std::int64_t>(1));
  CHECK(z.conj().equals(z2));
  CHECK_FALSE(z.as_integer().has_value());
  const auto w = CyclotomicInteger::root_of_unity(7, 1) + CyclotomicInteger::root_of_unity(7, 2) +
                 CyclotomicInteger::root_of_unity(7, 4);
  // (w)(w*) = 2 for the Gauss period of Q(sqrt(-7))
  CHECK((w * w.conj()).as_integer() == std::optional<std::int64_t>(2));
  CHECK(w.lift_to(21).lift_to(21).equals(w.lift_to(21)));

  const PrimeField f(43);  // 43 = 1 mod 7
  const std::uint64_t r = f.root_of_unity(7);
  CHECK(f.mul(w.evaluate_mod(f, r), w.conj().evaluate_mod(f, r)) == 2);
}

TEST_CASE("reduction mod 2 of cyclotomic integers") {
  CHECK(splitting_degree(3) == 2);
  CHECK(splitting_degree(7) == 3);
  CHECK(splitting_degree(21) == 6);
  const Mod2Reduction red(3, 2);
  CHECK(red.reduce(CyclotomicInteger::integer(3, 2)).is_zero());
  CHECK(red.reduce(CyclotomicInteger::integer(3, 5)).is_one());
  const auto zeta = red.reduce(CyclotomicInteger::root_of_unity(3, 1));
  CHECK(zeta.order() == 3);
  // 6/2 = 3 is odd
  CHECK(red.reduce_divided(CyclotomicInteger::integer(3, 6), 1).is_one());
  CHECK(red.reduce_divided(CyclotomicInteger::integer(3, 12), 1).is_zero());
}
