#include "blocklab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "blocklab/primefield.hpp"

namespace blocklab {

namespace {

std::uint64_t isqrt_exact(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

// Weighted sum over classes of X[i][k] built from a random combination of class matrices.
PrimeFieldMatrix random_class_combination(const Group& g, const ConjClasses& cc, const PrimeField& f,
                                          std::mt19937_64& rng) {
  const std::size_t k = cc.count();
  std::uniform_int_distribution<std::uint64_t> dist(1, f.modulus() - 1);
  std::vector<std::uint64_t> c(k);
  for (auto& x : c) x = dist(rng);
  std::vector<std::uint64_t> acc(k * k, 0);
  std::vector<std::uint64_t> per_elem(g.order());
  for (Elem x = 0; x < g.order(); ++x) per_elem[x] = c[cc.class_of[x]];
  for (std::size_t col = 0; col < k; ++col) {
    const Elem z = cc.reps[col];
    for (Elem x = 0; x < g.order(); ++x) {
      const std::size_t i = cc.class_of[g.mul(g.inv(x), z)];
      acc[i * k + col] += per_elem[x];
    }
  }
  PrimeFieldMatrix m(f.modulus(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = acc[i * k + j] % f.modulus();
  return m;
}

// Right eigenvectors of X via a Krylov basis; empty if the attempt is degenerate.
std::vector<std::vector<std::uint64_t>> krylov_eigenvectors(const PrimeFieldMatrix& x, const PrimeField& f,
                                                            std::mt19937_64& rng) {
  const std::size_t k = x.rows();
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  std::vector<std::vector<std::uint64_t>> kry(k + 1, std::vector<std::uint64_t>(k));
  for (auto& v : kry[0]) v = dist(rng);
  for (std::size_t t = 0; t < k; ++t) {
    const auto& v = kry[t];
    auto& w = kry[t + 1];
    // entries are below 2^27, so 256 products fit in 64 bits
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j0 = 0; j0 < k; j0 += 256) {
        std::uint64_t part = 0;
        const std::size_t j1 = std::min(k, j0 + 256);
        for (std::size_t j = j0; j < j1; ++j) part += x.at(i, j) * v[j];
        s = f.add(s, part % f.modulus());
      }
      w[i] = s;
    }
  }
  PrimeFieldMatrix a(f.modulus(), k, k), b(f.modulus(), k, 1);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < k; ++i) a.at(i, t) = kry[t][i];
  for (std::size_t i = 0; i < k; ++i) b.at(i, 0) = kry[k][i];
  PrimeFieldMatrix c(f.modulus(), k, 1);
  try {
    c = solve_mod(a, b);
  } catch (const std::domain_error&) {
    return {};
  }
  polymod::Poly poly(k + 1);
  for (std::size_t t = 0; t < k; ++t) poly[t] = f.neg(c.at(t, 0));
  poly[k] = 1;
  const auto roots = polymod::roots(f, poly, rng);
  if (roots.size() != k) return {};
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> q(k);
  for (std::uint64_t lambda : roots) {
    q[k - 1] = 1;
    for (std::size_t t = k - 1; t > 0; --t) q[t - 1] = f.add(poly[t], f.mul(lambda, q[t]));
    std::vector<std::uint64_t> w(k, 0);
    for (std::size_t t = 0; t < k; ++t) {
      if (q[t] == 0) continue;
      for (std::size_t i = 0; i < k; ++i) w[i] = f.add(w[i], f.mul(q[t], kry[t][i]));
    }
    if (w[0] == 0) return {};
    const std::uint64_t inv0 = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, inv0);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::size_t k_of(const ConjClasses& cc) { return cc.count(); }

CharacterTable character_table(const Group& g, const ConjClasses& cc, std::uint64_t seed) {
  const std::size_t k = cc.count();
  const std::uint64_t order = g.order();
  CharacterTable t;
  t.group_order = order;
  t.conductor = static_cast<int>(cc.exponent);
  const std::uint64_t n = cc.exponent;
  t.ell = smallest_prime_one_mod(n, std::max<std::uint64_t>(2 * order + 1, std::uint64_t{1} << 26));
  if (t.ell >= (std::uint64_t{1} << 27)) throw std::runtime_error("character_table: exponent too large");
  const PrimeField f(t.ell);
  t.zeta = f.root_of_unity(n);
  std::mt19937_64 rng(seed);

  std::vector<std::vector<std::uint64_t>> omegas;
  if (k == 1) {
    omegas.push_back({1});
  } else {
    for (int attempt = 0; attempt < 30 && omegas.empty(); ++attempt)
      omegas = krylov_eigenvectors(random_class_combination(g, cc, f, rng), f, rng);
    if (omegas.empty()) throw std::runtime_error("character_table: no separating combination found");
  }

  const auto seqs = power_sequences(g, cc);
  struct Row {
    std::int64_t degree;
    bool trivial;
    std::vector<CyclotomicInteger> values;
    std::vector<std::uint64_t> residues;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = f.add(s, f.mul(f.mul(w[i], w[cc.inverse_class[i]]), f.inv(cc.sizes[i] % t.ell)));
    if (s == 0) throw std::logic_error("character_table: degenerate eigenvector");
    const std::uint64_t d2 = f.mul(order % t.ell, f.inv(s));
    const std::uint64_t d = isqrt_exact(d2);
    if (d == 0 || d2 > order || order % d != 0) throw std::logic_error("character_table: degree is not a divisor");
    Row row{static_cast<std::int64_t>(d), true, {}, {}};
    row.residues.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      row.residues[i] = f.mul(f.mul(d % t.ell, w[i]), f.inv(cc.sizes[i] % t.ell));
      if (row.residues[i] != 1) row.trivial = false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t o = cc.rep_orders[i];
      const std::uint64_t zo = f.pow(t.zeta, n / o);
      const std::uint64_t zinv = f.inv(zo);
      const std::uint64_t inv_o = f.inv(o % t.ell);
      std::vector<std::int64_t> mults(n, 0);
      std::int64_t total = 0;
      for (std::uint64_t sidx = 0; sidx < o; ++sidx) {
        const std::uint64_t step = f.pow(zinv, sidx);
        std::uint64_t acc = 0, pw = 1;
        for (std::uint64_t r = 0; r < o; ++r) {
          acc = f.add(acc, f.mul(row.residues[seqs[i][r]], pw));
          pw = f.mul(pw, step);
        }
        const std::uint64_t m = f.mul(acc, inv_o);
        if (m > d) throw std::logic_error("character_table: eigenvalue multiplicity out of range");
        mults[sidx * (n / o)] = static_cast<std::int64_t>(m);
        total += static_cast<std::int64_t>(m);
      }
      if (total != row.degree) throw std::logic_error("character_table: multiplicities do not sum to the degree");
      row.values.emplace_back(static_cast<int>(n), std::move(mults));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.trivial != b.trivial) return a.trivial;
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (a.values[i].mults() != b.values[i].mults()) return a.values[i].mults() < b.values[i].mults();
    return false;
  });
  for (auto& r : rows) {
    t.degrees.push_back(r.degree);
    t.values.push_back(std::move(r.values));
    t.residues.push_back(std::move(r.residues));
  }
  return t;
}

void verify_orthogonality(const CharacterTable& t, const ConjClasses& cc) {
  const std::size_t k = cc.count();
  if (t.count() != k) throw std::logic_error("orthogonality: table is not square");
  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees) {
    if (t.group_order % static_cast<std::uint64_t>(d) != 0) throw std::logic_error("orthogonality: degree does not divide |G|");
    sum_sq += static_cast<std::uint64_t>(d * d);
  }
  if (sum_sq != t.group_order) throw std::logic_error("orthogonality: sum of squared degrees differs from |G|");
  // Multiplicity vectors are nonnegative with sum chi(1); residues must match the exact values.
  const PrimeField f(t.ell);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t total = 0;
      for (auto m : t.values[c][i].mults()) {
        if (m < 0) throw std::logic_error("orthogonality: negative multiplicity");
        total += m;
      }
      if (total != t.degrees[c] || t.values[c][i].evaluate_mod(f, t.zeta) != t.residues[c][i])
        throw std::logic_error("orthogonality: exact values inconsistent with residues");
    }
  // Column relations mod ell; with ell > 2|G| and Galois stability of the table this is exact.
  const std::uint64_t p = t.ell;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t binv = cc.inverse_class[b];
      unsigned __int128 s = 0;
      for (std::size_t c = 0; c < k; ++c) s += static_cast<unsigned __int128>(t.residues[c][a]) * t.residues[c][binv];
      const std::uint64_t expect = a == b ? (t.group_order / cc.sizes[a]) % p : 0;
      if (static_cast<std::uint64_t>(s % p) != expect) throw std::logic_error("orthogonality: column relation fails");
    }
  // Row relations.
  for (std::size_t c1 = 0; c1 < k; ++c1)
    for (std::size_t c2 = c1; c2 < k; ++c2) {
      unsigned __int128 s = 0;
      for (std::size_t i = 0; i < k; ++i)
        s += static_cast<unsigned __int128>(cc.sizes[i] % p) * f.mul(t.residues[c1][i], t.residues[c2][cc.inverse_class[i]]);
      const std::uint64_t expect = c1 == c2 ? t.group_order % p : 0;
      if (static_cast<std::uint64_t>(s % p) != expect) throw std::logic_error("orthogonality: row relation fails");
    }
}

std::vector<CyclotomicInteger> central_character(const CharacterTable& t, const ConjClasses& cc, std::size_t chi) {
  std::vector<CyclotomicInteger> out;
  out.reserve(cc.count());
  for (std::size_t i = 0; i < cc.count(); ++i) {
    auto q = (t.values[chi][i] * static_cast<std::int64_t>(cc.sizes[i])).divide_exact(t.degrees[chi]);
    if (!q) throw std::logic_error("central_character: value is not integral");
    out.push_back(std::move(*q));
  }
  return out;
}

std::vector<ExtFieldElement> block_distribution_key(const CharacterTable& t, const ConjClasses& cc, std::size_t chi,
                                                    int m) {
  const Mod2Reduction red(t.conductor, m);
  std::vector<ExtFieldElement> key;
  for (const auto& w : central_character(t, cc, chi)) key.push_back(red.reduce(w));
  return key;
}

std::vector<std::vector<std::size_t>> partition_by_keys(const std::vector<std::vector<ExtFieldElement>>& keys) {
  std::map<std::vector<ExtFieldElement>, std::size_t> index;
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t c = 0; c < keys.size(); ++c) {
    auto [it, fresh] = index.emplace(keys[c], parts.size());
    if (fresh) parts.emplace_back();
    parts[it->second].push_back(c);
  }
  return parts;
}

}  // namespace blocklab
