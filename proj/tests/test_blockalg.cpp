#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blocklab/blockalg.hpp"
#include "blocklab/canonical.hpp"
#include "blocklab/catalogue.hpp"
#include "blocklab/center.hpp"

using namespace blocklab;

namespace {

SdpGroup sdp(int n, Gf2Poly poly) { return SdpGroup::from_matrix_group(MatGroupGF2::close(n, {BitMatrix::companion(poly)})); }

// Center of F_2 G from raw element products; elements are bitmasks over classes.
struct NaiveCenter {
  std::size_t k;
  std::vector<std::uint32_t> table;  // table[i*k+j] = K_i K_j

  explicit NaiveCenter(const Group& g, const ConjClasses& cc) : k(cc.count()), table(k * k, 0) {
    std::vector<std::vector<Elem>> members(k);
    for (Elem x = 0; x < g.order(); ++x) members[cc.class_of[x]].push_back(x);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < k; ++c) {
          std::size_t hits = 0;
          for (Elem x : members[i])
            for (Elem y : members[j]) hits += g.mul(x, y) == cc.reps[c];
          if (hits & 1) table[i * k + j] |= 1u << c;
        }
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if ((a >> i & 1) && (b >> j & 1)) r ^= table[i * k + j];
    return r;
  }
};

std::vector<std::uint32_t> span_basis(std::vector<std::uint32_t> v) {
  std::size_t rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(v.begin() + rank, v.end(), [&](auto x) { return x >> bit & 1; });
    if (it == v.end()) continue;
    std::swap(*it, v[rank]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != rank && (v[i] >> bit & 1)) v[i] ^= v[rank];
    ++rank;
  }
  v.resize(rank);
  return v;
}

// Loewy layers of Z: J is the set of nilpotent elements, J^(i+1) spanned by products J^i J.
std::vector<std::size_t> naive_loewy(const NaiveCenter& z) {
  std::vector<std::uint32_t> nil;
  for (std::uint32_t v = 1; v < (1u << z.k); ++v) {
    std::uint32_t p = v;
    for (std::size_t i = 0; i < 5 && p; ++i) p = z.mul(p, p);
    if (!p) nil.push_back(v);
  }
  const auto j = span_basis(nil);
  CHECK(nil.size() + 1 == (std::size_t{1} << j.size()));  // nilpotents form a subspace
  std::vector<std::size_t> dims{z.k, j.size()};
  std::vector<std::uint32_t> cur = j;
  while (!cur.empty()) {
    std::vector<std::uint32_t> next;
    for (auto a : cur)
      for (auto b : j) next.push_back(z.mul(a, b));
    cur = span_basis(next);
    dims.push_back(cur.size());
  }
  std::vector<std::size_t> layers;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) layers.push_back(dims[i] - dims[i + 1]);
  return layers;
}

IntMatrix permute(const IntMatrix& m, const std::vector<std::size_t>& p) {
  IntMatrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[p[i]][p[j]];
  return out;
}

}  // namespace

TEST_CASE("A4: one block, three simple modules") {
  const GroupAnalysis a = analyze_group(sdp(2, 0b111));
  CHECK(a.classes.count() == 4);
  REQUIRE(a.blocks.size() == 1);
  CHECK(a.blocks[0].principal);
  CHECK(a.blocks[0].k == 4);
  CHECK(a.blocks[0].l == 3);
  CHECK(a.blocks[0].defect == 2);
  const IntMatrix c{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  CHECK(a.cartan == c);
  CHECK(a.cartan_weights == c);
  CHECK(a.cartan_det == 4);
  CHECK(a.regular_centralizer_product == 4);
  for (std::size_t chi = 0; chi < 4; ++chi) {
    std::int64_t s = 0;
    for (auto d : a.decomposition[chi]) s += d;
    CHECK(s == a.table.degrees[chi]);  // Brauer characters of P are linear
  }
}

TEST_CASE("center filtration against enumeration of nilpotents") {
  for (auto [n, poly] : {std::pair{2, Gf2Poly{0b111}}, std::pair{4, Gf2Poly{0b10011}}, std::pair{4, Gf2Poly{0b11111}},
                         std::pair{3, Gf2Poly{0b1011}}}) {
    const SdpGroup g = sdp(n, poly);
    const ConjClasses cc = conjugacy_classes(g);
    REQUIRE(cc.count() <= 16);
    const NaiveCenter naive(g, cc);
    const CenterAlgebra z = CenterAlgebra::from_group(g, cc);
    const auto powers = radical_powers(z);
    CHECK(loewy_vector(powers) == naive_loewy(naive));
    const GroupAnalysis a = analyze_group(g);
    CHECK(a.loewy == naive_loewy(naive));
    CHECK(a.nilradical_dim + a.blocks.size() == cc.count());
  }
}

TEST_CASE("Cartan matrices of small catalogue products") {
  const auto& cat = catalogue();
  {
    const GroupAnalysis a = analyze_group(SdpGroup::from_matrix_group(find_entry(cat, "{1}")->group));
    CHECK(a.cartan == IntMatrix{{64}});
    CHECK(a.blocks.size() == 1);
    CHECK(a.blocks[0].k == 64);
  }
  {
    const GroupAnalysis a = analyze_group(SdpGroup::from_matrix_group(find_entry(cat, "(C3)_1")->group));
    CHECK(a.cartan == IntMatrix{{32, 16, 16}, {16, 32, 16}, {16, 16, 32}});
    CHECK(a.cartan_det == 16384);
  }
  {
    AnalysisOptions opt;
    opt.center_filtration = false;
    const GroupAnalysis a = analyze_group(SdpGroup::from_matrix_group(find_entry(cat, "C63")->group), opt);
    CHECK(a.blocks[0].l == 63);
    CHECK(a.classes.count() == 64);
    CHECK(a.cartan_det == 64);  // det(I + J) for 63 x 63
    for (std::size_t i = 0; i < 63; ++i)
      for (std::size_t j = 0; j < 63; ++j) CHECK(a.cartan[i][j] == (i == j ? 2 : 1));
  }
}

TEST_CASE("determinant by elimination") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}) == -30);
}

TEST_CASE("canonical form is invariant under simultaneous permutation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = static_cast<std::int64_t>(rng() % 3);
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    const auto a = canonical_form(m), b = canonical_form(permute(m, p));
    CHECK(a.matrix == b.matrix);
    CHECK(permute(m, a.order) == a.matrix);
    CHECK(matrix_hash(a.matrix) == matrix_hash(b.matrix));
  }
  // same multiset of entries, different graphs
  const IntMatrix path{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  const IntMatrix star{{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}};
  CHECK(canonical_form(path).matrix != canonical_form(star).matrix);
}

TEST_CASE("invariant record JSON round trip") {
  const InvariantRecord r = invariant_record(*find_entry(catalogue(), "(C3)_2"));
  CHECK(r.blocks.size() == 1);
  CHECK(r.l == 3);
  const InvariantRecord s = record_from_json(to_json(r));
  CHECK(to_json(s).dump() == to_json(r).dump());
}
