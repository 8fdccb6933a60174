#include "blocklab/blockalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/primefield.hpp"

namespace blocklab {

namespace {

using boost::multiprecision::cpp_int;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("analyze_group: " + what);
}

/// Columns y_b with Lambda y_b = e_b for a full-row-rank r x k matrix Lambda.
std::vector<ExtVec> right_inverse(const std::vector<ExtVec>& lambda, int m) {
  const std::size_t r = lambda.size(), k = lambda.empty() ? 0 : lambda[0].size();
  std::vector<ExtVec> rows(r, ExtVec(k + r, ExtFieldElement::zero(m)));
  for (std::size_t i = 0; i < r; ++i) {
    std::copy(lambda[i].begin(), lambda[i].end(), rows[i].begin());
    rows[i][k + i] = ExtFieldElement::one(m);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < r; ++c) {
    std::size_t piv = rank;
    while (piv < r && rows[piv][c].is_zero()) ++piv;
    if (piv == r) continue;
    std::swap(rows[piv], rows[rank]);
    const ExtFieldElement inv = rows[rank][c].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const ExtFieldElement f = rows[i][c];
      for (std::size_t cc = c; cc < k + r; ++cc) rows[i][cc] += f * rows[rank][cc];
    }
    pivots.push_back(c);
    ++rank;
  }
  require(rank == r, "block central characters are linearly dependent");
  std::vector<ExtVec> out(r, ExtVec(k, ExtFieldElement::zero(m)));
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t i = 0; i < r; ++i) out[b][pivots[i]] = rows[i][k + b];
  return out;
}

ExtFieldElement dot(const ExtVec& a, const ExtVec& b) {
  ExtFieldElement s = ExtFieldElement::zero(a.empty() ? 1 : a[0].degree());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

ExtVec frobenius(const ExtVec& v) {
  ExtVec out = v;
  for (auto& x : out) x = x * x;
  return out;
}

int valuation2(std::int64_t x) { return two_valuation(static_cast<std::uint64_t>(x)); }

}  // namespace

IntMatrix gram(const IntMatrix& d) {
  const std::size_t l = d.empty() ? 0 : d[0].size();
  IntMatrix c(l, std::vector<std::int64_t>(l, 0));
  for (const auto& row : d)
    for (std::size_t i = 0; i < l; ++i) {
      if (!row[i]) continue;
      for (std::size_t j = 0; j < l; ++j) c[i][j] += row[i] * row[j];
    }
  return c;
}

cpp_int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& idx) {
  IntMatrix s(idx.size(), std::vector<std::int64_t>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = m[idx[i]][idx[j]];
  return s;
}

IntMatrix cartan_via_weights(const ConjClasses& pcc, const CharacterTable& ptable, const std::vector<int>& fixed_dims) {
  const std::size_t l = ptable.count();
  const auto order = static_cast<std::int64_t>(ptable.group_order);
  IntMatrix c(l, std::vector<std::int64_t>(l, 0));
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = a; b < l; ++b) {
      CyclotomicInteger s(ptable.conductor);
      for (std::size_t k = 0; k < pcc.count(); ++k) {
        const std::int64_t w = static_cast<std::int64_t>(pcc.sizes[k]) << fixed_dims[k];
        s += ptable.values[a][k] * ptable.values[b][k].conj() * w;
      }
      const auto v = s.as_integer();
      if (!v || *v % order != 0) throw std::logic_error("cartan_via_weights: entry is not an integer");
      c[a][b] = c[b][a] = *v / order;
    }
  return c;
}

IntMatrix decomposition_matrix(const CharacterTable& t, const FusionMap& fusion, const CharacterTable& ptable) {
  const PrimeField f(t.ell);
  const ConjClasses& pcc = fusion.target;
  const std::size_t kp = pcc.count();
  const std::uint64_t zp = f.pow(t.zeta, static_cast<std::uint64_t>(t.conductor / ptable.conductor));
  std::vector<std::vector<std::uint64_t>> theta(ptable.count(), std::vector<std::uint64_t>(kp));
  for (std::size_t th = 0; th < ptable.count(); ++th)
    for (std::size_t c = 0; c < kp; ++c) theta[th][c] = ptable.values[th][pcc.inverse_class[c]].evaluate_mod(f, zp);
  const std::uint64_t inv_order = f.inv(ptable.group_order % t.ell);
  IntMatrix d(t.count(), std::vector<std::int64_t>(ptable.count()));
  for (std::size_t chi = 0; chi < t.count(); ++chi) {
    std::vector<std::uint64_t> res(kp);
    for (std::size_t c = 0; c < kp; ++c) res[c] = f.mul(pcc.sizes[c] % t.ell, t.residues[chi][fusion.lift_class[c]]);
    std::int64_t total = 0;
    for (std::size_t th = 0; th < ptable.count(); ++th) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < kp; ++c) s = f.add(s, f.mul(res[c], theta[th][c]));
      const std::uint64_t v = f.mul(s, inv_order);
      if (v > static_cast<std::uint64_t>(t.degrees[chi]))
        throw std::logic_error("decomposition_matrix: multiplicity out of range");
      d[chi][th] = static_cast<std::int64_t>(v);
      total += d[chi][th] * ptable.degrees[th];
    }
    if (total != t.degrees[chi]) throw std::logic_error("decomposition_matrix: degrees do not add up");
  }
  return d;
}

GroupAnalysis analyze_group(const SdpGroup& g, const AnalysisOptions& opt) {
  GroupAnalysis a;
  a.order = g.order();
  a.classes = conjugacy_classes(g);
  a.table = character_table(g, a.classes, opt.seed);
  verify_orthogonality(a.table, a.classes);
  a.fusion = quotient_by_O2(g, a.classes);
  const ConjClasses& pcc = a.fusion.target;
  a.quotient_table = character_table(g.complement(), pcc, opt.seed);
  verify_orthogonality(a.quotient_table, pcc);
  for (std::size_t c = 0; c < pcc.count(); ++c) a.fixed_dims.push_back(fixed_dim(g.action_of(pcc.reps[c])));

  const std::size_t k = a.classes.count(), kp = pcc.count();
  const int n = a.table.conductor;
  const int m = splitting_degree(n);
  a.field_degree = m;
  const Mod2Reduction red(n, m);
  const auto zero = ExtFieldElement::zero(m);
  const auto one = ExtFieldElement::one(m);

  // Block distribution by central characters.
  std::vector<std::vector<ExtFieldElement>> keys;
  for (std::size_t chi = 0; chi < k; ++chi) keys.push_back(block_distribution_key(a.table, a.classes, chi, m));
  const auto parts = partition_by_keys(keys);
  const std::size_t r = parts.size();
  require(parts[0][0] == 0 && a.table.degrees[0] == 1, "trivial character is not first");

  // Route 1: sums of primitive central idempotents of KG, reduced 2-adically.
  const int v2 = two_valuation(a.order);
  std::vector<ExtVec> route1(r, ExtVec(k, zero));
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t c = 0; c < k; ++c) {
      CyclotomicInteger s(n);
      for (std::size_t chi : parts[b]) s += a.table.values[chi][a.classes.inverse_class[c]] * a.table.degrees[chi];
      route1[b][c] = red.reduce_divided(s, v2);
      if (!a.classes.regular[c]) require(route1[b][c].is_zero(), "idempotent not supported on 2-regular classes");
    }

  // Route 2: lift the dual basis of the block central characters by iterated squaring.
  CenterAlgebra z = CenterAlgebra::from_group(g, a.classes);
  std::mt19937_64 rng(opt.seed);
  require(z.spot_check(rng, 2), "center is not commutative and associative");
  std::vector<ExtVec> lambda;
  for (const auto& p : parts) lambda.push_back(keys[p[0]]);
  const auto dual = right_inverse(lambda, m);
  for (std::size_t b = 0; b < r; ++b) {
    ExtVec y = dual[b];
    for (int it = 0;; ++it) {
      ExtVec y2 = z.square(y);
      if (y2 == y) break;
      require(it < 64, "squaring does not converge");
      y = std::move(y2);
    }
    require(y == route1[b], "idempotent routes disagree");
  }

  ExtVec total(k, zero);
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t c = 0; c < k; ++c) total[c] += route1[b][c];
    for (std::size_t b2 = 0; b2 < r; ++b2)
      require(dot(lambda[b2], route1[b]) == (b == b2 ? one : zero), "central characters do not separate idempotents");
  }
  ExtVec unit(k, zero);
  unit[0] = one;
  require(total == unit, "idempotents do not sum to 1");
  if (k <= 160)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t b2 = b + 1; b2 < r; ++b2)
        require(z.mul(route1[b], route1[b2]) == ExtVec(k, zero), "idempotents are not orthogonal");

  const BitSubspace jz = nilradical(z);
  a.nilradical_dim = jz.dim();
  require(a.nilradical_dim + r == k, "dim Z/J differs from the number of blocks");
  for (int mm : {2, 3}) require(nilradical_dim_over(z, mm) == a.nilradical_dim, "nilradical changes under base change");

  // Simple modules: central characters of Irr(P) inflated along G -> P.
  std::vector<ExtVec> lam_theta(kp, ExtVec(k, zero));
  for (std::size_t th = 0; th < kp; ++th) {
    const auto omega = central_character(a.quotient_table, pcc, th);
    std::vector<ExtFieldElement> w;
    for (const auto& x : omega) w.push_back(red.reduce(x.lift_to(n)));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t cp = 0; cp < kp; ++cp)
        if (a.fusion.coefficient(c, cp) & 1u) lam_theta[th][c] += w[cp];
  }

  a.blocks.resize(r);
  for (std::size_t b = 0; b < r; ++b) {
    BlockData& bd = a.blocks[b];
    bd.idempotent = route1[b];
    bd.ordinary = parts[b];
    bd.k = parts[b].size();
    bd.principal = b == 0;
    for (std::size_t chi : parts[b])
      bd.defect = std::max(bd.defect, v2 - valuation2(a.table.degrees[chi]));
  }
  for (std::size_t th = 0; th < kp; ++th) {
    std::size_t owner = r;
    for (std::size_t b = 0; b < r; ++b) {
      const ExtFieldElement v = dot(lam_theta[th], route1[b]);
      require(v.is_zero() || v.is_one(), "simple module central character is not 0/1 on an idempotent");
      if (v.is_one()) {
        require(owner == r, "simple module lies in two blocks");
        owner = b;
      }
    }
    require(owner < r, "simple module lies in no block");
    require(lam_theta[th] == lambda[owner], "simple module central character differs from its block");
    a.blocks[owner].brauer.push_back(th);
  }
  for (auto& bd : a.blocks) bd.l = bd.brauer.size();

  std::size_t regular = 0;
  a.regular_centralizer_product = 1;
  for (std::size_t c = 0; c < k; ++c)
    if (a.classes.regular[c]) {
      ++regular;
      a.regular_centralizer_product *= two_part(a.order / a.classes.sizes[c]);
    }
  require(regular == kp, "2-regular classes of G and classes of P differ in number");

  a.decomposition = decomposition_matrix(a.table, a.fusion, a.quotient_table);
  std::vector<std::size_t> block_of_chi(k), block_of_theta(kp);
  for (std::size_t b = 0; b < r; ++b) {
    for (auto chi : a.blocks[b].ordinary) block_of_chi[chi] = b;
    for (auto th : a.blocks[b].brauer) block_of_theta[th] = b;
  }
  for (std::size_t chi = 0; chi < k; ++chi)
    for (std::size_t th = 0; th < kp; ++th)
      if (a.decomposition[chi][th]) require(block_of_chi[chi] == block_of_theta[th], "decomposition crosses blocks");
  a.cartan = gram(a.decomposition);
  a.cartan_weights = cartan_via_weights(pcc, a.quotient_table, a.fixed_dims);
  a.cartan_det = determinant(a.cartan);
  for (auto& bd : a.blocks) bd.cartan = submatrix(a.cartan, bd.brauer);

  if (opt.center_filtration) {
    const auto powers = radical_powers(z);
    a.loewy = loewy_vector(powers);
    a.dim_J2 = dim_J2(powers);
    std::vector<bool> done(r, false);
    for (std::size_t b = 0; b < r; ++b) {
      if (done[b]) continue;
      std::vector<std::size_t> orbit{b};
      for (ExtVec e = frobenius(route1[b]); e != route1[b]; e = frobenius(e)) {
        const auto it = std::find(route1.begin(), route1.end(), e);
        require(it != route1.end(), "Frobenius image of an idempotent is not an idempotent");
        orbit.push_back(static_cast<std::size_t>(it - route1.begin()));
      }
      BitVec eps(z.words(), 0);
      for (std::size_t c = 0; c < k; ++c) {
        ExtFieldElement s = zero;
        for (auto o : orbit) s += route1[o][c];
        require(s.is_zero() || s.is_one(), "orbit sum is not defined over GF(2)");
        if (s.is_one()) bitvec_flip(eps, c);
      }
      const auto restricted = restrict_powers(z, powers, eps);
      const auto layers = loewy_vector(restricted);
      std::vector<std::size_t> per;
      for (auto d : layers) {
        require(d % orbit.size() == 0, "orbit filtration not divisible by orbit size");
        per.push_back(d / orbit.size());
      }
      const std::size_t j2 = dim_J2(restricted);
      require(j2 % orbit.size() == 0, "orbit J^2 not divisible by orbit size");
      for (auto o : orbit) {
        done[o] = true;
        a.blocks[o].galois_orbit = orbit.size();
        a.blocks[o].loewy = per;
        a.blocks[o].dim_J2 = j2 / orbit.size();
      }
    }
  }
  return a;
}

InvariantRecord make_record(const std::string& label, const GroupAnalysis& a) {
  InvariantRecord rec;
  rec.label = label;
  rec.order = a.order;
  rec.k = a.classes.count();
  rec.l = a.quotient_table.count();
  rec.cartan = a.cartan;
  rec.cartan_weights = a.cartan_weights;
  rec.cartan_det = a.cartan_det.str();
  rec.regular_centralizer_product = a.regular_centralizer_product.str();
  const auto cf = canonical_form(a.cartan);
  rec.cartan_canonical = cf.matrix;
  rec.cartan_hash = matrix_hash(cf.matrix);
  rec.loewy = a.loewy;
  rec.dim_J2 = a.dim_J2;
  std::map<IntMatrix, IntMatrix> cache;
  for (const auto& bd : a.blocks) {
    InvariantRecord::Block b;
    b.k = bd.k;
    b.l = bd.l;
    b.defect = bd.defect;
    b.principal = bd.principal;
    b.galois_orbit = bd.galois_orbit;
    b.loewy = bd.loewy;
    b.dim_J2 = bd.dim_J2;
    auto it = cache.find(bd.cartan);
    if (it == cache.end()) it = cache.emplace(bd.cartan, canonical_form(bd.cartan).matrix).first;
    b.cartan_canonical = it->second;
    b.cartan_hash = matrix_hash(b.cartan_canonical);
    rec.blocks.push_back(std::move(b));
  }
  return rec;
}

InvariantRecord invariant_record(const CatalogueEntry& e) {
  const SdpGroup g = SdpGroup::from_matrix_group(e.group, e.label);
  const GroupAnalysis a = analyze_group(g);
  const std::size_t kE = a.fusion.target.count();
  if (a.blocks[0].l != kE) throw std::logic_error("invariant_record: l differs from k(E) for " + e.label);
  return make_record(e.label, a);
}

nlohmann::json to_json(const InvariantRecord& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["k"] = r.k;
  j["l"] = r.l;
  j["cartan"] = r.cartan;
  j["cartan_weights"] = r.cartan_weights;
  j["cartan_det"] = r.cartan_det;
  j["regular_centralizer_product"] = r.regular_centralizer_product;
  j["cartan_canonical"] = r.cartan_canonical;
  j["cartan_canonical_hash"] = r.cartan_hash;
  j["loewy_Z"] = r.loewy;
  j["dim_J2_Z"] = r.dim_J2;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : r.blocks) {
    nlohmann::json bj;
    bj["k_b"] = b.k;
    bj["l_b"] = b.l;
    bj["defect"] = b.defect;
    bj["principal"] = b.principal;
    bj["galois_orbit"] = b.galois_orbit;
    bj["loewy_Z"] = b.loewy;
    bj["dim_J2_Z"] = b.dim_J2;
    bj["cartan_canonical"] = b.cartan_canonical;
    bj["cartan_canonical_hash"] = b.cartan_hash;
    j["blocks"].push_back(bj);
  }
  return j;
}

InvariantRecord record_from_json(const nlohmann::json& j) {
  InvariantRecord r;
  r.label = j.at("label").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.k = j.at("k").get<std::size_t>();
  r.l = j.at("l").get<std::size_t>();
  r.cartan = j.at("cartan").get<IntMatrix>();
  r.cartan_weights = j.at("cartan_weights").get<IntMatrix>();
  r.cartan_det = j.at("cartan_det").get<std::string>();
  r.regular_centralizer_product = j.at("regular_centralizer_product").get<std::string>();
  r.cartan_canonical = j.at("cartan_canonical").get<IntMatrix>();
  r.cartan_hash = j.at("cartan_canonical_hash").get<std::string>();
  r.loewy = j.at("loewy_Z").get<std::vector<std::size_t>>();
  r.dim_J2 = j.at("dim_J2_Z").get<std::size_t>();
  for (const auto& bj : j.at("blocks")) {
    InvariantRecord::Block b;
    b.k = bj.at("k_b").get<std::size_t>();
    b.l = bj.at("l_b").get<std::size_t>();
    b.defect = bj.at("defect").get<int>();
    b.principal = bj.at("principal").get<bool>();
    b.galois_orbit = bj.at("galois_orbit").get<std::size_t>();
    b.loewy = bj.at("loewy_Z").get<std::vector<std::size_t>>();
    b.dim_J2 = bj.at("dim_J2_Z").get<std::size_t>();
    b.cartan_canonical = bj.at("cartan_canonical").get<IntMatrix>();
    b.cartan_hash = bj.at("cartan_canonical_hash").get<std::string>();
    r.blocks.push_back(std::move(b));
  }
  return r;
}

}  // namespace blocklab
