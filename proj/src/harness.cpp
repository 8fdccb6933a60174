#include "blocklab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "blocklab/subenum.hpp"

namespace blocklab {

namespace fs = std::filesystem;

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void add(VerificationReport& r, std::string id, std::string desc, std::string expected, std::string computed,
         std::string basis, bool pass) {
  r.checks.push_back({std::move(id), std::move(desc), std::move(expected), std::move(computed), std::move(basis), pass});
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const CatalogueEntry& entry(const std::string& label) {
  const CatalogueEntry* e = find_entry(catalogue(), label);
  if (!e) throw std::logic_error("unknown catalogue label " + label);
  return *e;
}

std::string generator_payload(const CatalogueEntry& e) {
  std::string s;
  for (const auto& g : e.generators) s += join(g.to_rows(), "/") + ";";
  return s;
}

std::vector<const InvariantRecord::Block*> nonprincipal(const InvariantRecord& r) {
  std::vector<const InvariantRecord::Block*> out;
  for (const auto& b : r.blocks)
    if (!b.principal) out.push_back(&b);
  return out;
}

std::string profile(const std::vector<const InvariantRecord::Block*>& blocks) {
  std::vector<std::string> parts;
  for (const auto* b : blocks) parts.push_back("(" + std::to_string(b->k) + "," + std::to_string(b->l) + ")");
  return parts.empty() ? "none" : join(parts, " ");
}

MatGroupGF2 cyclic(const BitMatrix& g) { return MatGroupGF2::close(6, {g}); }

BitMatrix sum(std::initializer_list<BitMatrix> parts) {
  BitMatrix m;
  for (const auto& p : parts) m = m.rows() == 0 ? p : BitMatrix::direct_sum(m, p);
  return m;
}

bool is_abelian(const MatGroupGF2& h) {
  for (const auto& x : h.generators())
    for (const auto& y : h.generators())
      if (x * y != y * x) return false;
  return true;
}

}  // namespace

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json VerificationReport::to_json(bool with_time) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"basis", c.basis},
                           {"pass", c.pass}});
  if (with_time) j["seconds"] = seconds;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << " [expected " << c.expected
       << ", computed " << c.computed << ", " << c.basis << "]\n";
  os << suite << ": " << (checks.size() - failures()) << "/" << checks.size() << " checks passed\n";
  return os.str();
}

const std::string& code_version() {
  static const std::string v = "blocklab-0.3";
  return v;
}

RecordCache::RecordCache(std::string dir) : dir_(std::move(dir)) {
  if (enabled()) fs::create_directories(dir_);
}

std::string RecordCache::key(const std::string& label, const std::string& payload) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv(code_version() + "\n" + label + "\n" + payload)));
  return buf;
}

std::optional<InvariantRecord> RecordCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(fs::path(dir_) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return record_from_json(nlohmann::json::parse(in));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void RecordCache::store(const std::string& key, const InvariantRecord& rec) const {
  if (!enabled()) return;
  const fs::path final_path = fs::path(dir_) / (key + ".json");
  const fs::path tmp = fs::path(dir_) / (key + ".json.tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp);
    out << to_json(rec).dump(1) << "\n";
  }
  fs::rename(tmp, final_path);
}

InvariantRecord record_for_spec(const GroupSpec& spec, const RecordCache& cache) {
  const std::string key = RecordCache::key(spec.name, group_spec_to_json(spec).dump());
  if (auto r = cache.load(key)) return *r;
  const SdpGroup g = build_group(spec);
  InvariantRecord rec = make_record(spec.name, analyze_group(g));
  cache.store(key, rec);
  return rec;
}

Harness::Harness(HarnessOptions opt) : opt_(std::move(opt)), cache_(opt_.cache_dir) {}

const std::vector<InvariantRecord>& Harness::catalogue_records() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!catalogue_.empty()) return catalogue_;
  const auto& cat = catalogue();
  std::vector<InvariantRecord> out(cat.size());
  std::vector<std::string> errors(cat.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cat.size(); i = next++) {
      try {
        const std::string key = RecordCache::key(cat[i].label, generator_payload(cat[i]));
        if (auto r = cache_.load(key)) {
          out[i] = std::move(*r);
          continue;
        }
        out[i] = invariant_record(cat[i]);
        cache_.store(key, out[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, opt_.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  catalogue_ = std::move(out);
  return catalogue_;
}

const InvariantRecord& Harness::catalogue_record(const std::string& label) {
  const CatalogueEntry* e = find_entry(catalogue(), label);
  if (!e) throw std::invalid_argument("unknown catalogue label " + label);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!catalogue_.empty()) return catalogue_[static_cast<std::size_t>(e - catalogue().data())];
    if (auto it = registry_.find("catalogue:" + e->label); it != registry_.end()) return it->second;
  }
  const std::string key = RecordCache::key(e->label, generator_payload(*e));
  InvariantRecord rec;
  if (auto r = cache_.load(key)) {
    rec = std::move(*r);
  } else {
    rec = invariant_record(*e);
    cache_.store(key, rec);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return registry_.emplace("catalogue:" + e->label, std::move(rec)).first->second;
}

const InvariantRecord& Harness::registry_record(const std::string& label) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = registry_.find(label); it != registry_.end()) return it->second;
  }
  const RegistryEntry* e = find_registry_entry(label);
  if (!e) throw std::invalid_argument("unknown group label " + label);
  const std::string key = RecordCache::key(e->label, group_spec_to_json(e->spec).dump());
  InvariantRecord rec;
  if (auto r = cache_.load(key)) {
    rec = std::move(*r);
  } else {
    rec = make_record(e->label, analyze_group(build_registry_group(*e)));
    cache_.store(key, rec);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return registry_.emplace(label, std::move(rec)).first->second;
}

const std::vector<std::string>& Harness::suites() {
  static const std::vector<std::string> s{"lemma-l", "centralizers", "single-block", "distinguish", "fingerprint",
                                          "cartan",  "blocks6",      "tables",       "census",      "diagram"};
  return s;
}

VerificationReport Harness::verify(const std::string& suite) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = suite;
  if (suite == "all") {
    for (const auto& s : suites()) run_suite(s, r);
  } else {
    run_suite(suite, r);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void Harness::run_suite(const std::string& suite, VerificationReport& r) {
  if (suite == "lemma-l") lemma_l(r);
  else if (suite == "centralizers") centralizers(r);
  else if (suite == "single-block") single_block(r);
  else if (suite == "distinguish") distinguish(r);
  else if (suite == "fingerprint") fingerprint(r);
  else if (suite == "cartan") cartan(r);
  else if (suite == "blocks6") blocks6(r);
  else if (suite == "tables") tables(r);
  else if (suite == "census") census(r);
  else if (suite == "diagram") diagram(r);
  else throw std::invalid_argument("unknown suite " + suite);
}

void Harness::lemma_l(VerificationReport& r) {
  struct Pair {
    const char* name;
    const char* iso;
    std::size_t l;
  };
  // (C7xC7):2C3 in the published list is the catalogue's (C7xC7):5C3.
  static const Pair pairs[] = {
      {"1", "1", 1},          {"C3", "C3", 3},
      {"C5", "C5", 5},        {"C7", "C7", 7},
      {"C9", "C9", 9},        {"C3xC3", "C3xC3", 9},
      {"C15", "C15", 15},     {"C7:C3", "F21", 5},
      {"C21", "C21", 21},     {"(C3)^3", "(C3)^3", 27},
      {"3^{1+2}_+", "3^{1+2}_+", 11}, {"3^{1+2}_-", "3^{1+2}_-", 11},
      {"C31", "C31", 31},     {"C15xC3", "C15xC3", 45},
      {"C7xC7", "C7xC7", 49}, {"(C7:C3)xC3", "F21xC3", 15},
      {"C7:C9", "C7:C9", 15}, {"C63", "C63", 63},
      {"C3wrC3", "C3wrC3", 17}, {"(C7xC7):2C3", "(C7xC7):5C3", 19},
      {"(C7xC7):4C3", "(C7xC7):4C3", 19}, {"(C7:C3)xC7", "F21xC7", 35},
      {"C31:C5", "C31:C5", 11}, {"C63:C3", "C63:C3", 29},
      {"(C7:C3)^2", "F21^2", 25},
  };
  const auto& recs = catalogue_records();
  const auto& cat = catalogue();
  for (const auto& p : pairs) {
    std::vector<std::string> got;
    bool ok = false, any = false;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat[i].iso_type != p.iso) continue;
      const std::size_t l = recs[i].blocks.at(0).l;
      got.push_back(cat[i].label + ":" + std::to_string(l));
      ok = (any ? ok : true) && l == p.l;
      any = true;
    }
    add(r, std::string("lemma-l.") + p.name, std::string("l of the principal block for E = ") + p.name,
        std::to_string(p.l), got.empty() ? "no entry" : join(got, " "), "stated", any && ok);
  }
}

void Harness::centralizers(VerificationReport& r) {
  auto fixed = [](const std::string& label) { return common_fixed_dim(6, entry(label).generators); };
  auto fixed_check = [&](const std::string& label, int expected) {
    const int d = fixed(label);
    add(r, "centralizers." + label, "|C_D(E)| for " + label, "2^" + std::to_string(expected), "2^" + std::to_string(d),
        "stated", d == expected);
  };
  auto sub_fixed = [&](const std::string& label, std::size_t order) {
    const auto subs = matrix_subgroups_of_order(entry(label).group, order);
    if (subs.size() != 1) return -1;
    return common_fixed_dim(6, subs[0].generators());
  };
  auto equivalent = [&](const std::string& id, const std::string& desc, const MatGroupGF2& a, const MatGroupGF2& b) {
    const bool eq = a.order() == b.order() && subgroup_action_equivalent(a, b);
    add(r, "centralizers." + id, desc, "same action", eq ? "same action" : "different action", "stated", eq);
  };
  auto unique_sub = [&](const std::string& label, std::size_t order, bool abelian_only) {
    std::vector<MatGroupGF2> hits;
    for (auto& h : matrix_subgroups_of_order(entry(label).group, order))
      if (!abelian_only || is_abelian(h)) hits.push_back(std::move(h));
    return hits;
  };

  const BitMatrix s = singer_cycle(6);
  const BitMatrix chi = BitMatrix::companion(0b111);
  const BitMatrix psi = BitMatrix::companion(0b1011);
  const BitMatrix i2 = BitMatrix::identity(2), i4 = BitMatrix::identity(4);

  fixed_check("(C3)_1", 4);
  fixed_check("(C3)_2", 2);
  fixed_check("(C3)_3", 0);
  equivalent("(C3)_3.singer", "(C3)_3 is generated by the 21st power of a Singer cycle", entry("(C3)_3").group,
             cyclic(s.pow(21)));
  fixed_check("(C3xC3)_1", 2);
  {
    // C63:C3 has seven conjugate subgroups C3xC3; "unique" is up to the action
    std::vector<MatGroupGF2> subs;
    for (auto& h : matrix_subgroups_of_order(entry("C63:C3").group, 9))
      if (std::none_of(h.elements().begin(), h.elements().end(), [](const BitMatrix& x) { return matrix_order(x) == 9; }))
        subs.push_back(std::move(h));
    std::size_t classes = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      bool fresh = true;
      for (std::size_t j = 0; j < i && fresh; ++j) fresh = !subgroup_action_equivalent(subs[j], subs[i]);
      classes += fresh;
    }
    add(r, "centralizers.C63:C3.C3xC3", "subgroups C3xC3 of C63:C3 form one class", "1 class",
        std::to_string(classes) + " class(es) of " + std::to_string(subs.size()), "stated", classes == 1);
    if (classes == 1)
      equivalent("(C3xC3)_2.in-C63:C3", "(C3xC3)_2 acts as the C3xC3 inside C63:C3", entry("(C3xC3)_2").group, subs[0]);
  }
  equivalent("(C3xC3)_3.product", "(C3xC3)_3 acts as in ((C2)^4 x| C3) x ((C2)^2 x| C3) with free factors",
             entry("(C3xC3)_3").group, MatGroupGF2::close(6, {sum({chi, chi, i2}), sum({i4, chi})}));
  fixed_check("(C7)_1", 3);
  equivalent("(C7)_2.singer", "(C7)_2 is generated by the 9th power of a Singer cycle", entry("(C7)_2").group,
             cyclic(s.pow(9)));
  equivalent("(C7)_3.mixed", "(C7)_3 acts as y on one (C2)^3 and y^3 on the other", entry("(C7)_3").group,
             cyclic(BitMatrix::direct_sum(psi, psi.pow(3))));
  fixed_check("(C7)_3", 0);
  fixed_check("(C15)_1", 0);
  {
    const int d = sub_fixed("(C15)_1", 3);
    add(r, "centralizers.(C15)_1.C3", "C_D(C3) for the C3 in (C15)_1", "2^4", "2^" + std::to_string(d), "stated", d == 4);
  }
  fixed_check("(C15)_2", 2);
  fixed_check("(C15)_3", 0);
  {
    const int d = sub_fixed("(C15)_3", 3);
    add(r, "centralizers.(C15)_3.C3", "C_D(C3) for the C3 in (C15)_3", "2^0", "2^" + std::to_string(d), "stated", d == 0);
  }
  fixed_check("(C21)_1", 3);
  {
    const int d = sub_fixed("(C21)_1", 7);
    add(r, "centralizers.(C21)_1.C7", "C_D(C7) for the C7 in (C21)_1", "2^3", "2^" + std::to_string(d), "oracle", d == 3);
  }
  fixed_check("(C21)_2", 0);
  equivalent("(C21)_2.singer", "(C21)_2 is generated by the 3rd power of a Singer cycle", entry("(C21)_2").group,
             cyclic(s.pow(3)));
  fixed_check("(F21)_1", 3);
  fixed_check("(F21)_2", 1);
  for (const auto& [label, c7] : {std::pair{"(F21)_3", "(C7)_2"}, std::pair{"(F21)_4", "(C7)_3"}}) {
    const auto subs = unique_sub(label, 7, false);
    const bool ok = subs.size() == 1 && subgroup_action_equivalent(entry(c7).group, subs[0]);
    add(r, std::string("centralizers.") + label + ".C7", std::string("the C7 in ") + label + " acts as " + c7, c7,
        ok ? c7 : "other", "stated", ok);
  }
  for (const auto& [label, c21] : {std::pair{"(F21xC3)_1", "(C21)_1"}, std::pair{"(F21xC3)_2", "(C21)_2"}}) {
    const auto subs = unique_sub(label, 21, true);
    const bool ok = subs.size() == 1 && subgroup_action_equivalent(entry(c21).group, subs[0]);
    add(r, std::string("centralizers.") + label + ".C21", std::string("the C21 in ") + label + " acts as " + c21, c21,
        ok ? c21 : "other (" + std::to_string(subs.size()) + " cyclic subgroups)", "stated", ok);
  }
}

void Harness::single_block(VerificationReport& r) {
  const auto& recs = catalogue_records();
  for (const auto& rec : recs)
    add(r, "single-block." + rec.label, "D x| E is a single block", "1", std::to_string(rec.blocks.size()), "stated",
        rec.blocks.size() == 1);
}

void Harness::distinguish(VerificationReport& r) {
  const auto& recs = catalogue_records();
  const auto& cat = catalogue();
  std::map<IntMatrix, std::vector<std::size_t>> by_cartan;
  for (std::size_t i = 0; i < recs.size(); ++i) by_cartan[recs[i].cartan_canonical].push_back(i);
  std::vector<std::vector<std::size_t>> collisions;
  for (const auto& [m, idx] : by_cartan)
    if (idx.size() > 1) collisions.push_back(idx);
  std::sort(collisions.begin(), collisions.end());
  std::vector<std::string> found;
  for (const auto& c : collisions) {
    std::vector<std::string> names;
    for (auto i : c) names.push_back(recs[i].label + "[" + join(cat[i].classification_rows) + "]");
    found.push_back(join(names, "/"));
  }
  const std::set<std::set<std::string>> expected{{"(C7)_2", "(C7)_3"}, {"(F21)_3", "(F21)_4"}};
  std::set<std::set<std::string>> got;
  for (const auto& c : collisions) {
    std::set<std::string> s;
    for (auto i : c) s.insert(recs[i].label);
    got.insert(s);
  }
  add(r, "distinguish.collisions", "Cartan canonical forms coincide for exactly two pairs",
      "(C7)_2/(C7)_3 (F21)_3/(F21)_4", found.empty() ? "none" : join(found, " "), "stated", got == expected);
  for (const auto& pair : expected) {
    const auto& a = catalogue_record(*pair.begin());
    const auto& b = catalogue_record(*pair.rbegin());
    add(r, "distinguish.J2." + a.label + "/" + b.label, "dim J^2(Z) separates " + a.label + " and " + b.label,
        "different", std::to_string(a.dim_J2) + " vs " + std::to_string(b.dim_J2), "stated", a.dim_J2 != b.dim_J2);
  }
}

void Harness::fingerprint(VerificationReport& r) {
  const auto& recs = catalogue_records();
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::vector<std::string>> seen;
  for (const auto& rec : recs) seen[{rec.k, rec.blocks.at(0).l, rec.loewy}].push_back(rec.label);
  std::vector<std::string> dup;
  for (const auto& [key, labels] : seen)
    if (labels.size() > 1) dup.push_back(join(labels, "/"));
  add(r, "fingerprint.distinct", "(k, l, Loewy vector of Z) is distinct across the catalogue",
      std::to_string(recs.size()) + " distinct", std::to_string(seen.size()) + " distinct" + (dup.empty() ? "" : "; " + join(dup, " ")),
      "stated", seen.size() == recs.size());
}

void Harness::cartan(VerificationReport& r) {
  for (const auto& rec : catalogue_records()) {
    add(r, "cartan.methods." + rec.label, "Cartan from fixed-point weights equals D^T D", "equal",
        rec.cartan == rec.cartan_weights ? "equal" : "different", "oracle", rec.cartan == rec.cartan_weights);
    add(r, "cartan.det." + rec.label, "det C equals the product of 2-parts of regular centralizer orders",
        rec.regular_centralizer_product, rec.cartan_det, "oracle", rec.cartan_det == rec.regular_centralizer_product);
  }
}

void Harness::blocks6(VerificationReport& r) {
  auto all_kl = [](const std::vector<const InvariantRecord::Block*>& bs, std::size_t k, std::size_t l) {
    return std::all_of(bs.begin(), bs.end(), [&](const auto* b) { return b->k == k && b->l == l; });
  };
  auto same_cartan = [](const std::vector<const InvariantRecord::Block*>& bs, const IntMatrix& m) {
    return !bs.empty() && std::all_of(bs.begin(), bs.end(), [&](const auto* b) { return b->cartan_canonical == m; });
  };
  {
    const auto& rec = registry_record("c5-heis-ext");
    const auto np = nonprincipal(rec);
    add(r, "blocks6.c5-heis-ext.kl", rec.label + ": nonprincipal blocks", "(24,5) (24,5)", profile(np), "stated",
        np.size() == 2 && all_kl(np, 24, 5));
    const auto& c5 = catalogue_record("C5");
    add(r, "blocks6.c5-heis-ext.cartan", rec.label + ": nonprincipal Cartan equals that of C5", "equal",
        same_cartan(np, c5.cartan_canonical) ? "equal" : "different", "stated", same_cartan(np, c5.cartan_canonical));
  }
  {
    const auto& rec = registry_record("c7-pair-ext");
    const auto np = nonprincipal(rec);
    add(r, "blocks6.c7-pair-ext.kl", rec.label + ": nonprincipal blocks", "6 x (16,1)", profile(np), "stated",
        np.size() == 6 && all_kl(np, 16, 1));
  }
  {
    const auto& rec = registry_record("f21-pair-ext");
    const auto np = nonprincipal(rec);
    bool l7 = np.size() == 2;
    for (const auto* b : np) l7 = l7 && b->l == 7;
    add(r, "blocks6.f21-pair-ext.l", rec.label + ": two nonprincipal blocks with l = 7", "2 x l=7", profile(np), "stated", l7);
    bool fresh = !np.empty();
    std::string clash;
    for (const auto* b : np)
      for (const auto& c : catalogue_records())
        if (c.cartan_canonical == b->cartan_canonical) {
          fresh = false;
          clash = c.label;
        }
    add(r, "blocks6.f21-pair-ext.cartan", rec.label + ": Cartan matrix absent from the catalogue", "new",
        fresh ? "new" : "matches " + clash, "stated", fresh);
  }
  {
    const auto& rec = registry_record("a4-heis-ext");
    const auto np = nonprincipal(rec);
    add(r, "blocks6.a4-heis-ext.kl", rec.label + ": nonprincipal blocks", "(24,1) (24,1)", profile(np), "stated",
        np.size() == 2 && all_kl(np, 24, 1));
  }
  {
    const auto& rec = registry_record("heis-x-klein");
    const auto np = nonprincipal(rec);
    add(r, "blocks6.heis-x-klein.kl", rec.label + ": nonprincipal blocks have k = 32 and one simple module",
        "k=32, l=1", profile(np), "stated", !np.empty() && all_kl(np, 32, 1));
  }
  {
    const auto& rec = registry_record("heis-x-a4");
    const auto np = nonprincipal(rec);
    bool k32 = !np.empty();
    for (const auto* b : np) k32 = k32 && b->k == 32;
    add(r, "blocks6.heis-x-a4.k", rec.label + ": nonprincipal blocks have k = 32", "k=32", profile(np), "stated", k32);
    const auto& c3 = catalogue_record("(C3)_1");
    add(r, "blocks6.heis-x-a4.cartan", rec.label + ": nonprincipal Cartan equals that of (C3)_1", "equal",
        same_cartan(np, c3.cartan_canonical) ? "equal" : "different", "stated", same_cartan(np, c3.cartan_canonical));
  }
  {
    const auto& rec = registry_record("a4-cube-ext");
    const auto np = nonprincipal(rec);
    std::map<std::size_t, std::size_t> count;
    std::map<std::size_t, std::set<IntMatrix>> cartans;
    for (const auto* b : np) {
      ++count[b->k];
      cartans[b->k].insert(b->cartan_canonical);
    }
    std::vector<std::string> prof;
    bool shared = true;
    for (const auto& [k, c] : count) {
      prof.push_back(std::to_string(c) + "x" + std::to_string(k));
      shared = shared && cartans[k].size() == 1;
    }
    const std::map<std::size_t, std::size_t> want{{16, 8}, {24, 12}, {32, 6}};
    add(r, "blocks6.a4-cube-ext.k", rec.label + " (conditional realization): nonprincipal k profile", "8x16 12x24 6x32",
        join(prof, " "), "stated", count == want);
    add(r, "blocks6.a4-cube-ext.cartan", rec.label + " (conditional realization): equal k implies equal Cartan",
        "shared", shared ? "shared" : "differs", "stated", shared);
  }
}

void Harness::tables(VerificationReport& r) {
  AnalysisOptions opt;
  opt.center_filtration = false;
  auto run = [&](const std::string& label, const SdpGroup& g) {
    std::string what = "ok";
    bool ok = true;
    try {
      const GroupAnalysis a = analyze_group(g, opt);
      std::uint64_t sq = 0;
      for (auto d : a.table.degrees) sq += static_cast<std::uint64_t>(d * d);
      if (sq != a.order) ok = false, what = "sum of squares " + std::to_string(sq);
      if (a.table.count() != a.classes.count()) ok = false, what = "table is not square";
      if (ok) what = "k=" + std::to_string(a.classes.count()) + " blocks=" + std::to_string(a.blocks.size());
    } catch (const std::exception& e) {
      ok = false;
      what = e.what();
    }
    add(r, "tables." + label, "orthogonality, integral central characters, keys match idempotents", "consistent", what,
        "oracle", ok);
  };
  for (const auto& e : catalogue()) run(e.label, SdpGroup::from_matrix_group(e.group, e.label));
  for (const auto& e : central_extension_groups()) run(e.label, build_registry_group(e));
}

void Harness::census(VerificationReport& r) {
  auto shapes = [](const std::vector<SubgroupClass>& v) {
    std::vector<std::string> s;
    for (const auto& c : v) s.push_back(c.shape);
    return s;
  };
  auto same = [](const std::vector<SubgroupClass>& a, const std::vector<SubgroupClass>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].order != b[i].order || !(a[i].fingerprint == b[i].fingerprint)) return false;
    return true;
  };
  const auto e2 = enumerate_odd_subgroups(2), b2 = brute_force_odd_subgroups(2);
  const auto e3 = enumerate_odd_subgroups(3), b3 = brute_force_odd_subgroups(3);
  add(r, "census.n2", "odd subgroup classes of GL_2(2)", "1,C3", join(shapes(e2)), "oracle",
      shapes(e2) == std::vector<std::string>{"1", "C3"} && same(e2, b2));
  add(r, "census.n3", "odd subgroup classes of GL_3(2)", "1,C3,C7,C7:C3", join(shapes(e3)), "oracle",
      shapes(e3) == std::vector<std::string>{"1", "C3", "C7", "C7:C3"} && same(e3, b3));
  const auto e4 = enumerate_odd_subgroups(4);
  std::vector<int> dims;
  for (const auto& c : e4)
    if (c.order == 3) dims.push_back(c.fingerprint.global_fixed_dim);
  std::sort(dims.begin(), dims.end());
  add(r, "census.n4.C3", "C3 classes of GL_4(2) by fixed-space dimension", "0,2", join(dims), "oracle",
      dims == std::vector<int>{0, 2});
  const auto v = validate_catalogue_n6(catalogue());
  std::vector<std::string> pairs;
  for (const auto& [a, b] : v.equivalent_pairs) pairs.push_back(a + "~" + b);
  add(r, "census.n6.distinct", "catalogue actions pairwise inequivalent (completeness not checked)",
      std::to_string(catalogue().size()) + " distinct", pairs.empty() ? std::to_string(v.entries) + " distinct" : join(pairs, " "),
      "oracle", v.pass() && v.entries == catalogue().size());
}

void Harness::diagram(VerificationReport& r) {
  const auto& cat = catalogue();
  const auto edges = inclusion_diagram(cat);
  bool solid = false, trivial = false;
  for (const auto& e : edges) {
    if (e.from_label == "(C7)_2" && e.to_label == "(C21)_2" && e.solid) solid = true;
    if (e.from_label == "{1}" || e.to_label == "{1}") trivial = true;
  }
  add(r, "diagram.(C7)_2->(C21)_2", "solid edge (C7)_2 -> (C21)_2", "present", solid ? "present" : "absent", "oracle", solid);
  add(r, "diagram.trivial", "no edge touches the trivial group", "none", trivial ? "present" : "none", "stated", !trivial);
  const std::string dot = diagram_dot(cat, edges);
  // braces balance and edge arrows are counted outside quoted labels
  int depth = 0, closes = 0;
  std::size_t arrows = 0;
  bool quoted = false, balanced = true;
  for (std::size_t i = 0; i < dot.size(); ++i) {
    const char c = dot[i];
    if (quoted) {
      if (c == '\\') ++i;
      else if (c == '"') quoted = false;
      continue;
    }
    if (c == '"') quoted = true;
    else if (c == '{') ++depth;
    else if (c == '}') balanced = balanced && --depth >= 0, ++closes;
    else if (c == '-' && i + 1 < dot.size() && dot[i + 1] == '>') ++arrows;
  }
  const bool well_formed =
      dot.rfind("digraph", 0) == 0 && balanced && !quoted && depth == 0 && closes == 1 && arrows == edges.size();
  add(r, "diagram.dot", "DOT output is well formed", "digraph with " + std::to_string(edges.size()) + " edges",
      well_formed ? "digraph with " + std::to_string(edges.size()) + " edges" : "malformed", "oracle", well_formed);
}

}  // namespace blocklab
