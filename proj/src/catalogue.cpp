#include "blocklab/catalogue.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "blocklab/primefield.hpp"

namespace blocklab {

namespace {

struct RawEntry {
  const char* label;
  const char* iso_type;
  std::vector<std::string> rows;
  std::uint64_t order;
  std::optional<int> fixed_dim;
  std::vector<std::vector<std::string>> generators;
};

// Generators are rows of 6x6 matrices over GF(2), most significant column first.
const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> raw = {
    {"{1}", "1", {"i"}, 1, 6,
     {}},
    {"(C3)_1", "C3", {"ii", "iii"}, 3, 4,
     {{"010000", "110000", "001000", "000100", "000010", "000001"}}},
    {"(C3)_2", "C3", {"iv"}, 3, 2,
     {{"010000", "110000", "000100", "001100", "000010", "000001"}}},
    {"(C3)_3", "C3", {"v"}, 3, 0,
     {{"111101", "100011", "010001", "101000", "110100", "111010"}}},
    {"C5", "C5", {"vi"}, 5, std::nullopt,
     {{"010000", "011000", "001100", "100100", "000010", "000001"}}},
    {"(C7)_1", "C7", {"vii", "viii"}, 7, 3,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}}},
    {"(C7)_2", "C7", {"ix"}, 7, std::nullopt,
     {{"001100", "001010", "000101", "100010", "110001", "011000"}}},
    {"(C7)_3", "C7", {"x"}, 7, std::nullopt,
     {{"001000", "101000", "010000", "000101", "000111", "000011"}}},
    {"C9", "C9", {"xi"}, 9, std::nullopt,
     {{"000011", "100010", "110001", "011000", "001100", "000110"}}},
    {"(C3xC3)_1", "C3xC3", {"xii", "xiii", "xiv"}, 9, 2,
     {{"010000", "110000", "001000", "000100", "000010", "000001"}, {"100000", "010000", "000100", "001100", "000010", "000001"}}},
    {"(C3xC3)_2", "C3xC3", {"xvii"}, 9, std::nullopt,
     {{"111101", "100011", "010001", "101000", "110100", "111010"}, {"100110", "000010", "001101", "001001", "010011", "000001"}}},
    {"(C3xC3)_3", "C3xC3", {"xv", "xvi"}, 9, std::nullopt,
     {{"010000", "110000", "000100", "001100", "000010", "000001"}, {"100000", "010000", "001000", "000100", "000001", "000011"}}},
    {"(C15)_1", "C15", {"xviii", "xix"}, 15, 0,
     {{"010000", "011000", "001100", "100100", "000001", "000011"}}},
    {"(C15)_2", "C15", {"xx", "xxi"}, 15, 2,
     {{"000100", "100100", "010000", "001000", "000010", "000001"}}},
    {"(C15)_3", "C15", {"xxii"}, 15, 0,
     {{"000100", "100100", "010000", "001000", "000001", "000011"}}},
    {"(C21)_1", "C21", {"xxiii", "xxiv", "xxv", "xxvi"}, 21, std::nullopt,
     {{"001000", "101000", "010000", "000010", "000110", "000001"}}},
    {"(C21)_2", "C21", {"xxvii"}, 21, 0,
     {{"000100", "000110", "000011", "100001", "010000", "001000"}}},
    {"(F21)_1", "F21", {"xxviii", "xxix", "xxx"}, 21, 3,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "001000", "011000", "000100", "000010", "000001"}}},
    {"(F21)_2", "F21", {"xxxi", "xxxii"}, 21, 1,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "001000", "011000", "000010", "000110", "000001"}}},
    {"(F21)_3", "F21", {"xxxiii"}, 21, std::nullopt,
     {{"001100", "001010", "000101", "100010", "110001", "011000"}, {"100110", "000010", "001101", "001001", "010011", "000001"}}},
    {"(F21)_4", "F21", {"xxxiv"}, 21, std::nullopt,
     {{"001000", "101000", "010000", "000101", "000111", "000011"}, {"100000", "001000", "011000", "000100", "000001", "000011"}}},
    {"(C3)^3", "(C3)^3", {"xxxv", "xxxvi", "xxxvii", "xxxviii"}, 27, std::nullopt,
     {{"010000", "110000", "001000", "000100", "000010", "000001"}, {"100000", "010000", "000100", "001100", "000010", "000001"}, {"100000", "010000", "001000", "000100", "000001", "000011"}}},
    {"3^{1+2}_+", "3^{1+2}_+", {"xxxix"}, 27, std::nullopt,
     {{"100000", "010000", "000100", "001100", "000011", "000010"}, {"000010", "000001", "100000", "010000", "001000", "000100"}}},
    {"3^{1+2}_-", "3^{1+2}_-", {"xl"}, 27, std::nullopt,
     {{"100000", "010000", "000100", "001100", "000011", "000010"}, {"000001", "000011", "100000", "010000", "001000", "000100"}}},
    {"C31", "C31", {"xli", "xlii"}, 31, std::nullopt,
     {{"000010", "100000", "010010", "001000", "000100", "000001"}}},
    {"C15xC3", "C15xC3", {"xliii", "xliv", "xlv", "xlvi"}, 45, std::nullopt,
     {{"000100", "100100", "010000", "001000", "000010", "000001"}, {"100000", "010000", "001000", "000100", "000001", "000011"}}},
    {"C7xC7", "C7xC7", {"xlvii", "xlviii", "xlix"}, 49, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000001", "000101", "000010"}}},
    {"C63", "C63", {"l", "li"}, 63, std::nullopt,
     {{"000001", "100001", "010000", "001000", "000100", "000010"}}},
    {"C7:C9", "C7:C9", {"lii"}, 63, std::nullopt,
     {{"001100", "001010", "000101", "100010", "110001", "011000"}, {"001101", "000100", "011010", "010010", "100111", "000010"}}},
    {"(F21xC3)_1", "F21xC3", {"liii", "liv", "lv", "lvi", "lvii", "lviii"}, 63, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "001000", "011000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000010", "000110", "000001"}}},
    {"(F21xC3)_2", "F21xC3", {"lix"}, 63, std::nullopt,
     {{"000100", "000110", "000011", "100001", "010000", "001000"}, {"100110", "000010", "001101", "001001", "010011", "000001"}}},
    {"C3wrC3", "C3wrC3", {"lx", "lxi"}, 81, std::nullopt,
     {{"010000", "110000", "001000", "000100", "000010", "000001"}, {"000010", "000001", "100000", "010000", "001000", "000100"}}},
    {"F21xC7", "F21xC7", {"lxii", "lxiii", "lxiv", "lxv", "lxvi", "lxvii"}, 147, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "001000", "011000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000001", "000101", "000010"}}},
    {"(C7xC7):4C3", "(C7xC7):4C3", {"lxviii", "lxix", "lxx"}, 147, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000001", "000101", "000010"}, {"100000", "001000", "011000", "000100", "000001", "000011"}}},
    {"(C7xC7):5C3", "(C7xC7):5C3", {"lxxi"}, 147, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000001", "000101", "000010"}, {"100000", "001000", "011000", "000100", "000011", "000010"}}},
    {"C31:C5", "C31:C5", {"lxxii", "lxxiii"}, 155, std::nullopt,
     {{"000010", "100000", "010010", "001000", "000100", "000001"}, {"100010", "000100", "010010", "000110", "001000", "000001"}}},
    {"C63:C3", "C63:C3", {"lxxiv", "lxxv"}, 189, std::nullopt,
     {{"000001", "100001", "010000", "001000", "000100", "000010"}, {"100110", "000010", "001101", "001001", "010011", "000001"}}},
    {"(F21)^2", "F21^2", {"lxxvi", "lxxvii", "lxxviii", "lxxix", "lxxx", "lxxxi"}, 441, std::nullopt,
     {{"001000", "101000", "010000", "000100", "000010", "000001"}, {"100000", "001000", "011000", "000100", "000010", "000001"}, {"100000", "010000", "001000", "000001", "000101", "000010"}, {"100000", "010000", "001000", "000100", "000001", "000011"}}},
  };
  return raw;
}

}  // namespace

std::string normalize_label(const std::string& label) {
  std::string out;
  for (char c : label)
    if (c != '(' && c != ')' && c != ' ') out.push_back(c);
  return out;
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> out;
  for (const auto& raw : raw_entries()) {
    CatalogueEntry e;
    e.label = raw.label;
    e.iso_type = raw.iso_type;
    e.classification_rows = raw.rows;
    e.expected_order = raw.order;
    e.expected_fixed_dim = raw.fixed_dim;
    for (const auto& g : raw.generators) e.generators.push_back(BitMatrix::from_rows(g));
    e.group = MatGroupGF2::close(6, e.generators, e.label);
    if (e.group.order() != e.expected_order) throw std::runtime_error("catalogue entry " + e.label + ": wrong order");
    if (!is_faithful_odd(e.group)) throw std::runtime_error("catalogue entry " + e.label + ": not faithful of odd order");
    if (e.expected_fixed_dim && common_fixed_dim(6, e.generators) != *e.expected_fixed_dim)
      throw std::runtime_error("catalogue entry " + e.label + ": fixed space dimension mismatch");
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> cat = build_catalogue();
  return cat;
}

const CatalogueEntry* find_entry(const std::vector<CatalogueEntry>& cat, const std::string& label) {
  for (const auto& e : cat)
    if (e.label == label) return &e;
  const std::string key = normalize_label(label);
  for (const auto& e : cat)
    if (normalize_label(e.label) == key) return &e;
  return nullptr;
}

std::vector<MatGroupGF2> matrix_subgroups_of_order(const MatGroupGF2& k, std::size_t order) {
  std::vector<MatGroupGF2> out;
  for (const auto& s : subgroups_of_order(k.abstract(), order)) {
    std::vector<BitMatrix> gens;
    for (Elem g : s.gens) gens.push_back(k.elements()[g]);
    out.push_back(MatGroupGF2::close(k.dim(), std::move(gens)));
  }
  return out;
}

std::vector<DiagramEdge> inclusion_diagram(const std::vector<CatalogueEntry>& cat) {
  std::vector<DiagramEdge> edges;
  std::vector<ActionInvariant> inv;
  for (const auto& e : cat) inv.push_back(action_invariants(e.group));
  for (std::size_t ki = 0; ki < cat.size(); ++ki) {
    const MatGroupGF2& k = cat[ki].group;
    for (std::size_t hi = 0; hi < cat.size(); ++hi) {
      const MatGroupGF2& h = cat[hi].group;
      if (h.order() == 1 || k.order() % h.order() != 0) continue;
      const std::uint64_t index = k.order() / h.order();
      if (index == 2 || !is_prime(index)) continue;
      bool found = false, normal = false;
      for (const auto& s : subgroups_of_order(k.abstract(), h.order())) {
        std::vector<BitMatrix> gens;
        for (Elem g : s.gens) gens.push_back(k.elements()[g]);
        const MatGroupGF2 sub = MatGroupGF2::close(6, std::move(gens));
        if (!(action_invariants(sub) == inv[hi]) || !subgroup_action_equivalent(sub, h)) continue;
        found = true;
        if (is_normal(k.abstract(), s)) {
          normal = true;
          break;
        }
      }
      if (found) edges.push_back({cat[hi].label, cat[ki].label, normal});
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [&](const DiagramEdge& a, const DiagramEdge& b) {
    auto pos = [&](const std::string& l) {
      return std::find_if(cat.begin(), cat.end(), [&](const CatalogueEntry& e) { return e.label == l; }) - cat.begin();
    };
    return std::pair(pos(a.from_label), pos(a.to_label)) < std::pair(pos(b.from_label), pos(b.to_label));
  });
  return edges;
}

std::string diagram_dot(const std::vector<CatalogueEntry>& cat, const std::vector<DiagramEdge>& edges) {
  std::ostringstream os;
  os << "digraph inertial_quotients {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cat.size(); ++i)
    os << "  n" << i << " [label=\"" << cat[i].label << "\\n|E|=" << cat[i].group.order() << "\"];\n";
  auto id = [&](const std::string& l) {
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (cat[i].label == l) return i;
    throw std::invalid_argument("diagram_dot: unknown label " + l);
  };
  for (const auto& e : edges)
    os << "  n" << id(e.from_label) << " -> n" << id(e.to_label) << " [style=" << (e.solid ? "solid" : "dotted")
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace blocklab
