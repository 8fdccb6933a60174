#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "blocklab/canonical.hpp"
#include "blocklab/catalogue.hpp"
#include "blocklab/center.hpp"
#include "blocklab/chartab.hpp"
#include "blocklab/sdpgroup.hpp"

namespace blocklab {

struct BlockData {
  ExtVec idempotent;                  // coefficients on class sums over GF(2^m)
  std::vector<std::size_t> ordinary;  // rows of the character table
  std::vector<std::size_t> brauer;    // characters of G/O_2(G)
  std::size_t k = 0;
  std::size_t l = 0;
  int defect = 0;
  bool principal = false;
  std::size_t galois_orbit = 1;       // size of the Frobenius orbit of the idempotent
  std::vector<std::size_t> loewy;     // of Z(b); empty when not computed
  std::size_t dim_J2 = 0;
  IntMatrix cartan;
};

struct AnalysisOptions {
  bool center_filtration = true;  // Loewy vectors of Z(kG) and of each block
  std::uint64_t seed = 0x5eed;
};

/// Everything computed for one group G = D x| P.
struct GroupAnalysis {
  std::uint64_t order = 0;
  ConjClasses classes;
  CharacterTable table;
  FusionMap fusion;
  CharacterTable quotient_table;    // Irr(P), pulled back as IBr(G)
  std::vector<int> fixed_dims;      // dim C_D(p) per class of P
  int field_degree = 1;             // m with GF(2^m) splitting
  IntMatrix decomposition;          // k x l
  IntMatrix cartan;                 // D^T D
  IntMatrix cartan_weights;         // from fixed-point weights
  boost::multiprecision::cpp_int cartan_det = 0;
  boost::multiprecision::cpp_int regular_centralizer_product = 0;  // prod over 2-regular x of |C_G(x)|_2
  std::size_t nilradical_dim = 0;
  std::vector<std::size_t> loewy;
  std::size_t dim_J2 = 0;
  std::vector<BlockData> blocks;
};

/// Table, fusion, decomposition and Cartan matrices, blocks with both idempotent routes,
/// and the center filtration. Every internal consistency check throws std::logic_error.
GroupAnalysis analyze_group(const SdpGroup& g, const AnalysisOptions& opt = {});

/// c = (1/|P|) sum_C |C| 2^dim C_D(p_C) theta(p_C) theta'(p_C)*, exact.
IntMatrix cartan_via_weights(const ConjClasses& pcc, const CharacterTable& ptable, const std::vector<int>& fixed_dims);

/// d(chi, theta) = <Res_P chi, theta>_P for G = D x| P.
IntMatrix decomposition_matrix(const CharacterTable& t, const FusionMap& fusion, const CharacterTable& ptable);

IntMatrix gram(const IntMatrix& d);
/// Fraction-free elimination over the integers.
boost::multiprecision::cpp_int determinant(const IntMatrix& m);
IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& idx);

/// Block-level fingerprint (k, l, Cartan, center filtration) of a group.
struct InvariantRecord {
  struct Block {
    std::size_t k = 0;
    std::size_t l = 0;
    int defect = 0;
    bool principal = false;
    std::size_t galois_orbit = 1;
    std::vector<std::size_t> loewy;
    std::size_t dim_J2 = 0;
    IntMatrix cartan_canonical;
    std::string cartan_hash;
  };
  std::string label;
  std::uint64_t order = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  IntMatrix cartan;
  IntMatrix cartan_weights;
  std::string cartan_det;
  std::string regular_centralizer_product;
  IntMatrix cartan_canonical;
  std::string cartan_hash;
  std::vector<std::size_t> loewy;
  std::size_t dim_J2 = 0;
  std::vector<Block> blocks;
};

InvariantRecord make_record(const std::string& label, const GroupAnalysis& a);
/// Record of D x| E for a catalogue entry; throws unless l = k(E).
InvariantRecord invariant_record(const CatalogueEntry& e);
nlohmann::json to_json(const InvariantRecord& r);
InvariantRecord record_from_json(const nlohmann::json& j);

}  // namespace blocklab
