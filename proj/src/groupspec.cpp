#include "blocklab/groupspec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace blocklab {

namespace {

using Bytes = std::string;  // packed tuple: components then action rows

struct BytesHash {
  std::size_t operator()(const Bytes& b) const { return std::hash<std::string_view>{}(b); }
};

std::size_t component_width(const ComponentSpec& c) {
  return c.kind == ComponentSpec::Kind::Permutation ? c.degree : c.degree * c.degree;
}

Bytes encode(const GroupSpec& spec, const GeneratorSpec& g) {
  Bytes out;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& c = spec.components[i];
    if (g.data[i].size() != component_width(c)) throw std::invalid_argument("group spec: component size mismatch");
    for (std::uint32_t v : g.data[i]) {
      if (c.kind == ComponentSpec::Kind::Matrix && v >= c.modulus)
        throw std::invalid_argument("group spec: matrix entry not reduced");
      if (c.kind == ComponentSpec::Kind::Permutation && v >= static_cast<std::uint32_t>(c.degree))
        throw std::invalid_argument("group spec: permutation point out of range");
      out.push_back(static_cast<char>(v));
    }
  }
  if (g.action.rows() != static_cast<std::size_t>(spec.n) || g.action.cols() != static_cast<std::size_t>(spec.n))
    throw std::invalid_argument("group spec: action matrix has wrong size");
  for (int r = 0; r < spec.n; ++r) out.push_back(static_cast<char>(g.action.row_word(r)));
  return out;
}

BitMatrix decode_action(const GroupSpec& spec, const Bytes& b) {
  const std::size_t off = b.size() - spec.n;
  BitMatrix m(spec.n, spec.n);
  for (int r = 0; r < spec.n; ++r) {
    const auto row = static_cast<std::uint8_t>(b[off + r]);
    for (int c = 0; c < spec.n; ++c) m.set(r, c, (row >> c) & 1u);
  }
  return m;
}

Bytes multiply(const GroupSpec& spec, const Bytes& a, const Bytes& b) {
  Bytes out(a.size(), '\0');
  std::size_t off = 0;
  for (const auto& c : spec.components) {
    const auto* pa = reinterpret_cast<const std::uint8_t*>(a.data() + off);
    const auto* pb = reinterpret_cast<const std::uint8_t*>(b.data() + off);
    if (c.kind == ComponentSpec::Kind::Permutation) {
      // apply a first, then b
      for (int x = 0; x < c.degree; ++x) out[off + x] = static_cast<char>(pb[pa[x]]);
    } else {
      const int d = c.degree;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          std::uint32_t s = 0;
          for (int t = 0; t < d; ++t) s += std::uint32_t{pa[i * d + t]} * pb[t * d + j];
          out[off + i * d + j] = static_cast<char>(s % c.modulus);
        }
    }
    off += component_width(c);
  }
  const BitMatrix prod = decode_action(spec, a) * decode_action(spec, b);
  for (int r = 0; r < spec.n; ++r) out[off + r] = static_cast<char>(prod.row_word(r));
  return out;
}

Bytes identity_bytes(const GroupSpec& spec) {
  GeneratorSpec id;
  for (const auto& c : spec.components) {
    std::vector<std::uint32_t> v(component_width(c), 0);
    for (int i = 0; i < c.degree; ++i) {
      if (c.kind == ComponentSpec::Kind::Permutation) v[i] = i;
      else v[i * c.degree + i] = 1;
    }
    id.data.push_back(std::move(v));
  }
  id.action = BitMatrix::identity(spec.n);
  return encode(spec, id);
}

}  // namespace

SdpGroup build_group(const GroupSpec& spec, std::size_t cap) {
  if (spec.n < 1 || spec.n > 8) throw std::invalid_argument("group spec: n must be in 1..8");
  std::vector<Bytes> gens;
  for (const auto& g : spec.generators) gens.push_back(encode(spec, g));
  auto mul = [&](const Bytes& a, const Bytes& b) { return multiply(spec, a, b); };
  auto [elements, table] = close_elements<Bytes, decltype(mul), BytesHash>(identity_bytes(spec), gens, mul, cap);
  if (spec.expected_order && table.order() != *spec.expected_order)
    throw std::runtime_error("group spec " + spec.name + ": complement has order " + std::to_string(table.order()) +
                             ", expected " + std::to_string(*spec.expected_order));
  std::vector<BitMatrix> action;
  action.reserve(elements.size());
  for (const auto& e : elements) action.push_back(decode_action(spec, e));
  return SdpGroup(spec.n, std::make_shared<const FiniteGroup>(std::move(table)), std::move(action), spec.name);
}

std::vector<std::uint32_t> parse_cycles(const std::string& text, int degree) {
  std::vector<std::uint32_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<std::uint32_t> cycle;
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) return;
    const int p = std::stoi(num);
    if (p < 1 || p > degree) throw std::invalid_argument("cycle point out of range: " + num);
    cycle.push_back(p - 1);
    num.clear();
  };
  for (char ch : text) {
    if (ch == '(') {
      cycle.clear();
    } else if (ch == ')') {
      flush_num();
      for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      cycle.clear();
    } else if (ch == ',' || ch == ' ') {
      flush_num();
    } else if (ch >= '0' && ch <= '9') {
      num.push_back(ch);
    } else {
      throw std::invalid_argument(std::string("unexpected character in cycle string: ") + ch);
    }
  }
  std::vector<char> seen(degree, 0);
  for (auto v : img) {
    if (seen[v]) throw std::invalid_argument("cycle string is not a permutation");
    seen[v] = 1;
  }
  return img;
}

std::string format_cycles(const std::vector<std::uint32_t>& images) {
  std::string out;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = 1;
      if (j != i) out += ",";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupSpec parse_group_spec(const nlohmann::json& j) {
  GroupSpec s;
  s.name = j.value("name", std::string{});
  s.n = j.at("n").get<int>();
  if (j.contains("order")) s.expected_order = j.at("order").get<std::uint64_t>();
  for (const auto& c : j.value("components", nlohmann::json::array())) {
    ComponentSpec cs;
    const std::string type = c.at("type").get<std::string>();
    if (type == "permutation") cs.kind = ComponentSpec::Kind::Permutation;
    else if (type == "matrix") cs.kind = ComponentSpec::Kind::Matrix;
    else throw std::invalid_argument("group spec: unknown component type " + type);
    cs.degree = c.at("degree").get<int>();
    if (cs.kind == ComponentSpec::Kind::Matrix) cs.modulus = c.at("modulus").get<std::uint32_t>();
    if (cs.degree < 1 || cs.degree > 64) throw std::invalid_argument("group spec: bad component degree");
    if (cs.kind == ComponentSpec::Kind::Matrix && (cs.modulus < 2 || cs.modulus > 15))
      throw std::invalid_argument("group spec: matrix modulus must be in 2..15");
    s.components.push_back(cs);
  }
  for (const auto& g : j.at("generators")) {
    GeneratorSpec gs;
    const auto comps = g.value("components", nlohmann::json::array());
    if (comps.size() != s.components.size()) throw std::invalid_argument("group spec: generator component count");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& cs = s.components[i];
      if (cs.kind == ComponentSpec::Kind::Permutation) {
        gs.data.push_back(parse_cycles(comps[i].get<std::string>(), cs.degree));
      } else {
        std::vector<std::uint32_t> flat;
        if (comps[i].size() != static_cast<std::size_t>(cs.degree)) throw std::invalid_argument("group spec: matrix rows");
        for (const auto& row : comps[i]) {
          if (row.size() != static_cast<std::size_t>(cs.degree)) throw std::invalid_argument("group spec: matrix cols");
          for (const auto& v : row) flat.push_back(v.get<std::uint32_t>());
        }
        gs.data.push_back(std::move(flat));
      }
    }
    gs.action = BitMatrix::from_rows(g.at("action").get<std::vector<std::string>>());
    s.generators.push_back(std::move(gs));
  }
  return s;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group spec " + path);
  return parse_group_spec(nlohmann::json::parse(in));
}

nlohmann::json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["n"] = spec.n;
  if (spec.expected_order) j["order"] = *spec.expected_order;
  j["components"] = nlohmann::json::array();
  for (const auto& c : spec.components) {
    nlohmann::json cj;
    cj["type"] = c.kind == ComponentSpec::Kind::Permutation ? "permutation" : "matrix";
    cj["degree"] = c.degree;
    if (c.kind == ComponentSpec::Kind::Matrix) cj["modulus"] = c.modulus;
    j["components"].push_back(cj);
  }
  j["generators"] = nlohmann::json::array();
  for (const auto& g : spec.generators) {
    nlohmann::json gj;
    gj["components"] = nlohmann::json::array();
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
      const auto& c = spec.components[i];
      if (c.kind == ComponentSpec::Kind::Permutation) {
        gj["components"].push_back(format_cycles(g.data[i]));
      } else {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < c.degree; ++r)
          rows.push_back(std::vector<std::uint32_t>(g.data[i].begin() + r * c.degree,
                                                    g.data[i].begin() + (r + 1) * c.degree));
        gj["components"].push_back(rows);
      }
    }
    gj["action"] = g.action.to_rows();
    j["generators"].push_back(gj);
  }
  return j;
}

}  // namespace blocklab
