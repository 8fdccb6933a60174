#include "blocklab/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace blocklab {

namespace {

using Coloring = std::vector<std::size_t>;

class Search {
public:
  Search(const IntMatrix& m, std::size_t budget) : m_(m), n_(m.size()), budget_(budget) {}

  CanonicalForm run() {
    Coloring col(n_);
    std::vector<std::int64_t> diag(n_);
    for (std::size_t v = 0; v < n_; ++v) diag[v] = m_[v][v];
    auto sorted = diag;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n_; ++v)
      col[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), diag[v]) - sorted.begin());
    refine(col);
    std::vector<std::size_t> prefix;
    visit(col, prefix);
    return {std::move(best_), std::move(best_order_), nodes_};
  }

private:
  const IntMatrix& m_;
  std::size_t n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  IntMatrix best_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<std::size_t>> autos_;

  static std::size_t count_colors(const Coloring& c) {
    std::vector<std::size_t> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void refine(Coloring& col) const {
    std::size_t ncol = count_colors(col);
    while (true) {
      using Sig = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>>;
      std::vector<Sig> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].first = col[v];
        for (std::size_t u = 0; u < n_; ++u)
          if (u != v) sig[v].second.emplace_back(col[u], m_[v][u]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::vector<std::size_t> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      Coloring next(n_);
      std::size_t c = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
        next[idx[i]] = c;
      }
      col = std::move(next);
      const std::size_t now = c + 1;
      if (now == ncol) return;
      ncol = now;
    }
  }

  bool twins(std::size_t u, std::size_t v) const {
    if (m_[u][u] != m_[v][v] || m_[u][v] != m_[v][u]) return false;
    for (std::size_t w = 0; w < n_; ++w)
      if (w != u && w != v && (m_[u][w] != m_[v][w] || m_[w][u] != m_[w][v])) return false;
    return true;
  }

  std::vector<std::size_t> orbit_roots(const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos_) {
      bool fixes = true;
      for (auto p : prefix)
        if (g[p] != p) fixes = false;
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
    }
    std::vector<std::size_t> root(n_);
    for (std::size_t v = 0; v < n_; ++v) root[v] = find(v);
    return root;
  }

  void leaf(const Coloring& col) {
    std::vector<std::size_t> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[col[v]] = v;
    IntMatrix cur(n_, std::vector<std::int64_t>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) cur[a][b] = m_[order[a]][order[b]];
    if (best_order_.empty() || cur < best_) {
      best_ = std::move(cur);
      best_order_ = std::move(order);
    } else if (cur == best_) {
      std::vector<std::size_t> g(n_);
      for (std::size_t a = 0; a < n_; ++a) g[best_order_[a]] = order[a];
      autos_.push_back(std::move(g));
    }
  }

  void visit(const Coloring& col, std::vector<std::size_t>& prefix) {
    if (++nodes_ > budget_) throw std::runtime_error("canonical_form: node budget exceeded");
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n_; ++v) cells[col[v]].push_back(v);
    if (cells.size() == n_) {
      leaf(col);
      return;
    }
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, cell] : cells)
      if (cell.size() > 1 && (!target || cell.size() < target->size())) target = &cell;
    const std::vector<std::size_t> cell = *target;
    std::vector<std::size_t> tried;
    for (std::size_t v : cell) {
      const auto root = orbit_roots(prefix);
      bool skip = false;
      for (std::size_t u : tried)
        if (root[u] == root[v] || twins(u, v)) skip = true;
      if (skip) continue;
      tried.push_back(v);
      Coloring child(n_);
      for (std::size_t x = 0; x < n_; ++x) child[x] = 2 * col[x] + (col[x] == col[v] && x != v ? 1 : 0);
      refine(child);
      prefix.push_back(v);
      visit(child, prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const IntMatrix& m, std::size_t node_budget) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("canonical_form: matrix is not square");
  if (m.empty()) return {};
  return Search(m, node_budget).run();
}

std::string matrix_hash(const IntMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(m.size());
  for (const auto& row : m)
    for (auto v : row) mix(static_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace blocklab
