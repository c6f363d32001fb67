/**
 * @file graph.hpp
 * @brief Simple graphs with classical vertex/edge connectivity.
 *
 * Vertices are 0-indexed in memory and 1-indexed in every text format. Two solver
 * families are provided: exhaustive subset searches (authoritative for small n) and
 * Menger-style max-flow solvers; the test suite cross-checks them.
 *
 * Convention: kappa(K_n) = n - 1. Disconnected graphs have kappa = lambda = 0.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blt/error.hpp"

namespace blt::graph {

using Edge = std::pair<std::size_t, std::size_t>;  // i < j, 0-indexed

class Graph {
 public:
  /// Edges are 0-indexed unordered pairs; validated and stored sorted with i < j.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    if (n < 2) throw Error("a graph needs at least 2 vertices");
    if (n > 64) throw Error("graphs are limited to 64 vertices");
    if (edges.empty()) throw Error("edge set must be non-empty");
    for (auto [a, b] : edges) {
      if (a == b) throw Error("self-loop on vertex " + std::to_string(a + 1));
      if (a >= n || b >= n) throw Error("vertex out of range");
      if (a > b) std::swap(a, b);
      if (adj_[a][b]) throw Error("duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
      adj_[a][b] = adj_[b][a] = true;
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const noexcept { return adj_[a][b]; }
  std::size_t degree(std::size_t v) const noexcept {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), true));
  }
  bool is_complete() const noexcept { return edges_.size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// Edge-list text: "n m", then m lines "i j" (1 <= i < j <= n). '#' lines are comments.
inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("expected two integers", lineno);
    if (!have_header) {
      if (a < 2) throw ParseError("vertex count must be at least 2", lineno);
      if (b < 1) throw ParseError("edge set must be non-empty", lineno);
      if (a > 64) throw ParseError("vertex count exceeds 64", lineno);
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (a < 1 || b < 1 || a > static_cast<long long>(n) || b > static_cast<long long>(n))
      throw ParseError("vertex out of range", lineno);
    if (a == b) throw ParseError("self-loop", lineno);
    if (a > b) throw ParseError("edge must be written as i j with i < j", lineno);
    Edge e{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)};
    if (!seen.insert(e).second) throw ParseError("duplicate edge", lineno);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing header line \"n m\"");
  if (edges.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

/// Graph on n vertices whose edges are the set bits of `mask` over the pairs (0,1),(0,2),...,(n-2,n-1).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) { return graph_from_mask(n, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1); }
inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}
inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Connectivity of the subgraph induced on `alive` (bitmask) after deleting the edges flagged in `removed_edges`.
inline bool is_connected(const Graph& g, std::uint64_t alive, const std::vector<bool>& removed_edges = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!removed_edges.empty() && removed_edges[e]) continue;
    auto [a, b] = g.edges()[e];
    if ((alive >> a & 1u) && (alive >> b & 1u)) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
  }
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v)
    if (alive >> v & 1u) {
      start = v;
      break;
    }
  if (start == n) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : nbr[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (std::size_t v = 0; v < n; ++v)
    if ((alive >> v & 1u) && !seen[v]) return false;
  return true;
}

inline std::uint64_t all_vertices(const Graph& g) {
  return g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
}

struct VertexCut {
  std::size_t value = 0;
  std::vector<std::size_t> separator;  ///< 0-indexed; empty if the graph is already disconnected
  bool complete = false;               ///< true for K_n, where no separator exists and value = n-1
};

struct EdgeCut {
  std::size_t value = 0;
  std::vector<Edge> cut;
};

inline std::size_t min_degree(const Graph& g) {
  std::size_t best = g.vertex_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// kappa by exhaustive search over vertex subsets, largest surviving set first.
inline VertexCut vertex_connectivity_brute(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw GuardExceeded("brute-force vertex connectivity is limited to n <= 20");
  if (g.is_complete()) return {n - 1, {}, true};
  for (std::size_t removed = 0; removed + 2 <= n; ++removed) {
    for (std::uint64_t alive = 0; alive < (std::uint64_t{1} << n); ++alive) {
      if (static_cast<std::size_t>(__builtin_popcountll(alive)) != n - removed) continue;
      if (!is_connected(g, alive)) {
        VertexCut cut{removed, {}, false};
        for (std::size_t v = 0; v < n; ++v)
          if (!(alive >> v & 1u)) cut.separator.push_back(v);
        return cut;
      }
    }
  }
  return {n - 1, {}, true};  // unreachable for non-complete graphs
}

/// lambda by exhaustive search over edge subsets of increasing size.
inline EdgeCut edge_connectivity_brute(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > 24) throw GuardExceeded("brute-force edge connectivity is limited to m <= 24");
  const auto alive = all_vertices(g);
  for (std::size_t size = 0; size <= m; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      std::vector<bool> removed(m);
      for (std::size_t e = 0; e < m; ++e) removed[e] = mask >> e & 1u;
      if (!is_connected(g, alive, removed)) {
        EdgeCut cut{size, {}};
        for (std::size_t e = 0; e < m; ++e)
          if (removed[e]) cut.cut.push_back(g.edges()[e]);
        return cut;
      }
    }
  }
  return {m, g.edges()};
}

namespace detail {

/// Edmonds–Karp on a dense capacity matrix; `reach` receives the residual source side.
inline std::size_t max_flow(std::vector<std::vector<int>> cap, std::size_t s, std::size_t t, std::vector<bool>& reach) {
  const std::size_t n = cap.size();
  std::size_t flow = 0;
  while (true) {
    std::vector<std::size_t> parent(n, n);
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && parent[t] == n) {
      auto v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w)
        if (parent[w] == n && cap[v][w] > 0) {
          parent[w] = v;
          queue.push_back(w);
        }
    }
    if (parent[t] == n) {
      reach.assign(n, false);
      for (std::size_t v = 0; v < n; ++v) reach[v] = parent[v] != n;
      return flow;
    }
    int aug = std::numeric_limits<int>::max();
    for (auto v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
    for (auto v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= aug;
      cap[v][parent[v]] += aug;
    }
    flow += static_cast<std::size_t>(aug);
  }
}

}  // namespace detail

/// kappa via Menger: minimum s-t vertex cut over all non-adjacent pairs (vertex splitting).
inline VertexCut vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (g.is_complete()) return {n - 1, {}, true};
  constexpr int kInf = 1 << 20;
  VertexCut best{n, {}, false};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      // v_in = v, v_out = v + n
      std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
      for (std::size_t v = 0; v < n; ++v) cap[v][v + n] = (v == s || v == t) ? kInf : 1;
      for (auto [a, b] : g.edges()) {
        cap[a + n][b] = kInf;
        cap[b + n][a] = kInf;
      }
      std::vector<bool> reach;
      auto f = detail::max_flow(std::move(cap), s + n, t, reach);
      if (f < best.value) {
        best.value = f;
        best.separator.clear();
        for (std::size_t v = 0; v < n; ++v)
          if (reach[v] && !reach[v + n]) best.separator.push_back(v);
      }
    }
  return best;
}

/// lambda via max-flow from vertex 0 to every other vertex.
inline EdgeCut edge_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  EdgeCut best{g.edge_count() + 1, {}};
  for (std::size_t t = 1; t < n; ++t) {
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [a, b] : g.edges()) cap[a][b] = cap[b][a] = 1;
    std::vector<bool> reach;
    auto f = detail::max_flow(std::move(cap), 0, t, reach);
    if (f < best.value) {
      best.value = f;
      best.cut.clear();
      for (auto [a, b] : g.edges())
        if (reach[a] != reach[b]) best.cut.emplace_back(a, b);
    }
  }
  return best;
}

/// True iff deleting `separator` leaves a disconnected graph (or nothing to disconnect, for K_n markers).
inline bool separator_disconnects(const Graph& g, const std::vector<std::size_t>& separator) {
  auto alive = all_vertices(g);
  for (auto v : separator) alive &= ~(std::uint64_t{1} << v);
  return !is_connected(g, alive);
}

inline bool cut_disconnects(const Graph& g, const std::vector<Edge>& cut) {
  std::vector<bool> removed(g.edge_count(), false);
  for (const auto& e : cut) {
    auto it = std::find(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end()) return false;
    removed[static_cast<std::size_t>(it - g.edges().begin())] = true;
  }
  return !is_connected(g, all_vertices(g), removed);
}

}  // namespace blt::graph
