#pragma once

// Brute-force references used only by the tests. They deliberately share no
// code with the library kernels.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "artin/angle.hpp"
#include "artin/link.hpp"
#include "artin/presentation.hpp"

namespace oracle {

using Adj = std::vector<std::vector<std::size_t>>;

inline Adj adjacency(const artin::LinkGraph& l) {
  Adj adj(l.vertex_count());
  for (const auto& e : l.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

// Girth by BFS from every root: a non-tree edge {x, y} closes a closed walk of
// length d(x) + d(y) + 1 through the root; the minimum over roots is the girth.
inline std::optional<std::size_t> bfs_girth(const Adj& adj) {
  std::optional<std::size_t> best;
  const std::size_t n = adj.size();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max()), parent(n, n);
    std::queue<std::size_t> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          const auto len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// Calls f(cycle) for every simple cycle with at most max_len edges, once per
// cycle: rooted at its smallest vertex, and second vertex < last vertex.
inline void for_each_cycle(const Adj& adj, std::size_t max_len,
                           const std::function<void(const std::vector<std::size_t>&)>& f) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> path;
  std::vector<char> on(n, 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    for (auto y : adj[x]) {
      if (y == path[0] && path.size() >= 3 && path[1] < path.back()) f(path);
      if (y <= path[0] || on[y] || path.size() >= max_len) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    path = {r};
    on[r] = 1;
    dfs(r);
    on[r] = 0;
  }
}

// Minimum angle sum over all simple cycles up to max_len edges.
inline std::optional<artin::PiAngle> brute_min_angle(const artin::LinkGraph& l, const std::vector<artin::PiAngle>& w,
                                                     std::size_t max_len) {
  std::optional<artin::PiAngle> best;
  for_each_cycle(adjacency(l), max_len, [&](const std::vector<std::size_t>& c) {
    artin::PiAngle s;
    for (std::size_t i = 0; i < c.size(); ++i) s += w[*l.find_edge(c[i], c[(i + 1) % c.size()])];
    if (!best || s < *best) best = s;
  });
  return best;
}

inline bool has_cycle(const artin::LinkGraph& l) {
  // A graph is a forest iff |E| = |V| - (number of components), counted over
  // all vertices including isolated ones.
  std::vector<std::size_t> comp(l.vertex_count());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& e : l.edges()) {
    const auto a = find(e.a), b = find(e.b);
    if (a == b) return true;
    comp[a] = b;
  }
  return false;
}

// Direct pattern test on Γ: can edge (a, b) point into b?
inline bool can_point_into(const artin::DefiningGraph& g, std::size_t a, std::size_t b) {
  const auto e = g.find_edge(a, b);
  if (!e) return false;
  const auto& edge = g.edge(*e);
  if (edge.label == 2) return true;
  if (edge.orientation == artin::Orientation::Forward) return edge.u == a && edge.v == b;
  if (edge.orientation == artin::Orientation::Backward) return edge.v == a && edge.u == b;
  return false;
}

// True if some triangle has a vertex receiving both triangle edges, or some
// 4-cycle has two opposite vertices receiving all four of its edges.
inline bool has_bad_pattern(const artin::DefiningGraph& g) {
  const std::size_t n = g.vertex_count();
  auto adj = [&](std::size_t a, std::size_t b) { return g.find_edge(a, b).has_value(); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        // sink c, other triangle edge a-b present
        if (adj(a, b) && can_point_into(g, a, c) && can_point_into(g, b, c)) return true;
      }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
          std::set<std::size_t> s{u, v, w, t};
          if (s.size() != 4) continue;
          if (can_point_into(g, u, v) && can_point_into(g, w, v) && can_point_into(g, u, t) &&
              can_point_into(g, w, t))
            return true;
        }
  return false;
}

// Every completion of the undirected label >= 3 edges; true if any avoids the
// patterns.
inline bool some_good_completion(const artin::DefiningGraph& g) {
  std::vector<std::size_t> free;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).label >= 3 && g.edge(e).orientation == artin::Orientation::Unoriented) free.push_back(e);
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    auto h = g;
    for (std::size_t i = 0; i < free.size(); ++i)
      h.set_orientation(free[i], (mask >> i) & 1 ? artin::Orientation::Backward : artin::Orientation::Forward);
    if (!has_bad_pattern(h)) return true;
  }
  return false;
}

inline artin::DefiningGraph random_graph(std::mt19937_64& rng, std::size_t n, const std::vector<int>& labels,
                                         double p_edge, double p_unoriented = 0.0) {
  artin::DefiningGraph g;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(artin::GeneratorId("v" + std::to_string(v)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (u01(rng) >= p_edge) continue;
      const int label = labels[pick(rng)];
      auto o = u01(rng) < 0.5 ? artin::Orientation::Forward : artin::Orientation::Backward;
      if (label == 2) o = artin::Orientation::Wildcard;
      else if (u01(rng) < p_unoriented) o = artin::Orientation::Unoriented;
      g.add_edge(g.vertex(a), g.vertex(b), label, o);
    }
  return g;
}

}  // namespace oracle
