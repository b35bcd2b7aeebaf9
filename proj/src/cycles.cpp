#include "artin/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

#include "artin/errors.hpp"

#ifdef ARTIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace artin {

std::size_t EmbeddedLoop::count(const LinkGraph& l, EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](std::size_t e) { return l.edge(e).kind == kind; }));
}

EmbeddedLoop make_loop(const LinkGraph& l, std::vector<std::size_t> cyc, std::span<const PiAngle> angles) {
  const std::size_t n = cyc.size();
  if (n < 3) throw InternalInconsistency("loop shorter than 3");
  const auto min_it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), min_it, cyc.end());
  if (cyc[1] > cyc[n - 1]) std::reverse(cyc.begin() + 1, cyc.end());
  EmbeddedLoop loop;
  loop.edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = l.find_edge(cyc[i], cyc[(i + 1) % n]);
    if (!e) throw InternalInconsistency("loop vertices not adjacent");
    loop.edges.push_back(*e);
    if (!angles.empty()) loop.angle_sum += angles[*e];
  }
  loop.vertices = std::move(cyc);
  return loop;
}

bool is_embedded_loop(const LinkGraph& l, const EmbeddedLoop& loop) {
  const std::size_t n = loop.vertices.size();
  if (n < 3 || loop.edges.size() != n) return false;
  std::vector<std::size_t> sorted = loop.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = loop.vertices[i];
    const auto v = loop.vertices[(i + 1) % n];
    if (u >= l.vertex_count() || v >= l.vertex_count()) return false;
    const auto& e = l.edge(loop.edges[i]);
    if (!((e.a == u && e.b == v) || (e.a == v && e.b == u))) return false;
  }
  return true;
}

std::vector<std::string> loop_labels(const LinkGraph& l, const EmbeddedLoop& loop) {
  std::vector<std::string> out;
  for (auto v : loop.vertices) out.push_back(l.vertex(v).label());
  return out;
}

std::string loop_str(const LinkGraph& l, const EmbeddedLoop& loop) {
  std::string out;
  for (auto v : loop.vertices) {
    if (!out.empty()) out += " - ";
    out += l.vertex(v).label();
  }
  return out;
}

namespace {

using Weight = std::int64_t;
constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Per-edge candidate, ordered by (weight, length, vertices).
struct Candidate {
  Weight weight = kInf;
  std::vector<std::size_t> vertices;  // canonical

  bool valid() const noexcept { return weight < kInf; }
  friend bool operator<(const Candidate& a, const Candidate& b) {
    return std::forward_as_tuple(a.weight, a.vertices.size(), a.vertices) <
           std::forward_as_tuple(b.weight, b.vertices.size(), b.vertices);
  }
};

std::vector<std::size_t> canonical(std::vector<std::size_t> cyc) {
  const std::size_t n = cyc.size();
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  if (cyc[1] > cyc[n - 1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

// Scratch buffers reused across edges handled by one thread.
struct Workspace {
  std::vector<Weight> dist;
  std::vector<std::size_t> parent;
  std::vector<std::uint32_t> stamp;
  std::vector<std::size_t> queue;
  std::uint32_t epoch = 0;

  explicit Workspace(std::size_t n) : dist(n), parent(n), stamp(n, 0) {}

  void reset() {
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  Weight get(std::size_t v) const { return stamp[v] == epoch ? dist[v] : kInf; }
  void set(std::size_t v, Weight d, std::size_t p) {
    stamp[v] = epoch;
    dist[v] = d;
    parent[v] = p;
  }
};

std::vector<std::size_t> trace_back(const Workspace& ws, std::size_t src, std::size_t dst) {
  std::vector<std::size_t> cyc;
  for (std::size_t v = dst; v != src; v = ws.parent[v]) cyc.push_back(v);
  cyc.push_back(src);
  return canonical(std::move(cyc));
}

Candidate bfs_through_edge(const LinkGraph& l, std::size_t e, Weight bound, Workspace& ws) {
  if (bound < 1) return {};
  const auto& ed = l.edge(e);
  const Weight limit = bound - 1;
  ws.reset();
  ws.queue.clear();
  ws.set(ed.a, 0, ed.a);
  ws.queue.push_back(ed.a);
  for (std::size_t head = 0; head < ws.queue.size(); ++head) {
    const std::size_t u = ws.queue[head];
    const Weight d = ws.dist[u];
    if (d + 1 > limit) break;
    for (const auto& a : l.adjacent(u)) {
      if (a.edge == e || ws.get(a.vertex) != kInf) continue;
      ws.set(a.vertex, d + 1, u);
      if (a.vertex == ed.b) return {d + 2, trace_back(ws, ed.a, ed.b)};
      ws.queue.push_back(a.vertex);
    }
  }
  return {};
}

// Shortest cycle through edge `e` whose weight does not exceed `bound`.
// Unit weights when `w` is empty.
Candidate best_through_edge(const LinkGraph& l, std::span<const Weight> w, std::size_t e, Weight bound,
                            Workspace& ws) {
  if (w.empty()) return bfs_through_edge(l, e, bound, ws);
  const auto& ed = l.edge(e);
  const Weight we = w[e];
  if (we > bound) return {};
  const Weight limit = bound - we;  // path weight allowed
  ws.reset();
  const std::size_t src = ed.a;
  const std::size_t dst = ed.b;
  ws.set(src, 0, src);
  using Item = std::pair<Weight, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, src});
  bool found = false;
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != ws.get(u)) continue;
    if (u == dst) {
      found = true;
      break;
    }
    for (const auto& a : l.adjacent(u)) {
      if (a.edge == e) continue;
      const Weight nd = d + w[a.edge];
      if (nd > limit) continue;
      if (nd < ws.get(a.vertex)) {
        ws.set(a.vertex, nd, u);
        pq.push({nd, a.vertex});
      }
    }
  }
  if (!found) return {};
  return {ws.get(dst) + we, trace_back(ws, src, dst)};
}

Candidate run_serial(const LinkGraph& l, std::span<const Weight> w) {
  Workspace ws(l.vertex_count());
  Candidate best;
  for (std::size_t e = 0; e < l.edge_count(); ++e) {
    Candidate c = best_through_edge(l, w, e, best.weight == kInf ? kInf : best.weight, ws);
    if (c.valid() && c < best) best = std::move(c);
  }
  return best;
}

Candidate run_parallel(const LinkGraph& l, std::span<const Weight> w) {
#ifdef ARTIN_HAVE_OPENMP
  Candidate best;
  const auto n = static_cast<std::int64_t>(l.edge_count());
#pragma omp parallel
  {
    Workspace ws(l.vertex_count());
    Candidate local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t e = 0; e < n; ++e) {
      Candidate c = best_through_edge(l, w, static_cast<std::size_t>(e), local.weight, ws);
      if (c.valid() && c < local) local = std::move(c);
    }
#pragma omp critical(artin_cycle_reduce)
    {
      if (local.valid() && local < best) best = std::move(local);
    }
  }
  return best;
#else
  return run_serial(l, w);
#endif
}

// Angles scaled to integers over a common denominator.
struct ScaledAngles {
  std::vector<Weight> weights;
  std::int64_t denominator = 1;
};

ScaledAngles scale(const LinkGraph& l, std::span<const PiAngle> angles) {
  if (angles.size() != l.edge_count())
    throw UnassignedAngles("expected " + std::to_string(l.edge_count()) + " angles, got " +
                           std::to_string(angles.size()));
  ScaledAngles s;
  for (const auto& a : angles) {
    if (!a.positive()) throw UnassignedAngles("non-positive link edge angle " + a.str());
    s.denominator = std::lcm(s.denominator, a.over_pi().denominator());
  }
  s.weights.reserve(angles.size());
  for (const auto& a : angles) s.weights.push_back(a.over_pi().numerator() * (s.denominator / a.over_pi().denominator()));
  return s;
}

GirthResult to_girth(const LinkGraph& l, Candidate c) {
  if (!c.valid()) return {};
  EmbeddedLoop loop = make_loop(l, std::move(c.vertices));
  const std::size_t len = loop.length();
  return {len, std::move(loop)};
}

AngleCycleResult to_angle(const LinkGraph& l, std::span<const PiAngle> angles, const ScaledAngles& s, Candidate c) {
  if (!c.valid()) return {};
  EmbeddedLoop loop = make_loop(l, std::move(c.vertices), angles);
  const PiAngle value(c.weight, s.denominator);
  if (value != loop.angle_sum) throw InternalInconsistency("scaled and exact loop angles disagree");
  return {value, std::move(loop)};
}

}  // namespace

GirthResult girth(const LinkGraph& l) { return to_girth(l, run_parallel(l, {})); }

AngleCycleResult min_angle_cycle(const LinkGraph& l, std::span<const PiAngle> angles) {
  const auto s = scale(l, angles);
  return to_angle(l, angles, s, run_parallel(l, s.weights));
}

namespace serial {

GirthResult girth(const LinkGraph& l) { return to_girth(l, run_serial(l, {})); }

AngleCycleResult min_angle_cycle(const LinkGraph& l, std::span<const PiAngle> angles) {
  const auto s = scale(l, angles);
  return to_angle(l, angles, s, run_serial(l, s.weights));
}

}  // namespace serial

std::vector<EmbeddedLoop> enumerate_short_loops(const LinkGraph& l, std::size_t max_len) {
  if (max_len > kShortLoopLimit)
    throw LimitExceeded("max_len " + std::to_string(max_len) + " exceeds " + std::to_string(kShortLoopLimit));
  std::vector<EmbeddedLoop> out;
  const std::size_t n = l.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<std::size_t> path;
  // Loops are rooted at their smallest vertex; reflection is removed by
  // requiring path[1] < path.back().
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    for (const auto& a : l.adjacent(u)) {
      const std::size_t v = a.vertex;
      if (v < path[0]) continue;
      if (v == path[0]) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(make_loop(l, path));
        continue;
      }
      if (on_path[v] || path.size() >= max_len) continue;
      on_path[v] = 1;
      path.push_back(v);
      self(self, v);
      path.pop_back();
      on_path[v] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs(dfs, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const EmbeddedLoop& a, const EmbeddedLoop& b) {
    return std::forward_as_tuple(a.vertices.size(), a.vertices) < std::forward_as_tuple(b.vertices.size(), b.vertices);
  });
  return out;
}

}  // namespace artin
