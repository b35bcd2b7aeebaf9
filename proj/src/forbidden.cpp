#include "artin/forbidden.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>

#include "artin/errors.hpp"

#ifdef ARTIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace artin {

const char* kind_name(PatternKind k) { return k == PatternKind::TypeA ? "A" : "B"; }

namespace {

// Direction state of an edge during matching, relative to (edge.u, edge.v).
enum Dir : std::uint8_t { kUnset = 0, kFwd = 1, kBwd = 2, kBoth = 3 };

Dir dir_of(const GammaEdge& e) {
  if (e.bidirectional()) return kBoth;
  switch (e.orientation) {
    case Orientation::Forward: return kFwd;
    case Orientation::Backward: return kBwd;
    default: return kUnset;
  }
}

// Can edge `e` be read as a -> b?
bool allows(const DefiningGraph& g, std::size_t e, Dir d, std::size_t a, std::size_t b) {
  const auto& ed = g.edge(e);
  if (ed.u == a && ed.v == b) return (d & kFwd) != 0;
  if (ed.u == b && ed.v == a) return (d & kBwd) != 0;
  return false;
}

struct Triangle {
  std::array<std::size_t, 3> v;       // sorted vertex indices
  std::array<std::size_t, 3> e;       // edges {v0v1, v0v2, v1v2}
};

struct Square {
  std::array<std::size_t, 4> v;  // cyclic order
  std::array<std::size_t, 4> e;  // e[i] joins v[i], v[i+1]
};

struct PatternIndex {
  std::vector<Triangle> triangles;
  std::vector<Square> squares;
  std::vector<std::vector<std::size_t>> tri_of_edge;
  std::vector<std::vector<std::size_t>> sq_of_edge;
};

PatternIndex index_patterns(const DefiningGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::int64_t>> em(n, std::vector<std::int64_t>(n, -1));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    em[g.edge(e).u][g.edge(e).v] = static_cast<std::int64_t>(e);
    em[g.edge(e).v][g.edge(e).u] = static_cast<std::int64_t>(e);
  }
  auto E = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(em[a][b]); };
  PatternIndex idx;
  idx.tri_of_edge.resize(g.edge_count());
  idx.sq_of_edge.resize(g.edge_count());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (em[a][b] < 0) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (em[a][c] >= 0 && em[b][c] >= 0) idx.triangles.push_back({{a, b, c}, {E(a, b), E(a, c), E(b, c)}});
    }
  // A 4-cycle on {a<b<c<d} is one of a-b-c-d, a-b-d-c, a-c-b-d.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<std::array<std::size_t, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) ok = em[o[i]][o[(i + 1) % 4]] >= 0;
            if (!ok) continue;
            Square s{o, {}};
            for (int i = 0; i < 4; ++i) s.e[i] = E(o[i], o[(i + 1) % 4]);
            idx.squares.push_back(s);
          }
        }
  for (std::size_t t = 0; t < idx.triangles.size(); ++t)
    for (auto e : idx.triangles[t].e) idx.tri_of_edge[e].push_back(t);
  for (std::size_t s = 0; s < idx.squares.size(); ++s)
    for (auto e : idx.squares[s].e) idx.sq_of_edge[e].push_back(s);
  return idx;
}

// Returns the sink position (0..2) of a TypeA match, or -1.
int match_triangle(const DefiningGraph& g, const Triangle& t, const std::vector<Dir>& dir) {
  for (int q = 0; q < 3; ++q) {
    const std::size_t vq = t.v[q];
    const std::size_t p = t.v[(q + 1) % 3];
    const std::size_t r = t.v[(q + 2) % 3];
    const auto ep = *g.find_edge(p, vq);
    const auto er = *g.find_edge(r, vq);
    if (allows(g, ep, dir[ep], p, vq) && allows(g, er, dir[er], r, vq)) return q;
  }
  return -1;
}

// Returns 0 when v[0], v[2] can be the sources, 1 when v[1], v[3] can, else -1.
int match_square(const DefiningGraph& g, const Square& s, const std::vector<Dir>& dir) {
  for (int start = 0; start < 2; ++start) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      const std::size_t a = s.v[i];
      const std::size_t b = s.v[(i + 1) % 4];
      const bool a_is_source = (i % 2) == start;
      ok = a_is_source ? allows(g, s.e[i], dir[s.e[i]], a, b) : allows(g, s.e[i], dir[s.e[i]], b, a);
    }
    if (ok) return start;
  }
  return -1;
}

OrientedEdge realise(const DefiningGraph& g, std::size_t a, std::size_t b) {
  return {a, b, *g.find_edge(a, b)};
}

LinkVertexRef hub_top(const DefiningGraph& g, std::size_t e) {
  return {hub_name(g.vertex(g.tail(e)), g.vertex(g.head(e))), End::Head};
}

std::vector<Dir> directions(const DefiningGraph& g) {
  std::vector<Dir> dir(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    dir[e] = dir_of(g.edge(e));
    if (dir[e] == kUnset)
      throw UnorientedEdge("edge " + g.vertex(g.edge(e).u).name() + "-" + g.vertex(g.edge(e).v).name() +
                           " has no direction");
  }
  return dir;
}

}  // namespace

std::vector<ForbiddenWitness> detect_forbidden(const DefiningGraph& gamma) {
  const auto dir = directions(gamma);
  const auto idx = index_patterns(gamma);
  std::vector<ForbiddenWitness> out;
  for (const auto& t : idx.triangles) {
    const int q = match_triangle(gamma, t, dir);
    if (q < 0) continue;
    const std::size_t vq = t.v[q];
    const std::size_t p = t.v[(q + 1) % 3];
    const std::size_t r = t.v[(q + 2) % 3];
    const std::size_t third = *gamma.find_edge(p, r);
    ForbiddenWitness w{PatternKind::TypeA, {p, r, vq}, {}, {}};
    w.edges = {realise(gamma, p, vq), realise(gamma, r, vq), realise(gamma, gamma.tail(third), gamma.head(third))};
    w.induced_link_loop = {hub_top(gamma, third),
                           {gamma.vertex(p), End::Head},
                           {gamma.vertex(vq), End::Tail},
                           {gamma.vertex(r), End::Head}};
    out.push_back(std::move(w));
  }
  for (const auto& s : idx.squares) {
    const int start = match_square(gamma, s, dir);
    if (start < 0) continue;
    const std::size_t u = s.v[start];
    const std::size_t v = s.v[start + 1];
    const std::size_t w = s.v[(start + 2) % 4];
    const std::size_t t = s.v[(start + 3) % 4];
    ForbiddenWitness wit{PatternKind::TypeB, {u, v, w, t}, {}, {}};
    wit.edges = {realise(gamma, u, v), realise(gamma, w, v), realise(gamma, w, t), realise(gamma, u, t)};
    wit.induced_link_loop = {{gamma.vertex(u), End::Head},
                             {gamma.vertex(v), End::Tail},
                             {gamma.vertex(w), End::Head},
                             {gamma.vertex(t), End::Tail}};
    out.push_back(std::move(wit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation search

namespace {

class OrientationSearch {
 public:
  explicit OrientationSearch(const DefiningGraph& g) : g_(g), idx_(index_patterns(g)), dir_(g.edge_count()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      dir_[e] = dir_of(g.edge(e));
      if (dir_[e] == kUnset) vars_.push_back(e);
    }
    std::stable_sort(vars_.begin(), vars_.end(), [&](std::size_t a, std::size_t b) {
      return weight(a) > weight(b);
    });
  }

  std::size_t variable_count() const noexcept { return vars_.size(); }

  // True if no fully decided pattern is forbidden (checked over all patterns).
  bool consistent() const {
    for (const auto& t : idx_.triangles)
      if (decided(t.e) && match_triangle(g_, t, dir_) >= 0) return false;
    for (const auto& s : idx_.squares)
      if (decided(s.e) && match_square(g_, s, dir_) >= 0) return false;
    return true;
  }

  // Applies the first `depth` variables from the bits of `prefix` (most
  // significant first), checking incrementally. False on a conflict.
  bool apply_prefix(std::uint64_t prefix, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      const bool backward = (prefix >> (depth - 1 - i)) & 1U;
      dir_[vars_[i]] = backward ? kBwd : kFwd;
      if (!locally_ok(vars_[i])) return false;
    }
    return true;
  }

  bool solve(std::size_t pos) {
    if (pos == vars_.size()) return true;
    const std::size_t e = vars_[pos];
    for (Dir d : {kFwd, kBwd}) {
      dir_[e] = d;
      if (locally_ok(e) && solve(pos + 1)) return true;
    }
    dir_[e] = kUnset;
    return false;
  }

  OrientationAssignment assignment() const {
    OrientationAssignment a(g_.edge_count());
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      switch (dir_[e]) {
        case kFwd: a.set(e, Orientation::Forward); break;
        case kBwd: a.set(e, Orientation::Backward); break;
        case kBoth: a.set(e, Orientation::Wildcard); break;
        case kUnset: throw InternalInconsistency("search left an edge unassigned");
      }
    }
    return a;
  }

 private:
  std::size_t weight(std::size_t e) const { return idx_.tri_of_edge[e].size() + idx_.sq_of_edge[e].size(); }

  template <std::size_t N>
  bool decided(const std::array<std::size_t, N>& es) const {
    return std::all_of(es.begin(), es.end(), [&](std::size_t e) { return dir_[e] != kUnset; });
  }

  bool locally_ok(std::size_t e) const {
    for (auto t : idx_.tri_of_edge[e])
      if (decided(idx_.triangles[t].e) && match_triangle(g_, idx_.triangles[t], dir_) >= 0) return false;
    for (auto s : idx_.sq_of_edge[e])
      if (decided(idx_.squares[s].e) && match_square(g_, idx_.squares[s], dir_) >= 0) return false;
    return true;
  }

  const DefiningGraph& g_;
  PatternIndex idx_;
  std::vector<Dir> dir_;
  std::vector<std::size_t> vars_;
};

}  // namespace

std::optional<OrientationAssignment> search_orientation(const DefiningGraph& gamma) {
  OrientationSearch s(gamma);
  if (!s.consistent()) return std::nullopt;
  if (!s.solve(0)) return std::nullopt;
  return s.assignment();
}

std::optional<OrientationAssignment> search_orientation_parallel(const DefiningGraph& gamma) {
  OrientationSearch root(gamma);
  if (!root.consistent()) return std::nullopt;
  // About eight prefixes per thread.
  std::size_t threads = 1;
#ifdef ARTIN_HAVE_OPENMP
  threads = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
#endif
  std::size_t depth = 3;
  while ((std::size_t{1} << depth) < 8 * threads && depth < 10) ++depth;
  depth = std::min(depth, root.variable_count());
  const auto branches = static_cast<std::int64_t>(std::uint64_t{1} << depth);
  std::vector<std::optional<OrientationAssignment>> found(static_cast<std::size_t>(branches));
  std::int64_t best = branches;
#ifdef ARTIN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::int64_t b = 0; b < branches; ++b) {
    std::int64_t current;
#ifdef ARTIN_HAVE_OPENMP
#pragma omp atomic read
#endif
    current = best;
    if (b > current) continue;  // a smaller branch already succeeded
    OrientationSearch s(root);
    if (!s.apply_prefix(static_cast<std::uint64_t>(b), depth) || !s.solve(depth)) continue;
    found[static_cast<std::size_t>(b)] = s.assignment();
#ifdef ARTIN_HAVE_OPENMP
#pragma omp critical(artin_orientation_best)
#endif
    best = std::min(best, b);
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rotation systems

std::vector<Face> trace_faces(const DefiningGraph& gamma) {
  const std::size_t n = gamma.vertex_count();
  for (std::size_t v = 0; v < n; ++v)
    if (gamma.degree(v) % 2 != 0)
      throw OddDegreeVertex(gamma.vertex(v).name() + " has degree " + std::to_string(gamma.degree(v)));

  std::vector<std::vector<std::size_t>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (gamma.degree(v) == 0) continue;
    auto it = gamma.rotation().find(gamma.vertex(v));
    if (it == gamma.rotation().end()) throw InvalidRotation("no rotation given for " + gamma.vertex(v).name());
    for (const auto& nb : it->second) {
      const auto w = gamma.find_vertex(nb);
      if (!w || !gamma.find_edge(v, *w))
        throw InvalidRotation("rotation at " + gamma.vertex(v).name() + " lists non-neighbour " + nb.name());
      rot[v].push_back(*w);
    }
    std::vector<std::size_t> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.size() != gamma.degree(v))
      throw InvalidRotation("rotation at " + gamma.vertex(v).name() + " must list each neighbour once");
  }

  // Dart 2e is u->v of edge e, dart 2e+1 is v->u.
  const std::size_t darts = 2 * gamma.edge_count();
  auto dart = [&](std::size_t from, std::size_t to) {
    const auto e = *gamma.find_edge(from, to);
    return 2 * e + (gamma.edge(e).u == from ? 0 : 1);
  };
  auto dart_from = [&](std::size_t d) { const auto& e = gamma.edge(d / 2); return d % 2 == 0 ? e.u : e.v; };
  auto dart_to = [&](std::size_t d) { const auto& e = gamma.edge(d / 2); return d % 2 == 0 ? e.v : e.u; };

  std::vector<std::int64_t> face_of(darts, -1);
  std::vector<Face> faces;
  std::vector<std::vector<std::size_t>> face_darts;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (face_of[d0] >= 0) continue;
    Face f{{}, -1};
    std::vector<std::size_t> ds;
    std::size_t d = d0;
    while (face_of[d] < 0) {
      face_of[d] = static_cast<std::int64_t>(faces.size());
      ds.push_back(d);
      f.vertices.push_back(dart_from(d));
      // Next dart leaves v towards the successor of u in the rotation at v.
      const std::size_t u = dart_from(d);
      const std::size_t v = dart_to(d);
      const auto& r = rot[v];
      const auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
      d = dart(v, r[(pos + 1) % r.size()]);
    }
    faces.push_back(std::move(f));
    face_darts.push_back(std::move(ds));
  }

  // Two-colour the dual graph.
  for (std::size_t start = 0; start < faces.size(); ++start) {
    if (faces[start].color >= 0) continue;
    faces[start].color = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const auto f = stack.back();
      stack.pop_back();
      for (auto d : face_darts[f]) {
        const auto other = static_cast<std::size_t>(face_of[d ^ 1U]);
        if (faces[other].color < 0) {
          faces[other].color = 1 - faces[f].color;
          stack.push_back(other);
        } else if (faces[other].color == faces[f].color) {
          throw DualNotBipartite("faces on both sides of edge " + gamma.vertex(dart_from(d)).name() + "-" +
                                 gamma.vertex(dart_to(d)).name() + " get the same colour");
        }
      }
    }
  }
  return faces;
}

OrientationAssignment orient_from_rotation_system(const DefiningGraph& gamma) {
  const auto faces = trace_faces(gamma);
  OrientationAssignment a(gamma.edge_count());
  for (const auto& f : faces) {
    if (f.color != 0) continue;
    const std::size_t k = f.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t from = f.vertices[i];
      const std::size_t to = f.vertices[(i + 1) % k];
      const auto e = *gamma.find_edge(from, to);
      if (gamma.edge(e).bidirectional()) {
        a.set(e, Orientation::Wildcard);
      } else {
        a.set(e, gamma.edge(e).u == from ? Orientation::Forward : Orientation::Backward);
      }
    }
  }
  if (!a.covers_all()) throw InternalInconsistency("an edge lies on no colour-0 face");
  return a;
}

nlohmann::json witness_to_json(const DefiningGraph& gamma, const ForbiddenWitness& w) {
  nlohmann::json j;
  j["kind"] = kind_name(w.kind);
  j["vertices"] = nlohmann::json::array();
  for (auto v : w.vertices) j["vertices"].push_back(gamma.vertex(v).name());
  j["edges"] = nlohmann::json::array();
  for (const auto& e : w.edges) j["edges"].push_back(gamma.vertex(e.tail).name() + ">" + gamma.vertex(e.head).name());
  j["link_loop"] = nlohmann::json::array();
  for (const auto& v : w.induced_link_loop) j["link_loop"].push_back(v.label());
  return j;
}

std::string witness_str(const DefiningGraph& gamma, const ForbiddenWitness& w) {
  std::string out = std::string("type ") + kind_name(w.kind) + ":";
  for (const auto& e : w.edges) out += " " + gamma.vertex(e.tail).name() + "->" + gamma.vertex(e.head).name();
  out += " | loop";
  for (std::size_t i = 0; i < w.induced_link_loop.size(); ++i)
    out += (i ? " - " : " ") + w.induced_link_loop[i].label();
  return out;
}

}  // namespace artin
