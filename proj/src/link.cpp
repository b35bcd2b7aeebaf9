#include "artin/link.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

#include "artin/errors.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// TwoComplex

TwoComplex::TwoComplex(std::vector<OneCell> one_cells, std::vector<TwoCell> two_cells,
                       std::vector<GeneratorId> piece_hubs)
    : one_cells_(std::move(one_cells)), two_cells_(std::move(two_cells)), piece_hubs_(std::move(piece_hubs)) {}

std::size_t TwoComplex::one_cell_index(const GeneratorId& g) const {
  for (std::size_t i = 0; i < one_cells_.size(); ++i)
    if (one_cells_[i].generator == g) return i;
  throw VertexNotFound("no 1-cell for " + g.name());
}

TwoComplex build_complex(const Presentation& p, const std::set<GeneratorId>& special) {
  if (!p.is_triangular()) {
    for (const auto& r : p.relators())
      if (r.word.size() != 3) throw NotTriangular("relator of length " + std::to_string(r.word.size()) + ": " + r.word.str());
    throw NotTriangular("relators are not all of the form h^-1 u v");
  }
  std::vector<OneCell> ones;
  std::vector<GeneratorId> piece_hubs;
  std::map<GeneratorId, std::size_t> piece_index;
  for (const auto& g : p.generators()) {
    const bool hub = p.is_hub(g);
    ones.push_back({g, hub, special.contains(g)});
    if (hub) {
      piece_index.emplace(g, piece_hubs.size());
      piece_hubs.push_back(g);
    }
  }
  std::vector<TwoCell> twos;
  twos.reserve(p.relators().size());
  for (const auto& r : p.relators()) twos.push_back({r.word, piece_index.at(r.word[0].generator())});
  return TwoComplex(std::move(ones), std::move(twos), std::move(piece_hubs));
}

TwoComplex build_complex(const TriangularPresentation& tp) {
  return build_complex(tp.presentation,
                       std::set<GeneratorId>(tp.standard_generators.begin(), tp.standard_generators.end()));
}

// ---------------------------------------------------------------------------
// LinkGraph

std::string LinkVertex::label() const {
  return end == End::Head ? generator.name() : generator.name() + "_bar";
}

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Bottom: return "bottom";
    case EdgeKind::Middle: return "middle";
    case EdgeKind::Top: return "top";
  }
  return "?";
}

LinkGraph::LinkGraph(std::vector<LinkVertex> vertices, std::vector<LinkEdge> edges, std::vector<GeneratorId> piece_hubs)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      adjacency_(vertices_.size()),
      piece_hubs_(std::move(piece_hubs)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    if (ed.a > ed.b) std::swap(ed.a, ed.b);
    if (ed.a == ed.b || ed.b >= vertices_.size()) throw InternalInconsistency("bad link edge");
    const int la = vertices_[ed.a].level;
    const int lb = vertices_[ed.b].level;
    if (std::abs(la - lb) != 1) throw InternalInconsistency("link edge between non-adjacent levels");
    const int low = std::min(la, lb);
    if ((ed.kind == EdgeKind::Middle) != (low == 2)) throw InternalInconsistency("middle edge not between levels 2 and 3");
    adjacency_[ed.a].push_back({ed.b, e});
    adjacency_[ed.b].push_back({ed.a, e});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Adjacent& x, const Adjacent& y) { return x.vertex < y.vertex; });
    for (std::size_t i = 1; i < adj.size(); ++i)
      if (adj[i].vertex == adj[i - 1].vertex) throw InternalInconsistency("parallel edges in link");
  }
}

std::optional<std::size_t> LinkGraph::find_edge(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_.at(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v, [](const Adjacent& a, std::size_t x) { return a.vertex < x; });
  if (it != adj.end() && it->vertex == v) return it->edge;
  return std::nullopt;
}

std::optional<std::size_t> LinkGraph::find_vertex(const GeneratorId& g, End end) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].generator == g && vertices_[i].end == end) return i;
  return std::nullopt;
}

std::size_t LinkGraph::vertex_index(const GeneratorId& g, End end) const {
  if (auto i = find_vertex(g, end)) return *i;
  throw VertexNotFound("no link vertex " + LinkVertex{g, end, 0, false}.label());
}

std::size_t LinkGraph::vertex_index(const std::string& label) const {
  constexpr std::string_view bar = "_bar";
  if (label.size() > bar.size() && label.ends_with(bar))
    return vertex_index(GeneratorId(label.substr(0, label.size() - bar.size())), End::Tail);
  return vertex_index(GeneratorId(label), End::Head);
}

LinkGraph build_link(const TwoComplex& k) {
  std::vector<LinkVertex> verts;
  verts.reserve(2 * k.one_cells().size());
  std::map<GeneratorId, std::size_t> base;
  for (const auto& c : k.one_cells()) {
    base.emplace(c.generator, verts.size());
    verts.push_back({c.generator, End::Tail, c.hub ? 1 : 2, c.special});
    verts.push_back({c.generator, End::Head, c.hub ? 4 : 3, c.special});
  }
  // A letter is traversed from its initial end to its terminal end.
  auto initial = [&](const Letter& l) { return base.at(l.generator()) + (l.exponent() == 1 ? 0 : 1); };
  auto terminal = [&](const Letter& l) { return base.at(l.generator()) + (l.exponent() == 1 ? 1 : 0); };
  static constexpr EdgeKind kinds[3] = {EdgeKind::Bottom, EdgeKind::Middle, EdgeKind::Top};

  std::vector<LinkEdge> edges;
  edges.reserve(3 * k.two_cells().size());
  for (std::size_t c = 0; c < k.two_cells().size(); ++c) {
    const auto& cell = k.two_cells()[c];
    const auto& w = cell.boundary;
    for (int corner = 0; corner < 3; ++corner) {
      const Letter& l1 = w[static_cast<std::size_t>(corner)];
      const Letter& l2 = w[static_cast<std::size_t>((corner + 1) % 3)];
      edges.push_back({terminal(l1), initial(l2), kinds[corner], c, corner, cell.piece});
    }
  }
  return LinkGraph(std::move(verts), std::move(edges), k.piece_hubs());
}

LinkGraph build_link(const DefiningGraph& gamma) { return build_link(build_complex(build_triangular(gamma))); }

LinkGraph edge_subgraph(const LinkGraph& l, std::span<const std::size_t> edges) {
  std::vector<char> keep(l.vertex_count(), 0);
  for (auto e : edges) keep[l.edge(e).a] = keep[l.edge(e).b] = 1;
  std::vector<std::size_t> remap(l.vertex_count(), 0);
  std::vector<LinkVertex> verts;
  for (std::size_t v = 0; v < l.vertex_count(); ++v)
    if (keep[v]) {
      remap[v] = verts.size();
      verts.push_back(l.vertex(v));
    }
  std::vector<std::size_t> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<LinkEdge> out;
  for (auto e : sorted) {
    LinkEdge ed = l.edge(e);
    ed.a = remap[ed.a];
    ed.b = remap[ed.b];
    out.push_back(ed);
  }
  return LinkGraph(std::move(verts), std::move(out), l.piece_hubs());
}

LinkGraph induced_subgraph(const LinkGraph& l, std::span<const std::size_t> vertices) {
  std::vector<char> keep(l.vertex_count(), 0);
  for (auto v : vertices) keep.at(v) = 1;
  std::vector<std::size_t> remap(l.vertex_count(), 0);
  std::vector<LinkVertex> verts;
  for (std::size_t v = 0; v < l.vertex_count(); ++v)
    if (keep[v]) {
      remap[v] = verts.size();
      verts.push_back(l.vertex(v));
    }
  std::vector<LinkEdge> out;
  for (const auto& ed : l.edges())
    if (keep[ed.a] && keep[ed.b]) {
      LinkEdge copy = ed;
      copy.a = remap[ed.a];
      copy.b = remap[ed.b];
      out.push_back(copy);
    }
  return LinkGraph(std::move(verts), std::move(out), l.piece_hubs());
}

LinkGraph middle_subgraph(const LinkGraph& l) {
  std::vector<std::size_t> mids;
  for (std::size_t e = 0; e < l.edge_count(); ++e)
    if (l.edge(e).kind == EdgeKind::Middle) mids.push_back(e);
  return edge_subgraph(l, mids);
}

LinkGraph neighborhood(const LinkGraph& l, std::size_t v, std::size_t radius) {
  if (v >= l.vertex_count()) throw VertexNotFound("link vertex index " + std::to_string(v) + " out of range");
  std::vector<std::size_t> dist(l.vertex_count(), SIZE_MAX);
  std::queue<std::size_t> q;
  dist[v] = 0;
  q.push(v);
  std::vector<std::size_t> reached;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    reached.push_back(u);
    if (dist[u] == radius) continue;
    for (const auto& a : l.adjacent(u))
      if (dist[a.vertex] == SIZE_MAX) {
        dist[a.vertex] = dist[u] + 1;
        q.push(a.vertex);
      }
  }
  return induced_subgraph(l, reached);
}

LinkGraph neighborhood(const LinkGraph& l, const GeneratorId& g, End end, std::size_t radius) {
  return neighborhood(l, l.vertex_index(g, end), radius);
}

std::vector<std::vector<std::size_t>> local_pieces(const LinkGraph& l) {
  std::vector<std::vector<std::size_t>> out(l.piece_hubs().size());
  for (std::size_t e = 0; e < l.edge_count(); ++e) out.at(l.edge(e).piece).push_back(e);
  return out;
}

std::vector<Component> components(const LinkGraph& l) {
  std::vector<char> seen(l.vertex_count(), 0);
  std::vector<Component> out;
  for (std::size_t s = 0; s < l.vertex_count(); ++s) {
    if (seen[s] || l.degree(s) == 0) continue;
    Component c;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::set<std::size_t> edges;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      c.vertices.push_back(u);
      c.max_degree = std::max(c.max_degree, l.degree(u));
      for (const auto& a : l.adjacent(u)) {
        edges.insert(a.edge);
        if (!seen[a.vertex]) {
          seen[a.vertex] = 1;
          stack.push_back(a.vertex);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edges.assign(edges.begin(), edges.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_forest(const LinkGraph& l) {
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < l.vertex_count(); ++v)
    if (l.degree(v) == 0) ++isolated;
  const auto comps = components(l);
  // A graph is a forest iff |E| = |V| - (number of components).
  return l.edge_count() + comps.size() + isolated == l.vertex_count();
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const LinkGraph& l) {
  std::string out = "graph link {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int level = 1; level <= 4; ++level) {
    out += "  { rank=same;";
    for (const auto& v : l.vertices())
      if (v.level == level) out += " " + quoted(v.label()) + ";";
    out += " }\n";
  }
  for (const auto& v : l.vertices())
    if (v.special) out += "  " + quoted(v.label()) + " [shape=doublecircle];\n";
  for (const auto& e : l.edges()) {
    out += "  " + quoted(l.vertex(e.a).label()) + " -- " + quoted(l.vertex(e.b).label());
    if (e.kind == EdgeKind::Middle) out += " [style=bold, color=red]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json link_to_json(const LinkGraph& l) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : l.vertices())
    j["vertices"].push_back({{"label", v.label()}, {"level", v.level}, {"special", v.special}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : l.edges())
    j["edges"].push_back({{"a", l.vertex(e.a).label()},
                          {"b", l.vertex(e.b).label()},
                          {"kind", kind_name(e.kind)},
                          {"cell", e.cell},
                          {"corner", e.corner},
                          {"piece", l.piece_hubs().at(e.piece).name()}});
  return j;
}

}  // namespace artin
