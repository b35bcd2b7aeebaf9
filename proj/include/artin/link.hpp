#pragma once

// The presentation 2-complex of a triangular presentation and the link of its
// single 0-cell.
//
// Each generator g contributes two link vertices: g (head end, plain) and
// g_bar (tail end). Levels: hub tails 1, non-hub tails 2, non-hub heads 3,
// hub heads 4. A 2-cell with boundary h^-1 u v contributes the corners
//   {h_bar, u_bar}  bottom,  {u, v_bar}  middle,  {v, h}  top.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

enum class CellLength { Unit, Sqrt2 };

struct OneCell {
  GeneratorId generator;
  bool hub;
  bool special;
  CellLength length = CellLength::Unit;
};

struct TwoCell {
  FreeWord boundary;  // h^-1 u v
  std::size_t piece;  // index of the hub's local piece
};

class TwoComplex {
 public:
  static constexpr std::size_t zero_cells = 1;

  TwoComplex(std::vector<OneCell> one_cells, std::vector<TwoCell> two_cells, std::vector<GeneratorId> piece_hubs);

  const std::vector<OneCell>& one_cells() const noexcept { return one_cells_; }
  const std::vector<TwoCell>& two_cells() const noexcept { return two_cells_; }
  const std::vector<GeneratorId>& piece_hubs() const noexcept { return piece_hubs_; }
  std::size_t one_cell_index(const GeneratorId& g) const;

 private:
  std::vector<OneCell> one_cells_;
  std::vector<TwoCell> two_cells_;
  std::vector<GeneratorId> piece_hubs_;
};

// Throws NotTriangular unless every relator has the form h^-1 u v.
// `special` lists the generators coming from vertices of the defining graph.
TwoComplex build_complex(const Presentation& p, const std::set<GeneratorId>& special);
TwoComplex build_complex(const TriangularPresentation& tp);

enum class End { Tail, Head };
enum class EdgeKind { Bottom, Middle, Top };

struct LinkVertex {
  GeneratorId generator;
  End end;
  int level;
  bool special;

  // "g" for the head end, "g_bar" for the tail end.
  std::string label() const;

  friend bool operator==(const LinkVertex&, const LinkVertex&) = default;
};

struct LinkEdge {
  std::size_t a;  // a < b
  std::size_t b;
  EdgeKind kind;
  std::size_t cell;    // 2-cell index
  int corner;          // 0 bottom, 1 middle, 2 top
  std::size_t piece;   // local piece (hub) index
};

class LinkGraph {
 public:
  struct Adjacent {
    std::size_t vertex;
    std::size_t edge;
  };

  LinkGraph() = default;
  // Throws InternalInconsistency on parallel edges or level violations.
  LinkGraph(std::vector<LinkVertex> vertices, std::vector<LinkEdge> edges, std::vector<GeneratorId> piece_hubs);

  const std::vector<LinkVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<LinkEdge>& edges() const noexcept { return edges_; }
  const LinkVertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const LinkEdge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Sorted by neighbour index.
  std::span<const Adjacent> adjacent(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> find_vertex(const GeneratorId& g, End end) const;
  // Throws VertexNotFound.
  std::size_t vertex_index(const GeneratorId& g, End end) const;
  // Accepts "g" or "g_bar".
  std::size_t vertex_index(const std::string& label) const;
  const std::vector<GeneratorId>& piece_hubs() const noexcept { return piece_hubs_; }

 private:
  std::vector<LinkVertex> vertices_;
  std::vector<LinkEdge> edges_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::vector<GeneratorId> piece_hubs_;
};

LinkGraph build_link(const TwoComplex& k);
// Convenience: triangular presentation -> complex -> link.
LinkGraph build_link(const DefiningGraph& gamma);

// Keeps the selected edges and every vertex they touch.
LinkGraph edge_subgraph(const LinkGraph& l, std::span<const std::size_t> edges);
// Keeps the listed vertices and every edge between them.
LinkGraph induced_subgraph(const LinkGraph& l, std::span<const std::size_t> vertices);

LinkGraph middle_subgraph(const LinkGraph& l);
// Vertices within `radius` edges of v. Throws VertexNotFound.
LinkGraph neighborhood(const LinkGraph& l, std::size_t v, std::size_t radius);
LinkGraph neighborhood(const LinkGraph& l, const GeneratorId& g, End end, std::size_t radius);

// Edge indices grouped by local piece, in piece order.
std::vector<std::vector<std::size_t>> local_pieces(const LinkGraph& l);

struct Component {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::size_t max_degree = 0;

  bool is_path() const noexcept { return vertices.size() == edges.size() + 1 && max_degree <= 2; }
};

// Connected components with at least one edge, ordered by smallest vertex.
std::vector<Component> components(const LinkGraph& l);
bool is_forest(const LinkGraph& l);

std::string to_dot(const LinkGraph& l);
nlohmann::json link_to_json(const LinkGraph& l);

const char* kind_name(EdgeKind k);

}  // namespace artin
