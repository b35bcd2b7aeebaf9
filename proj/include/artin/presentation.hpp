#pragma once

// Defining graphs and the standard / triangular Artin presentations.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

enum class Orientation { Forward, Backward, Unoriented, Wildcard };

// Edge between vertex indices u and v. Forward means u -> v.
struct GammaEdge {
  std::size_t u;
  std::size_t v;
  int label;
  Orientation orientation;

  // Label-2 edges carry both directions in the link whatever their marker.
  bool bidirectional() const noexcept { return label == 2; }

  friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

class DefiningGraph {
 public:
  std::size_t add_vertex(const GeneratorId& v);
  // Declares missing endpoints. Throws InvalidGraph on loops, multi-edges,
  // labels below 2 and wildcards on labels other than 2.
  std::size_t add_edge(const GeneratorId& u, const GeneratorId& v, int label,
                       Orientation orientation = Orientation::Unoriented);
  void set_orientation(std::size_t edge, Orientation orientation);
  // Cyclic order of neighbours around v.
  void set_rotation(const GeneratorId& v, std::vector<GeneratorId> order);

  const std::vector<GeneratorId>& vertices() const noexcept { return vertices_; }
  const std::vector<GammaEdge>& edges() const noexcept { return edges_; }
  const GammaEdge& edge(std::size_t e) const { return edges_.at(e); }
  const GeneratorId& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const GeneratorId& v) const;
  std::size_t vertex_index(const GeneratorId& v) const;
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  const std::map<GeneratorId, std::vector<GeneratorId>>& rotation() const noexcept { return rotation_; }

  // Tail/head as used for the triangular presentation. Label-2 edges without
  // an explicit direction use the lexicographically smaller endpoint as tail.
  // Throws UnorientedEdge for an undirected edge of label >= 3.
  std::size_t tail(std::size_t e) const;
  std::size_t head(std::size_t e) const;

  bool fully_oriented() const noexcept;
  bool large_type() const noexcept;
  bool triangle_free() const;
  // Every directed edge reversed; wildcards untouched.
  DefiningGraph reversed() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<GeneratorId> vertices_;
  std::map<GeneratorId, std::size_t> index_;
  std::vector<GammaEdge> edges_;
  std::map<GeneratorId, std::vector<GeneratorId>> rotation_;
};

// A direction for each edge of a graph. Entries are Forward, Backward or
// Wildcard; missing entries leave the graph's own marker in place.
class OrientationAssignment {
 public:
  OrientationAssignment() = default;
  explicit OrientationAssignment(std::size_t edge_count) : dirs_(edge_count) {}

  std::size_t size() const noexcept { return dirs_.size(); }
  void set(std::size_t edge, Orientation o);
  std::optional<Orientation> get(std::size_t edge) const { return dirs_.at(edge); }
  bool covers_all() const noexcept;

  friend bool operator==(const OrientationAssignment&, const OrientationAssignment&) = default;
  friend auto operator<=>(const OrientationAssignment&, const OrientationAssignment&) = default;

 private:
  std::vector<std::optional<Orientation>> dirs_;
};

// Fully oriented copy. Label-2 edges left undirected become Wildcard.
// Throws IncompleteAssignment when an undirected edge of label >= 3 has no entry.
DefiningGraph resolve_orientations(const DefiningGraph& gamma, const OrientationAssignment& assignment);

struct RelatorSource {
  std::size_t gamma_edge;
  std::size_t position;  // index in the relation chain

  friend bool operator==(const RelatorSource&, const RelatorSource&) = default;
};

struct Relator {
  FreeWord word;
  std::optional<RelatorSource> source;
};

class Presentation {
 public:
  Presentation() = default;
  // Throws InvalidPresentation on undeclared generators, empty or
  // non-cyclically-reduced relators, duplicate generators or relators.
  Presentation(std::vector<GeneratorId> generators, std::vector<Relator> relators,
               std::set<GeneratorId> hubs = {});

  const std::vector<GeneratorId>& generators() const noexcept { return generators_; }
  const std::vector<Relator>& relators() const noexcept { return relators_; }
  const std::set<GeneratorId>& hubs() const noexcept { return hubs_; }
  bool is_hub(const GeneratorId& g) const { return hubs_.contains(g); }

  // All relators have the form h^-1 u v, h a hub, u and v not hubs.
  bool is_triangular() const;

  // `gen: a b c` followed by one `rel: <word>` line per relator.
  std::string str() const;
  // Inverse of str(). Hubs are inferred from leading inverse letters of
  // length-3 relators.
  static Presentation parse(const std::string& text);

 private:
  std::vector<GeneratorId> generators_;
  std::vector<Relator> relators_;
  std::set<GeneratorId> hubs_;
};

struct HubRecord {
  GeneratorId hub;
  std::vector<GeneratorId> cycle;  // tail, head, d_3, ..., d_m
  std::size_t gamma_edge;
};

struct TriangularPresentation {
  Presentation presentation;
  std::vector<HubRecord> hubs;
  std::vector<GeneratorId> standard_generators;  // the vertices of the graph
};

// (a,b)_k: alternating word of k letters starting with a.
FreeWord alternating(const GeneratorId& a, const GeneratorId& b, int k);
FreeWord standard_relator(const GeneratorId& a, const GeneratorId& b, int m);

GeneratorId hub_name(const GeneratorId& tail, const GeneratorId& head);
GeneratorId chain_name(const GeneratorId& tail, const GeneratorId& head, int i);

Presentation build_standard(const DefiningGraph& gamma);
// Throws UnorientedEdge if an edge of label >= 3 has no direction.
TriangularPresentation build_triangular(const DefiningGraph& gamma);

struct TwoGeneratorFamily {
  Presentation g;  // <a1, a2 | (a1,a2)_m = (a2,a1)_m>
  Presentation h;  // <x, a1 | ...> split by parity of m
  Presentation i;  // <x, a1..am | x = a1a2, ..., x = am a1>
};

TwoGeneratorFamily build_two_generator_family(int m);

// g^e written as a word in the other generators of a relator where g occurs
// exactly once.
FreeWord solve_for(const FreeWord& relator, const GeneratorId& g);

// Eliminates cycle[1..] from the relators hub^-1 c_i c_{i+1}, leaving one
// relator in hub and cycle[0]. `trace` receives each elimination step.
FreeWord compose_chain(const GeneratorId& hub, const std::vector<GeneratorId>& cycle,
                       std::vector<std::string>* trace = nullptr);

struct VerificationReport {
  int m = 0;
  bool h_to_g = false;      // x -> a1 a2 turns the H relator into the G relator
  bool g_to_h = false;      // a2 -> a1^-1 x turns the G relator into the H relator
  bool i_to_h = false;      // chaining the I relators gives the H relator
  std::vector<std::string> trace;

  bool ok() const noexcept { return h_to_g && g_to_h && i_to_h; }
};

VerificationReport verify_tietze_equivalence(int m);

// Per edge: composing the triangular chain and substituting hub -> tail head
// reproduces the standard relator up to rotation and inversion.
bool verify_triangular_against_standard(const DefiningGraph& gamma, std::vector<std::string>* trace = nullptr);

}  // namespace artin
