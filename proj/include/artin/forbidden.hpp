#pragma once

// Oriented subgraphs of the defining graph that force length-4 loops in the
// link, and the search for orientations avoiding them.
//
//   TypeA: a triangle with a vertex receiving both of its triangle edges
//          (equivalently, an acyclically oriented triangle).
//   TypeB: a 4-cycle u -> v <- w -> t <- u (two sources, two sinks).
//
// Label-2 edges match either direction.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/link.hpp"
#include "artin/presentation.hpp"

namespace artin {

enum class PatternKind { TypeA, TypeB };

struct OrientedEdge {
  std::size_t tail;
  std::size_t head;
  std::size_t gamma_edge;
};

struct LinkVertexRef {
  GeneratorId generator;
  End end;

  std::string label() const { return LinkVertex{generator, end, 0, false}.label(); }
};

struct ForbiddenWitness {
  PatternKind kind;
  // TypeA: {p, r, q} with p -> q <- r.  TypeB: {u, v, w, t} as above.
  std::vector<std::size_t> vertices;
  std::vector<OrientedEdge> edges;
  // Length-4 loop in the link realising the pattern.
  std::vector<LinkVertexRef> induced_link_loop;
};

const char* kind_name(PatternKind k);

// Throws UnorientedEdge if an edge of label >= 3 has no direction.
std::vector<ForbiddenWitness> detect_forbidden(const DefiningGraph& gamma);

// Completes the undirected edges of label >= 3 so that detect_forbidden is
// empty, or returns nullopt when no completion exists. Label-2 edges come back
// as Wildcard. Returns the least completion in the search's variable order,
// trying Forward before Backward.
std::optional<OrientationAssignment> search_orientation(const DefiningGraph& gamma);
// Same answer; the first branching levels are split across OpenMP threads.
std::optional<OrientationAssignment> search_orientation_parallel(const DefiningGraph& gamma);

struct Face {
  std::vector<std::size_t> vertices;  // boundary walk
  int color;                          // 0 or 1
};

// Faces of the embedding given by the rotation system, two-coloured.
// Throws InvalidRotation, OddDegreeVertex or DualNotBipartite.
std::vector<Face> trace_faces(const DefiningGraph& gamma);

// Orients every edge along the boundary walk of its colour-0 face.
OrientationAssignment orient_from_rotation_system(const DefiningGraph& gamma);

nlohmann::json witness_to_json(const DefiningGraph& gamma, const ForbiddenWitness& w);
std::string witness_str(const DefiningGraph& gamma, const ForbiddenWitness& w);

}  // namespace artin
