#pragma once

// Girth and minimum-angle embedded cycles of link graphs.
//
// Both minimisations run the same per-edge kernel: for e = {u, v}, the best
// cycle through e is e plus a shortest u-v path avoiding e. The parallel
// versions split the edge loop across OpenMP threads; the `serial` namespace
// holds the reference loop. The reduction is a minimum under the total order
// (value, length, canonical vertex sequence), so both give identical results.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/angle.hpp"
#include "artin/link.hpp"

namespace artin {

struct EmbeddedLoop {
  // Cyclic sequence starting at the smallest vertex index, oriented so the
  // second vertex is smaller than the last.
  std::vector<std::size_t> vertices;
  // edges[i] joins vertices[i] and vertices[(i + 1) % n].
  std::vector<std::size_t> edges;
  PiAngle angle_sum;

  std::size_t length() const noexcept { return edges.size(); }
  std::size_t count(const LinkGraph& l, EdgeKind kind) const;

  friend bool operator==(const EmbeddedLoop& a, const EmbeddedLoop& b) { return a.vertices == b.vertices; }
};

// Builds the canonical loop through the given cyclic vertex sequence. Throws
// InternalInconsistency if consecutive vertices are not adjacent.
EmbeddedLoop make_loop(const LinkGraph& l, std::vector<std::size_t> cyclic_vertices,
                       std::span<const PiAngle> angles = {});
// Re-checks distinctness, adjacency and edge bookkeeping.
bool is_embedded_loop(const LinkGraph& l, const EmbeddedLoop& loop);
// "a_bar - b - x_{b,c} - c"
std::string loop_str(const LinkGraph& l, const EmbeddedLoop& loop);
std::vector<std::string> loop_labels(const LinkGraph& l, const EmbeddedLoop& loop);

struct GirthResult {
  std::optional<std::size_t> girth;  // nullopt for a forest
  std::optional<EmbeddedLoop> witness;
};

struct AngleCycleResult {
  std::optional<PiAngle> value;  // nullopt for a forest
  std::optional<EmbeddedLoop> witness;
};

GirthResult girth(const LinkGraph& l);
// Throws UnassignedAngles unless there is one positive angle per edge.
AngleCycleResult min_angle_cycle(const LinkGraph& l, std::span<const PiAngle> angles);

namespace serial {
GirthResult girth(const LinkGraph& l);
AngleCycleResult min_angle_cycle(const LinkGraph& l, std::span<const PiAngle> angles);
}  // namespace serial

inline constexpr std::size_t kShortLoopLimit = 8;

// Every embedded loop with at most max_len edges, once each up to rotation and
// reflection, sorted by (length, vertices). Throws LimitExceeded above
// kShortLoopLimit.
std::vector<EmbeddedLoop> enumerate_short_loops(const LinkGraph& l, std::size_t max_len);

}  // namespace artin
