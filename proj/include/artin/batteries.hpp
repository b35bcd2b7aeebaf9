#pragma once

// Mechanised checks of the structural lemmas over parameter sweeps.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artin/presentation.hpp"

namespace artin {

struct BatteryResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // first few, in case order
  double seconds = 0.0;

  bool ok() const noexcept { return cases > 0 && passed == cases; }
};

// Triangle a -> b (m), b -> c (n), c -> a (p).
DefiningGraph oriented_triangle(int m, int n, int p);

// verify_tietze_equivalence(m) for 2 <= m <= max_m.
BatteryResult battery_tietze(int max_m);
// Triangular presentation of the oriented triangle: generator and relator
// counts m+n+p, and per-edge Tietze agreement with the standard relators,
// for all m, n, p in [lo, hi].
BatteryResult battery_triangle_presentation(int lo, int hi);
// For all m, n, p in [lo, hi] (lo >= 3): link girth 6, the middle edges form
// m+n+p-9 single edges plus three paths of 3 edges, and radius-2
// neighbourhoods of top and bottom vertices are trees.
BatteryResult battery_short_loops(int lo, int hi);
// Over decorated graphs on `vertices` vertices with the given labels: no
// forbidden subgraph iff link girth >= 6, a forbidden subgraph iff girth 4,
// and every witness loop lies in the link. With `one_wildcard` every graph
// carries exactly one label-2 wildcard edge.
BatteryResult battery_forbidden_oracle(std::size_t vertices, const std::vector<int>& labels, bool one_wildcard);
// Triangle-free decorated graphs with the given labels (2 becomes a
// wildcard): B2 minimum loop angle >= 2 pi, length-4 loops use 4 middle
// edges, length-6 loops at least 2.
BatteryResult battery_triangle_free_b2(std::size_t vertices, const std::vector<int>& labels);

// The forbidden-subgraph oracle check on `count` random graphs: each pair of
// the `vertices` vertices is an edge with probability 1/2, labels drawn
// uniformly from `labels` (2 becomes a wildcard), directions at random.
BatteryResult battery_random_graphs(std::size_t vertices, const std::vector<int>& labels, std::size_t count,
                                    std::uint64_t seed);

std::string battery_line(const BatteryResult& r);

}  // namespace artin
