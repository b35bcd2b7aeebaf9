#pragma once

// Enumeration of decorated graphs on a fixed vertex set, one per isomorphism
// class. A decoration gives each edge a label and an orientation; vertex
// permutations act on both (Forward and Backward swap when a permutation
// reverses the order of an edge's endpoints).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "artin/presentation.hpp"

namespace artin {

struct Decoration {
  int label;
  Orientation orientation;  // Forward: smaller vertex index -> larger

  friend bool operator==(const Decoration&, const Decoration&) = default;
};

struct DecoratedEdge {
  std::uint8_t u;  // u < v
  std::uint8_t v;
  std::uint8_t decoration;  // index into the alphabet
};

using DecoratedGraph = std::vector<DecoratedEdge>;

// Alphabets must be closed under reversing Forward/Backward.
std::vector<Decoration> directed_alphabet(const std::vector<int>& labels);
// directed_alphabet plus a label-2 wildcard (last entry).
std::vector<Decoration> directed_alphabet_with_wildcard(const std::vector<int>& labels);

struct EnumerationStats {
  std::size_t shapes = 0;     // undecorated isomorphism classes
  std::size_t graphs = 0;     // decorated classes emitted
};

// Emits one representative per isomorphism class of decorated graphs on
// `n` vertices (n <= 6) whose decoration multiset passes `accept`.
// `accept` receives the per-edge decoration indices.
EnumerationStats enumerate_decorated_graphs(
    std::size_t n, const std::vector<Decoration>& alphabet,
    const std::function<bool(const std::vector<std::uint8_t>&)>& accept,
    const std::function<void(const DecoratedGraph&)>& emit,
    const std::function<bool(const std::vector<std::pair<std::size_t, std::size_t>>&)>& shape_filter = {});

// Vertices v0..v{n-1}, edges in the given order.
DefiningGraph to_defining_graph(std::size_t n, const std::vector<Decoration>& alphabet, const DecoratedGraph& g);

}  // namespace artin
