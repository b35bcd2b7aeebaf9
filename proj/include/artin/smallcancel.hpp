#pragma once

// Pieces and the C(p) / T(q) conditions. T(q) is read off the link: it holds
// when every embedded loop of the vertex link has at least q edges.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/link.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

inline constexpr std::size_t kTCap = 12;

// Relators and their inverses as cyclic words.
std::set<CyclicWord> symmetrize(const Presentation& p);

struct PieceTable {
  // Words of length below the relator length occurring at two or more
  // positions (class, offset) of the symmetrized relators.
  std::set<FreeWord> pieces;
  std::size_t max_piece_len = 0;
  // Per relator: fewest pieces whose concatenation is a cyclic permutation of
  // the relator or its inverse; nullopt if no such decomposition exists.
  std::vector<std::optional<std::size_t>> min_decomposition;

  bool is_piece(const FreeWord& w) const { return pieces.contains(w); }
  // One piece per line, sorted by (length, word), then the decompositions.
  std::string dump() const;
};

PieceTable compute_pieces(const Presentation& p);

struct SmallCancellation {
  std::size_t c = 0;  // largest p with C(p)
  bool c_capped = false;
  std::size_t t = 0;  // largest q with T(q), that is the link girth
  bool t_capped = false;
  std::size_t max_piece_len = 0;

  bool has_c(std::size_t p) const noexcept { return c >= p; }
  bool has_t(std::size_t q) const noexcept { return t >= q; }
};

// `l` must be the link of p's complex. C is capped at the longest relator and
// T at kTCap.
SmallCancellation check_conditions(const Presentation& p, const LinkGraph& l);

}  // namespace artin
