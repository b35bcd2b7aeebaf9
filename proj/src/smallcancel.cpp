#include "artin/smallcancel.hpp"

#include <algorithm>
#include <map>

#include "artin/cycles.hpp"

namespace artin {

std::set<CyclicWord> symmetrize(const Presentation& p) {
  std::set<CyclicWord> out;
  for (const auto& r : p.relators()) {
    const CyclicWord c(r.word);
    out.insert(c);
    out.insert(c.inverse());
  }
  return out;
}

namespace {

FreeWord cyclic_sub(const FreeWord& w, std::size_t start, std::size_t len) {
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(w[(start + k) % w.size()]);
  return FreeWord(std::move(out));
}

std::optional<std::size_t> fewest_pieces(const FreeWord& w, const std::set<FreeWord>& pieces) {
  const std::size_t n = w.size();
  std::optional<std::size_t> best;
  for (std::size_t rot = 0; rot < n; ++rot) {
    std::vector<std::optional<std::size_t>> dp(n + 1);
    dp[0] = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (!dp[j] || i - j >= n) continue;
        if (!pieces.contains(cyclic_sub(w, rot + j, i - j))) continue;
        if (!dp[i] || *dp[j] + 1 < *dp[i]) dp[i] = *dp[j] + 1;
      }
    if (dp[n] && (!best || *dp[n] < *best)) best = dp[n];
  }
  return best;
}

}  // namespace

PieceTable compute_pieces(const Presentation& p) {
  const auto sym = symmetrize(p);
  std::map<FreeWord, std::size_t> positions;
  for (const auto& c : sym) {
    const auto& w = c.representative();
    for (std::size_t len = 1; len < w.size(); ++len)
      for (std::size_t off = 0; off < w.size(); ++off) ++positions[cyclic_sub(w, off, len)];
  }
  PieceTable t;
  for (const auto& [w, count] : positions)
    if (count >= 2) {
      t.pieces.insert(w);
      t.max_piece_len = std::max(t.max_piece_len, w.size());
    }
  for (const auto& r : p.relators()) {
    const CyclicWord c(r.word);
    auto a = fewest_pieces(c.representative(), t.pieces);
    auto b = fewest_pieces(c.inverse().representative(), t.pieces);
    if (!a || (b && *b < *a)) a = b;
    t.min_decomposition.push_back(a);
  }
  return t;
}

std::string PieceTable::dump() const {
  std::vector<FreeWord> sorted(pieces.begin(), pieces.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FreeWord& a, const FreeWord& b) { return a.size() < b.size(); });
  std::string out = "max_piece_len " + std::to_string(max_piece_len) + "\n";
  for (const auto& w : sorted) out += "piece " + w.str() + "\n";
  for (std::size_t i = 0; i < min_decomposition.size(); ++i)
    out += "relator " + std::to_string(i) + " pieces " +
           (min_decomposition[i] ? std::to_string(*min_decomposition[i]) : std::string("none")) + "\n";
  return out;
}

SmallCancellation check_conditions(const Presentation& p, const LinkGraph& l) {
  const auto table = compute_pieces(p);
  SmallCancellation sc;
  sc.max_piece_len = table.max_piece_len;
  std::size_t longest = 0;
  for (const auto& r : p.relators()) longest = std::max(longest, r.word.size());
  std::optional<std::size_t> c;
  for (const auto& d : table.min_decomposition)
    if (d && (!c || *d < *c)) c = d;
  if (c) {
    sc.c = *c;
  } else {
    sc.c = longest;
    sc.c_capped = true;
  }
  const auto g = girth(l);
  if (!g.girth || *g.girth >= kTCap) {
    sc.t = kTCap;
    sc.t_capped = true;
  } else {
    sc.t = *g.girth;
  }
  return sc;
}

}  // namespace artin
