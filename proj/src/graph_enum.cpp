#include "artin/graph_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace artin {

std::vector<Decoration> directed_alphabet(const std::vector<int>& labels) {
  std::vector<Decoration> out;
  for (int l : labels) {
    out.push_back({l, Orientation::Forward});
    out.push_back({l, Orientation::Backward});
  }
  return out;
}

std::vector<Decoration> directed_alphabet_with_wildcard(const std::vector<int>& labels) {
  auto out = directed_alphabet(labels);
  out.push_back({2, Orientation::Wildcard});
  return out;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint32_t pair_mask(const std::vector<Pair>& pairs, const std::vector<std::size_t>& perm, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!(mask >> k & 1U)) continue;
    std::size_t a = perm[pairs[k].first], b = perm[pairs[k].second];
    if (a > b) std::swap(a, b);
    const auto it = std::find(pairs.begin(), pairs.end(), Pair{a, b});
    out |= 1U << static_cast<std::uint32_t>(it - pairs.begin());
  }
  return out;
}

// Action of an automorphism on the shape's edge list.
struct EdgeAction {
  std::vector<std::size_t> target;
  std::vector<char> flip;
};

}  // namespace

EnumerationStats enumerate_decorated_graphs(
    std::size_t n, const std::vector<Decoration>& alphabet,
    const std::function<bool(const std::vector<std::uint8_t>&)>& accept,
    const std::function<void(const DecoratedGraph&)>& emit,
    const std::function<bool(const std::vector<Pair>&)>& shape_filter) {
  if (n > 6) throw std::invalid_argument("enumeration supports at most 6 vertices");
  const auto pairs = all_pairs(n);
  const auto perms = all_permutations(n);
  std::vector<std::uint8_t> flipped(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    Decoration d = alphabet[i];
    if (d.orientation == Orientation::Forward) d.orientation = Orientation::Backward;
    else if (d.orientation == Orientation::Backward) d.orientation = Orientation::Forward;
    const auto it = std::find(alphabet.begin(), alphabet.end(), d);
    if (it == alphabet.end()) throw std::invalid_argument("alphabet not closed under reversal");
    flipped[i] = static_cast<std::uint8_t>(it - alphabet.begin());
  }

  EnumerationStats stats;
  const std::uint32_t masks = 1U << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    bool canonical = true;
    std::vector<const std::vector<std::size_t>*> automorphisms;
    for (const auto& p : perms) {
      const auto image = pair_mask(pairs, p, mask);
      if (image < mask) {
        canonical = false;
        break;
      }
      if (image == mask) automorphisms.push_back(&p);
    }
    if (!canonical) continue;
    std::vector<Pair> shape;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) shape.push_back(pairs[k]);
    if (shape_filter && !shape_filter(shape)) continue;
    ++stats.shapes;

    std::vector<EdgeAction> actions;
    for (const auto* p : automorphisms) {
      EdgeAction act{std::vector<std::size_t>(shape.size()), std::vector<char>(shape.size())};
      bool identity = true;
      for (std::size_t e = 0; e < shape.size(); ++e) {
        std::size_t a = (*p)[shape[e].first], b = (*p)[shape[e].second];
        act.flip[e] = a > b;
        if (a > b) std::swap(a, b);
        act.target[e] = static_cast<std::size_t>(std::find(shape.begin(), shape.end(), Pair{a, b}) - shape.begin());
        identity = identity && act.target[e] == e && !act.flip[e];
      }
      if (!identity) actions.push_back(std::move(act));
    }

    const std::size_t k = shape.size();
    std::vector<std::uint8_t> code(k, 0), image(k);
    const auto base = static_cast<std::uint8_t>(alphabet.size());
    while (true) {
      if (!accept || accept(code)) {
        bool minimal = true;
        for (const auto& act : actions) {
          for (std::size_t e = 0; e < k; ++e) image[act.target[e]] = act.flip[e] ? flipped[code[e]] : code[e];
          if (std::lexicographical_compare(image.begin(), image.end(), code.begin(), code.end())) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          DecoratedGraph g;
          g.reserve(k);
          for (std::size_t e = 0; e < k; ++e)
            g.push_back({static_cast<std::uint8_t>(shape[e].first), static_cast<std::uint8_t>(shape[e].second), code[e]});
          ++stats.graphs;
          emit(g);
        }
      }
      // Next code in base-|alphabet| counting, last position fastest.
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (++code[pos] < base) break;
        code[pos] = 0;
        if (pos == 0) {
          pos = SIZE_MAX;
          break;
        }
      }
      if (k == 0 || pos == SIZE_MAX) break;
    }
  }
  return stats;
}

DefiningGraph to_defining_graph(std::size_t n, const std::vector<Decoration>& alphabet, const DecoratedGraph& g) {
  DefiningGraph out;
  for (std::size_t i = 0; i < n; ++i) out.add_vertex(GeneratorId("v" + std::to_string(i)));
  for (const auto& e : g) {
    const auto& d = alphabet.at(e.decoration);
    out.add_edge(out.vertex(e.u), out.vertex(e.v), d.label, d.orientation);
  }
  return out;
}

}  // namespace artin
