#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "artin/batteries.hpp"
#include "artin/errors.hpp"
#include "artin/forbidden.hpp"
#include "artin/link.hpp"

using namespace artin;

namespace {

GeneratorId id(const std::string& s) { return GeneratorId(s); }

std::set<std::pair<std::string, std::string>> edge_labels(const LinkGraph& l) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : l.edges()) {
    auto a = l.vertex(e.a).label(), b = l.vertex(e.b).label();
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

void check_structure(const DefiningGraph& g) {
  const auto tp = build_triangular(g);
  const auto k = build_complex(tp);
  const auto l = build_link(k);
  CHECK(l.vertex_count() == 2 * tp.presentation.generators().size());
  CHECK(l.edge_count() == 3 * tp.presentation.relators().size());
  std::map<std::string, int> label_of_hub;
  for (const auto& h : tp.hubs) label_of_hub[h.hub.name()] = g.edge(h.gamma_edge).label;
  for (const auto& e : l.edges()) {
    const int la = l.vertex(e.a).level, lb = l.vertex(e.b).level;
    CHECK(std::abs(la - lb) == 1);
    CHECK((e.kind == EdgeKind::Middle) == (std::min(la, lb) == 2));
  }
  for (std::size_t v = 0; v < l.vertex_count(); ++v) {
    const auto& lv = l.vertex(v);
    if (lv.level == 1 || lv.level == 4) {
      CHECK(l.degree(v) == static_cast<std::size_t>(label_of_hub.at(lv.generator.name())));
    } else if (!lv.special) {
      CHECK(l.degree(v) == 2);
    } else {
      CHECK(l.degree(v) == 2 * g.degree(g.vertex_index(lv.generator)));
    }
  }
  // Pieces meet only in the special vertices g, g_bar of a shared Γ-vertex.
  const auto pieces = local_pieces(l);
  std::vector<std::set<std::size_t>> verts(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (auto e : pieces[i]) verts[i].insert({l.edge(e).a, l.edge(e).b});
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      for (auto v : verts[i])
        if (verts[j].contains(v)) CHECK(l.vertex(v).special);
}

}  // namespace

TEST_CASE("corner rule on one relator") {
  const Presentation p({id("x"), id("a"), id("b")}, {Relator{FreeWord::parse("x^-1 a b"), {}}}, {id("x")});
  const auto l = build_link(build_complex(p, {id("a"), id("b")}));
  CHECK(edge_labels(l) == std::set<std::pair<std::string, std::string>>{{"a_bar", "x_bar"}, {"a", "b_bar"}, {"b", "x"}});
  CHECK(l.vertex(l.vertex_index("x_bar")).level == 1);
  CHECK(l.vertex(l.vertex_index("a_bar")).level == 2);
  CHECK(l.vertex(l.vertex_index("a")).level == 3);
  CHECK(l.vertex(l.vertex_index("x")).level == 4);
  CHECK(l.edge(*l.find_edge(l.vertex_index("a"), l.vertex_index("b_bar"))).kind == EdgeKind::Middle);
}

TEST_CASE("complex counts") {
  const auto k = build_complex(build_triangular(oriented_triangle(3, 4, 5)));
  CHECK(TwoComplex::zero_cells == 1);
  CHECK(k.one_cells().size() == 12);
  CHECK(k.two_cells().size() == 12);
  DefiningGraph e2, e5;
  e2.add_edge(id("a"), id("b"), 2, Orientation::Wildcard);
  e5.add_edge(id("a"), id("b"), 5, Orientation::Forward);
  CHECK(build_complex(build_triangular(e2)).one_cells().size() == 3);
  CHECK(build_complex(build_triangular(e2)).two_cells().size() == 2);
  CHECK(build_complex(build_triangular(e5)).one_cells().size() == 6);
  CHECK(build_complex(build_triangular(e5)).two_cells().size() == 5);
  const Presentation bad({id("a"), id("b")}, {Relator{FreeWord::parse("a b a^-1 b^-1"), {}}});
  CHECK_THROWS_AS(build_complex(bad, {}), NotTriangular);
}

TEST_CASE("structure of links over random graphs") {
  check_structure(oriented_triangle(2, 4, 5));
  check_structure(oriented_triangle(5, 5, 5));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) check_structure(oracle::random_graph(rng, 5, {2, 3, 4, 5}, 0.6));
}

TEST_CASE("middle subgraph") {
  auto profile = [](int m, int n, int p) {
    const auto comps = components(middle_subgraph(build_link(oriented_triangle(m, n, p))));
    std::map<std::size_t, std::size_t> by_size;
    for (const auto& c : comps) {
      CHECK(c.is_path());
      ++by_size[c.edges.size()];
    }
    return by_size;
  };
  CHECK(profile(3, 3, 3) == std::map<std::size_t, std::size_t>{{3, 3}});
  CHECK(profile(5, 5, 5) == std::map<std::size_t, std::size_t>{{1, 6}, {3, 3}});
  CHECK(profile(3, 4, 6) == std::map<std::size_t, std::size_t>{{1, 4}, {3, 3}});

  // A single edge labelled 3: each relator has one middle corner and they
  // share no vertices.
  DefiningGraph e3;
  e3.add_edge(id("a"), id("b"), 3, Orientation::Forward);
  const auto comps = components(middle_subgraph(build_link(e3)));
  CHECK(comps.size() == 3);
  for (const auto& c : comps) CHECK(c.edges.size() == 1);
}

TEST_CASE("neighbourhoods") {
  const auto l = build_link(oriented_triangle(5, 5, 5));
  const auto y = l.vertex_index(id("x_{b,c}"), End::Head);
  const auto n0 = neighborhood(l, y, 0);
  CHECK(n0.vertex_count() == 1);
  CHECK(n0.edge_count() == 0);
  CHECK_FALSE(oracle::has_cycle(neighborhood(l, y, 2)));
  CHECK(is_forest(neighborhood(l, y, 2)));
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n)
      for (int p = 3; p <= 5; ++p) {
        const auto lk = build_link(oriented_triangle(m, n, p));
        for (std::size_t v = 0; v < lk.vertex_count(); ++v)
          if (lk.vertex(v).level == 1 || lk.vertex(v).level == 4) CHECK_FALSE(oracle::has_cycle(neighborhood(lk, v, 2)));
      }
  // Radius 3 reaches the hexagons.
  CHECK(oracle::has_cycle(neighborhood(l, y, 3)));
  CHECK_THROWS_AS(neighborhood(l, id("nope"), End::Head, 1), VertexNotFound);
}

TEST_CASE("local pieces") {
  const auto l = build_link(oriented_triangle(2, 4, 5));
  std::multiset<std::size_t> sizes;
  for (const auto& p : local_pieces(l)) sizes.insert(p.size());
  CHECK(sizes == std::multiset<std::size_t>{6, 12, 15});

  DefiningGraph e;
  e.add_edge(id("a"), id("b"), 4, Orientation::Forward);
  const auto le = build_link(e);
  REQUIRE(local_pieces(le).size() == 1);
  CHECK(local_pieces(le)[0].size() == le.edge_count());

  DefiningGraph star;
  star.add_edge(id("c"), id("p"), 3, Orientation::Forward);
  star.add_edge(id("q"), id("c"), 4, Orientation::Forward);
  star.add_edge(id("c"), id("r"), 5, Orientation::Backward);
  const auto ls = build_link(star);
  const auto pieces = local_pieces(ls);
  REQUIRE(pieces.size() == 3);
  const std::set<std::size_t> centre{ls.vertex_index(id("c"), End::Head), ls.vertex_index(id("c"), End::Tail)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::set<std::size_t> a, b, both;
      for (auto x : pieces[i]) a.insert({ls.edge(x).a, ls.edge(x).b});
      for (auto x : pieces[j]) b.insert({ls.edge(x).a, ls.edge(x).b});
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.end()));
      CHECK(both == centre);
    }
}

TEST_CASE("reversal covariance") {
  // Reversing Γ reverses every relator h^-1 u v to h^-1 v u: the map
  // swapping head and tail of every generator (renamed along the reversed
  // chains) is an isomorphism exchanging top and bottom corners.
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 60; ++iter) {
    const auto g = oracle::random_graph(rng, 4, {3, 4, 5}, 0.7);
    const auto l = build_link(g), r = build_link(g.reversed());
    REQUIRE(l.vertex_count() == r.vertex_count());
    REQUIRE(l.edge_count() == r.edge_count());
    std::map<std::string, std::string> hub_rename, chain_rename;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
      const auto& e = g.edge(ei);
      const auto t = g.vertex(g.tail(ei)).name(), h = g.vertex(g.head(ei)).name();
      hub_rename["x_{" + t + "," + h + "}"] = "x_{" + h + "," + t + "}";
      // Chain t, h, d3..dm reverses to h, t, dm..d3.
      for (int i = 3; i <= e.label; ++i)
        chain_rename["d_{" + t + "," + h + "," + std::to_string(i) + "}"] =
            "d_{" + h + "," + t + "," + std::to_string(e.label + 3 - i) + "}";
    }
    auto image = [&](const LinkVertex& v) {
      const auto& n = v.generator.name();
      const auto m = hub_rename.contains(n) ? hub_rename.at(n) : chain_rename.contains(n) ? chain_rename.at(n) : n;
      return LinkVertexRef{id(m), v.end == End::Head ? End::Tail : End::Head};
    };
    for (const auto& e : l.edges()) {
      const auto a = image(l.vertex(e.a)), b = image(l.vertex(e.b));
      const auto re = r.find_edge(r.vertex_index(a.generator, a.end), r.vertex_index(b.generator, b.end));
      REQUIRE(re.has_value());
      const auto k = r.edge(*re).kind;
      if (e.kind == EdgeKind::Middle) CHECK(k == EdgeKind::Middle);
      if (e.kind == EdgeKind::Top) CHECK(k == EdgeKind::Bottom);
      if (e.kind == EdgeKind::Bottom) CHECK(k == EdgeKind::Top);
    }
  }
}

TEST_CASE("dot and json export") {
  const auto l = build_link(oriented_triangle(2, 4, 5));
  const auto dot = to_dot(l);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.rfind("graph", 0) == 0);
  const auto j = link_to_json(l);
  CHECK(j.at("vertices").size() == l.vertex_count());
  CHECK(j.at("edges").size() == l.edge_count());
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
