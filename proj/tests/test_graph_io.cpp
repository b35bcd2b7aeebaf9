#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "artin/errors.hpp"
#include "artin/graph_io.hpp"

using namespace artin;

TEST_CASE("text format") {
  const auto g = parse_gamma(R"(# triangle
vertex a
edge a b 3 >
edge b c 4 <   # trailing comment
edge c a 2 ?
edge c d 5
rot a: b c
)");
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 4);
  CHECK(g.edge(0).orientation == Orientation::Forward);
  CHECK(g.edge(1).orientation == Orientation::Backward);
  CHECK(g.edge(2).orientation == Orientation::Wildcard);
  CHECK(g.edge(3).orientation == Orientation::Unoriented);
  CHECK(g.edge(1).label == 4);
  CHECK(g.rotation().at(GeneratorId("a")).size() == 2);
}

TEST_CASE("parse errors carry positions") {
  auto fails_at = [](const char* text, std::size_t line, std::size_t column) {
    try {
      parse_gamma(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no ParseError for: " << text);
  };
  fails_at("edge a b x", 1, 10);
  fails_at("vertex a\n  edge a b 3 !", 2, 14);
  fails_at("\nfoo a", 2, 1);
  fails_at("edge a b 3 ?", 1, 6);
  fails_at("edge a a 3", 1, 6);
  fails_at("edge a b 1", 1, 6);
  fails_at("rot a b c", 1, 1);
  fails_at("edge a b 3\nrot q: a", 2, 5);
}

TEST_CASE("json format and round trips") {
  const auto j = nlohmann::json::parse(R"({"vertices": ["a"],
    "edges": [{"u": "a", "v": "b", "label": 3, "orientation": ">"},
              {"u": "b", "v": "c", "label": 2, "orientation": "?"}],
    "rotation": {"b": ["a", "c"]}})");
  const auto g = parse_gamma_json(j);
  CHECK(g.edge_count() == 2);
  CHECK(parse_gamma_json(gamma_to_json(g)) == g);
  CHECK(parse_gamma(write_gamma(g)) == g);
  CHECK(parse_gamma_any(j.dump()) == g);
  CHECK(parse_gamma_any(write_gamma(g)) == g);
  CHECK_THROWS_AS(parse_gamma_json(nlohmann::json::parse(R"({"edges": [{"u": "a"}]})")), ParseError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::random_graph(rng, 6, {2, 3, 4, 7}, 0.5, 0.3);
    CHECK(parse_gamma(write_gamma(r)) == r);
    CHECK(parse_gamma_json(gamma_to_json(r)) == r);
  }
}

TEST_CASE("example files load") {
  for (const char* f : {"triangle_333", "triangle_245", "square_alternating", "octahedron", "cuboctahedron"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_gamma(std::string(ARTIN_DATA_DIR) + "/" + f + ".gamma"));
  }
  CHECK_THROWS_AS(load_gamma("/nonexistent/file.gamma"), Error);
}
