#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "artin/batteries.hpp"
#include "artin/curvature.hpp"
#include "artin/graph_io.hpp"

using namespace artin;

namespace {

struct Built {
  TwoComplex complex;
  LinkGraph link;
};

Built built(const DefiningGraph& g) {
  auto k = build_complex(build_triangular(g));
  auto l = build_link(k);
  return {std::move(k), std::move(l)};
}

const DefiningGraph kSquare = parse_gamma("edge u v 3 >\nedge w v 3 >\nedge w t 3 >\nedge u t 3 >");

}  // namespace

TEST_CASE("metric assignment") {
  const auto b = built(oriented_triangle(3, 4, 5));
  const auto a2 = assign_metric(b.complex, b.link, MetricScheme::A2);
  for (const auto& a : a2.link_angles) CHECK(a == PiAngle(1, 3));
  for (const auto& [g, len] : a2.one_cell_lengths) CHECK(len == CellLength::Unit);

  DefiningGraph e4;
  e4.add_edge(GeneratorId("a"), GeneratorId("b"), 4, Orientation::Forward);
  const auto b4 = built(e4);
  const auto m = assign_metric(b4.complex, b4.link, MetricScheme::B2);
  std::size_t right = 0, eighth = 0;
  for (std::size_t e = 0; e < b4.link.edge_count(); ++e) {
    if (m.link_angles[e] == PiAngle(1, 2)) {
      ++right;
      CHECK(b4.link.edge(e).kind == EdgeKind::Middle);
    }
    if (m.link_angles[e] == PiAngle(1, 4)) ++eighth;
  }
  CHECK(right == 4);
  CHECK(eighth == 8);
  CHECK(m.one_cell_lengths.at(GeneratorId("x_{a,b}")) == CellLength::Sqrt2);
  CHECK(m.one_cell_lengths.at(GeneratorId("a")) == CellLength::Unit);
  for (const auto& c : m.corner_angles) CHECK(c[0] + c[1] + c[2] == PiAngle(1, 1));
  for (const auto& c : a2.corner_angles) CHECK(c[0] + c[1] + c[2] == PiAngle(1, 1));
}

TEST_CASE("link condition values") {
  const auto b333 = built(oriented_triangle(3, 3, 3));
  const auto c333 = check_link_condition(b333.link, assign_metric(b333.complex, b333.link, MetricScheme::A2));
  CHECK(c333.holds);
  CHECK(c333.min_value == std::optional<PiAngle>(PiAngle(2, 1)));

  const auto b245 = built(oriented_triangle(2, 4, 5));
  const auto c245 = check_link_condition(b245.link, assign_metric(b245.complex, b245.link, MetricScheme::A2));
  CHECK_FALSE(c245.holds);
  CHECK(c245.min_value == std::optional<PiAngle>(PiAngle(4, 3)));

  const auto bsq = built(kSquare);
  const auto csq = check_link_condition(bsq.link, assign_metric(bsq.complex, bsq.link, MetricScheme::B2));
  CHECK(csq.holds);
  CHECK(csq.min_value == std::optional<PiAngle>(PiAngle(2, 1)));
  REQUIRE(csq.witness);
  CHECK(csq.witness->length() == 4);
  CHECK(csq.witness->count(bsq.link, EdgeKind::Middle) == 4);
}

TEST_CASE("certify examples") {
  const auto r333 = certify(oriented_triangle(3, 3, 3), std::nullopt);
  CHECK(r333.verdict == Verdict::NonPositivelyCurved);
  CHECK(r333.scheme == MetricScheme::A2);
  CHECK(r333.theorem_cited == kThreeGeneratorLargeType);
  CHECK(r333.consistent);

  const auto sq = parse_gamma("edge u v 2 ?\nedge w v 3 >\nedge w t 2 ?\nedge u t 3 >");
  const auto rsq = certify(sq, std::nullopt);
  CHECK(rsq.verdict == Verdict::NonPositivelyCurved);
  CHECK(rsq.scheme == MetricScheme::B2);
  CHECK(rsq.theorem_cited == kTriangleFree);
  CHECK_FALSE(rsq.forbidden.empty());

  const auto r245 = certify(oriented_triangle(2, 4, 5), std::nullopt);
  CHECK(r245.verdict == Verdict::Inconclusive);
  CHECK(r245.consistent);
  REQUIRE_FALSE(r245.forbidden.empty());
  CHECK(r245.forbidden[0].kind == PatternKind::TypeA);
  CHECK(r245.witness_loop.size() == 4);

  // An undirected triangle is oriented by the search.
  const auto rs = certify(parse_gamma("edge a b 4\nedge b c 3\nedge c a 5"), std::nullopt);
  CHECK(rs.verdict == Verdict::NonPositivelyCurved);
  CHECK(rs.oriented.fully_oriented());

  // A supplied assignment is used as given.
  OrientationAssignment trans(3);
  trans.set(0, Orientation::Forward);
  trans.set(1, Orientation::Backward);
  trans.set(2, Orientation::Backward);
  const auto rt = certify(parse_gamma("edge a b 3\nedge b c 3\nedge c a 3"), trans);
  CHECK(rt.verdict == Verdict::Inconclusive);

  // Forcing B2 on the large triangle: hexagons with two middle edges reach
  // 2 pi exactly.
  CertifyOptions b2;
  b2.force_scheme = MetricScheme::B2;
  const auto rb = certify(oriented_triangle(3, 3, 3), std::nullopt, b2);
  CHECK(rb.scheme == MetricScheme::B2);
  CHECK(rb.consistent);
}

TEST_CASE("report json") {
  const auto r = certify(oriented_triangle(2, 4, 5), std::nullopt);
  const auto j = report_to_json(r);
  CHECK(j.at("min_angle_over_pi") == "4/3");
  CHECK(j.at("verdict") == "Inconclusive");
  CHECK(j.at("girth") == 4);
  CHECK(j.at("theorem_cited").is_null());
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
  const auto ok = report_to_json(certify(oriented_triangle(3, 3, 3), std::nullopt));
  CHECK(ok.at("min_angle_over_pi") == "2");
  CHECK(ok.at("small_cancellation").at("T") == 6);
  CHECK(report_text(r).find("verdict: Inconclusive") == 0);
}

TEST_CASE("certificate consistency over random graphs") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 250; ++i) {
    const auto g = oracle::random_graph(rng, 5, {2, 3, 4}, 0.5, 0.3);
    CAPTURE(write_gamma(g));
    const auto r = certify(g, std::nullopt);
    CHECK(r.consistent);
    if (r.verdict == Verdict::NonPositivelyCurved) {
      CHECK(r.condition.min_value.value_or(PiAngle(2, 1)) >= PiAngle::full_turn());
      if (r.scheme == MetricScheme::A2) {
        CHECK((!r.girth || *r.girth >= 6));
        CHECK(r.forbidden.empty());
      }
    }
    // A2 holds iff link girth >= 6.
    CertifyOptions a2;
    a2.force_scheme = MetricScheme::A2;
    const auto ra = certify(g, std::nullopt, a2);
    CHECK(ra.condition.holds == (!ra.girth || *ra.girth >= 6));
  }
}
