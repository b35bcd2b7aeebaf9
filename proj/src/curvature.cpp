#include "artin/curvature.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

const char* scheme_name(MetricScheme s) { return s == MetricScheme::A2 ? "A2" : "B2"; }

const char* verdict_name(Verdict v) {
  return v == Verdict::NonPositivelyCurved ? "NonPositivelyCurved" : "Inconclusive";
}

MetricAssignment assign_metric(const TwoComplex& k, const LinkGraph& l, MetricScheme scheme) {
  MetricAssignment m{scheme, {}, {}, {}};
  for (const auto& c : k.one_cells())
    m.one_cell_lengths.emplace(c.generator,
                               scheme == MetricScheme::B2 && c.hub ? CellLength::Sqrt2 : CellLength::Unit);
  const std::array<PiAngle, 3> corners = scheme == MetricScheme::A2
                                             ? std::array<PiAngle, 3>{PiAngle(1, 3), PiAngle(1, 3), PiAngle(1, 3)}
                                             : std::array<PiAngle, 3>{PiAngle(1, 4), PiAngle(1, 2), PiAngle(1, 4)};
  m.corner_angles.assign(k.two_cells().size(), corners);
  m.link_angles.reserve(l.edge_count());
  for (const auto& e : l.edges()) m.link_angles.push_back(m.corner_angles.at(e.cell).at(static_cast<std::size_t>(e.corner)));
  return m;
}

LinkCondition check_link_condition(const LinkGraph& l, const MetricAssignment& m) {
  const auto r = min_angle_cycle(l, m.link_angles);
  LinkCondition out;
  out.min_value = r.value;
  out.witness = r.witness;
  out.holds = !r.value || *r.value >= PiAngle::full_turn();
  return out;
}

namespace {

bool is_large_triangle(const DefiningGraph& g) {
  return g.vertex_count() == 3 && g.edge_count() == 3 && g.large_type();
}

DefiningGraph orient_for_certificate(const DefiningGraph& gamma, const std::optional<OrientationAssignment>& assignment,
                                     std::vector<std::string>& notes) {
  if (assignment) return resolve_orientations(gamma, *assignment);
  if (gamma.fully_oriented()) return resolve_orientations(gamma, {});
  if (auto found = search_orientation(gamma)) {
    notes.push_back("orientation found by search");
    return resolve_orientations(gamma, *found);
  }
  notes.push_back("no orientation avoids both forbidden subgraphs; undirected edges taken as listed");
  OrientationAssignment fallback(gamma.edge_count());
  for (std::size_t e = 0; e < gamma.edge_count(); ++e)
    if (gamma.edge(e).orientation == Orientation::Unoriented && !gamma.edge(e).bidirectional())
      fallback.set(e, Orientation::Forward);
  return resolve_orientations(gamma, fallback);
}

}  // namespace

CurvatureReport certify(const DefiningGraph& gamma, const std::optional<OrientationAssignment>& assignment,
                        const CertifyOptions& options) {
  CurvatureReport r;
  r.oriented = orient_for_certificate(gamma, assignment, r.notes);
  const auto tri = build_triangular(r.oriented);
  const auto complex = build_complex(tri);
  const auto link = build_link(complex);
  r.girth = girth(link).girth;
  r.forbidden = detect_forbidden(r.oriented);
  r.small_cancellation = check_conditions(tri.presentation, link);

  const bool no_forbidden = r.forbidden.empty();
  const bool triangle_free = r.oriented.triangle_free();
  std::optional<MetricScheme> predicted;  // scheme a theorem guarantees
  if (no_forbidden) {
    predicted = MetricScheme::A2;
  } else if (triangle_free) {
    predicted = MetricScheme::B2;
  }
  r.scheme = options.force_scheme.value_or(predicted.value_or(MetricScheme::A2));
  if (!options.force_scheme && !predicted)
    r.notes.push_back("forbidden subgraph present and graph has a triangle; A2 evaluated for diagnostics");

  const auto metric = assign_metric(complex, link, r.scheme);
  r.condition = check_link_condition(link, metric);
  if (r.condition.witness) r.witness_loop = loop_labels(link, *r.condition.witness);

  // A2 gives every edge pi/3, so the condition is girth >= 6.
  if (r.scheme == MetricScheme::A2 && r.condition.holds != (!r.girth || *r.girth >= 6)) {
    r.consistent = false;
    r.notes.push_back("A2 link condition disagrees with link girth");
  }
  if (predicted && r.scheme == *predicted && !r.condition.holds) {
    r.consistent = false;
    r.notes.push_back("link condition fails although the selected criterion predicts it");
  }
  if (no_forbidden && r.girth && *r.girth < 6) {
    r.consistent = false;
    r.notes.push_back("short link loop without a forbidden subgraph");
  }

  if (!r.condition.holds) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  r.verdict = Verdict::NonPositivelyCurved;
  if (r.scheme == MetricScheme::B2) {
    r.theorem_cited = triangle_free ? kTriangleFree : kB2LinkCondition;
  } else if (is_large_triangle(r.oriented)) {
    r.theorem_cited = kThreeGeneratorLargeType;
  } else if (r.oriented.large_type()) {
    r.theorem_cited = kOrientableLargeType;
  } else {
    r.theorem_cited = kOrientableWithCommutations;
  }
  return r;
}

}  // namespace artin
