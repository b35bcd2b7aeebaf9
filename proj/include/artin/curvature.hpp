#pragma once

// Piecewise-Euclidean metrics on the triangular complex and the 2 pi link
// condition at its vertex.
//
//   A2: every 1-cell has length 1, every 2-cell is equilateral (pi/3 corners).
//   B2: hub 1-cells have length sqrt 2, the others 1; the corner opposite the
//       hub side gets pi/2 and the two corners on the hub side pi/4.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/angle.hpp"
#include "artin/cycles.hpp"
#include "artin/forbidden.hpp"
#include "artin/link.hpp"
#include "artin/presentation.hpp"
#include "artin/smallcancel.hpp"

namespace artin {

enum class MetricScheme { A2, B2 };

const char* scheme_name(MetricScheme s);

struct MetricAssignment {
  MetricScheme scheme;
  std::map<GeneratorId, CellLength> one_cell_lengths;
  // Per 2-cell: bottom, middle and top corner.
  std::vector<std::array<PiAngle, 3>> corner_angles;
  // Per link edge, the angle of its corner.
  std::vector<PiAngle> link_angles;
};

MetricAssignment assign_metric(const TwoComplex& k, const LinkGraph& l, MetricScheme scheme);

struct LinkCondition {
  bool holds = false;
  std::optional<PiAngle> min_value;  // nullopt when the link is a forest
  std::optional<EmbeddedLoop> witness;
};

// holds iff every embedded loop has angle at least 2 pi. Throws UnassignedAngles.
LinkCondition check_link_condition(const LinkGraph& l, const MetricAssignment& m);

enum class Verdict { NonPositivelyCurved, Inconclusive };

const char* verdict_name(Verdict v);

// The results the certificate rests on.
inline constexpr const char* kThreeGeneratorLargeType = "three-generator-large-type";
inline constexpr const char* kOrientableLargeType = "orientable-without-forbidden-subgraphs";
inline constexpr const char* kOrientableWithCommutations = "orientable-with-commutation-wildcards";
inline constexpr const char* kTriangleFree = "triangle-free";
// B2 forced on a graph with triangles and verified directly.
inline constexpr const char* kB2LinkCondition = "b2-link-condition";

struct CurvatureReport {
  DefiningGraph oriented;  // the orientation the certificate uses
  MetricScheme scheme = MetricScheme::A2;
  LinkCondition condition;
  std::optional<std::size_t> girth;
  std::vector<std::string> witness_loop;  // labels of condition.witness
  std::vector<ForbiddenWitness> forbidden;
  SmallCancellation small_cancellation;
  Verdict verdict = Verdict::Inconclusive;
  std::string theorem_cited;
  std::vector<std::string> notes;
  // False if the computed link contradicts what the selected criterion
  // predicts; callers should treat that as an internal error.
  bool consistent = true;
};

struct CertifyOptions {
  std::optional<MetricScheme> force_scheme;
};

CurvatureReport certify(const DefiningGraph& gamma, const std::optional<OrientationAssignment>& assignment,
                        const CertifyOptions& options = {});

nlohmann::json report_to_json(const CurvatureReport& r);
std::string report_text(const CurvatureReport& r);

}  // namespace artin
