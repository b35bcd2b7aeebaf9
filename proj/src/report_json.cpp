#include <sstream>

#include "artin/curvature.hpp"
#include "artin/graph_io.hpp"

namespace artin {

namespace {

nlohmann::json orientation_json(const DefiningGraph& g) {
  auto arr = nlohmann::json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.bidirectional() && ed.orientation != Orientation::Forward && ed.orientation != Orientation::Backward) {
      arr.push_back(g.vertex(ed.u).name() + "?" + g.vertex(ed.v).name());
    } else {
      arr.push_back(g.vertex(g.tail(e)).name() + ">" + g.vertex(g.head(e)).name());
    }
  }
  return arr;
}

}  // namespace

nlohmann::json report_to_json(const CurvatureReport& r) {
  nlohmann::json j;
  j["scheme"] = scheme_name(r.scheme);
  j["min_angle_over_pi"] = r.condition.min_value ? nlohmann::json(r.condition.min_value->str()) : nlohmann::json();
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json();
  j["link_condition_holds"] = r.condition.holds;
  auto witnesses = nlohmann::json::array();
  if (!r.witness_loop.empty()) witnesses.push_back({{"kind", "min_angle_loop"}, {"link_loop", r.witness_loop}});
  for (const auto& w : r.forbidden) witnesses.push_back(witness_to_json(r.oriented, w));
  j["witnesses"] = witnesses;
  j["verdict"] = verdict_name(r.verdict);
  j["theorem_cited"] = r.theorem_cited.empty() ? nlohmann::json() : nlohmann::json(r.theorem_cited);
  j["small_cancellation"] = {{"C", r.small_cancellation.c},
                             {"C_capped", r.small_cancellation.c_capped},
                             {"T", r.small_cancellation.t},
                             {"T_capped", r.small_cancellation.t_capped},
                             {"max_piece_len", r.small_cancellation.max_piece_len}};
  j["orientation"] = orientation_json(r.oriented);
  j["notes"] = r.notes;
  j["consistent"] = r.consistent;
  return j;
}

std::string report_text(const CurvatureReport& r) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  out << "scheme: " << scheme_name(r.scheme) << "\n";
  out << "min angle / pi: " << (r.condition.min_value ? r.condition.min_value->str() : std::string("none (forest)"))
      << "\n";
  out << "girth: " << (r.girth ? std::to_string(*r.girth) : std::string("none (forest)")) << "\n";
  if (!r.witness_loop.empty()) {
    out << "witness:";
    for (std::size_t i = 0; i < r.witness_loop.size(); ++i) out << (i ? " - " : " ") << r.witness_loop[i];
    out << "\n";
  }
  for (const auto& w : r.forbidden) out << "forbidden " << witness_str(r.oriented, w) << "\n";
  out << "C(" << r.small_cancellation.c << ")" << (r.small_cancellation.c_capped ? "+" : "") << " T("
      << r.small_cancellation.t << ")" << (r.small_cancellation.t_capped ? "+" : "") << "\n";
  if (!r.theorem_cited.empty()) out << "theorem: " << r.theorem_cited << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace artin
