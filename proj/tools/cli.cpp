#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "artin/batteries.hpp"
#include "artin/curvature.hpp"
#include "artin/cycles.hpp"
#include "artin/errors.hpp"
#include "artin/forbidden.hpp"
#include "artin/graph_io.hpp"
#include "artin/link.hpp"
#include "artin/smallcancel.hpp"

namespace artin::cli {

namespace {

struct Options {
  std::string input;
  std::string scheme = "auto";
  std::string format = "text";
  std::size_t max_len = 4;
  bool from_rotation = false;
  int max_label = 5;
  std::size_t max_vertices = 5;
  std::uint64_t seed = 1;
  std::size_t samples = 2000;
};

DefiningGraph read_input(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_gamma_any(text);
  }
  return load_gamma(path);
}

void need_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw CLI::ValidationError("--format", "'" + o.format + "' is not available for this command");
}

int do_certify(const Options& o, std::ostream& out) {
  need_format(o, {"text", "json"});
  CertifyOptions opts;
  if (o.scheme == "a2") opts.force_scheme = MetricScheme::A2;
  if (o.scheme == "b2") opts.force_scheme = MetricScheme::B2;
  const auto report = certify(read_input(o.input), std::nullopt, opts);
  if (o.format == "json")
    out << report_to_json(report).dump(2) << "\n";
  else
    out << report_text(report);
  if (!report.consistent) throw InternalInconsistency("certificate contradicts the computed link");
  return kOk;
}

int do_link(const Options& o, std::ostream& out) {
  const auto link = build_link(read_input(o.input));
  if (o.format == "json") {
    out << link_to_json(link).dump(2) << "\n";
  } else if (o.format == "dot") {
    out << to_dot(link);
  } else {
    out << "vertices " << link.vertex_count() << "\n";
    for (const auto& v : link.vertices()) out << "  " << v.label() << " level " << v.level << (v.special ? " special" : "") << "\n";
    out << "edges " << link.edge_count() << "\n";
    for (const auto& e : link.edges())
      out << "  " << link.vertex(e.a).label() << " - " << link.vertex(e.b).label() << " " << kind_name(e.kind) << "\n";
  }
  return kOk;
}

int do_loops(const Options& o, std::ostream& out) {
  need_format(o, {"text", "json"});
  const auto link = build_link(read_input(o.input));
  const auto loops = enumerate_short_loops(link, o.max_len);
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& l : loops) arr.push_back(loop_labels(link, l));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& l : loops) out << loop_str(link, l) << "\n";
  }
  return kOk;
}

int do_orient(const Options& o, std::ostream& out) {
  need_format(o, {"text", "json"});
  const auto gamma = read_input(o.input);
  std::optional<OrientationAssignment> a;
  if (o.from_rotation)
    a = orient_from_rotation_system(gamma);
  else
    a = search_orientation_parallel(gamma);
  std::optional<DefiningGraph> oriented;
  std::vector<ForbiddenWitness> left;
  if (a) {
    oriented = resolve_orientations(gamma, *a);
    left = detect_forbidden(*oriented);
  }
  if (o.format == "json") {
    nlohmann::json j;
    j["found"] = oriented.has_value();
    j["graph"] = oriented ? gamma_to_json(*oriented) : nlohmann::json(nullptr);
    j["forbidden"] = nlohmann::json::array();
    for (const auto& w : left) j["forbidden"].push_back(witness_to_json(*oriented, w));
    out << j.dump(2) << "\n";
  } else if (!oriented) {
    out << "# no orientation avoids the forbidden subgraphs\n";
  } else {
    out << write_gamma(*oriented);
    for (const auto& w : left) out << "# forbidden: " << witness_str(*oriented, w) << "\n";
  }
  return kOk;
}

int do_pieces(const Options& o, std::ostream& out) {
  need_format(o, {"text", "json"});
  const auto tri = build_triangular(read_input(o.input));
  const auto table = compute_pieces(tri.presentation);
  const auto sc = check_conditions(tri.presentation, build_link(build_complex(tri)));
  if (o.format == "json") {
    nlohmann::json j;
    j["pieces"] = nlohmann::json::array();
    for (const auto& p : table.pieces) j["pieces"].push_back(p.str());
    j["max_piece_len"] = table.max_piece_len;
    j["C"] = sc.c;
    j["C_capped"] = sc.c_capped;
    j["T"] = sc.t;
    j["T_capped"] = sc.t_capped;
    out << j.dump(2) << "\n";
  } else {
    out << table.dump();
    out << "C(" << sc.c << ")" << (sc.c_capped ? "+" : "") << " T(" << sc.t << ")" << (sc.t_capped ? "+" : "")
        << "\n";
  }
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  need_format(o, {"text", "json"});
  if (o.max_label < 3) throw CLI::ValidationError("--max-label", "must be at least 3");
  std::vector<BatteryResult> results;
  results.push_back(battery_tietze(50));
  results.push_back(battery_triangle_presentation(2, o.max_label));
  results.push_back(battery_short_loops(3, o.max_label));
  std::vector<int> small{3};
  if (o.max_label >= 4) small.push_back(4);
  results.push_back(battery_forbidden_oracle(o.max_vertices, small, false));
  results.push_back(battery_forbidden_oracle(o.max_vertices, small, true));
  std::vector<int> all;
  for (int l = 2; l <= o.max_label; ++l) all.push_back(l);
  results.push_back(battery_random_graphs(o.max_vertices, all, o.samples, o.seed));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"failures", r.failures}});
    out << nlohmann::json{{"batteries", arr}, {"ok", ok}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.cases << "\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  return ok ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Triangular presentations, vertex links and curvature certificates for Artin groups."};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"text", "json", "dot"};

  auto input = [&](CLI::App* c) {
    c->add_option("input", o.input, "defining graph file (text or JSON), '-' for stdin")->required();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  };

  auto* certify_cmd = app.add_subcommand("certify", "certify non-positive curvature of the triangular complex");
  input(certify_cmd);
  certify_cmd->add_option("--scheme", o.scheme, "metric: auto picks A2, then B2")
      ->check(CLI::IsMember({"auto", "a2", "b2"}))
      ->capture_default_str();

  auto* link_cmd = app.add_subcommand("link", "print the vertex link");
  input(link_cmd);

  auto* loops_cmd = app.add_subcommand("loops", "list embedded loops of the link");
  input(loops_cmd);
  loops_cmd->add_option("--max", o.max_len, "maximum loop length")
      ->check(CLI::Range(std::size_t{1}, kShortLoopLimit))
      ->capture_default_str();

  auto* orient_cmd = app.add_subcommand("orient", "find an orientation without forbidden subgraphs");
  input(orient_cmd);
  orient_cmd->add_flag("--rotation", o.from_rotation, "orient along the faces of the rot lines instead of searching");

  auto* pieces_cmd = app.add_subcommand("pieces", "pieces and small cancellation conditions");
  input(pieces_cmd);

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "run the lemma batteries");
  verify_cmd->add_option("--max-label", o.max_label, "largest label in the sweeps")->capture_default_str();
  verify_cmd->add_option("--max-vertices", o.max_vertices, "vertices in the graph sweeps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{6}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, "seed for the random graph sweep")->capture_default_str();
  verify_cmd->add_option("--samples", o.samples, "random graphs to check")->capture_default_str();
  verify_cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*certify_cmd) return do_certify(o, out);
    if (*link_cmd) return do_link(o, out);
    if (*loops_cmd) return do_loops(o, out);
    if (*orient_cmd) return do_orient(o, out);
    if (*pieces_cmd) return do_pieces(o, out);
    if (*verify_cmd) return do_verify(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}

}  // namespace artin::cli
