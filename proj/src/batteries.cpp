#include "artin/batteries.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>

#include "artin/curvature.hpp"
#include "artin/cycles.hpp"
#include "artin/forbidden.hpp"
#include "artin/graph_enum.hpp"
#include "artin/graph_io.hpp"
#include "artin/link.hpp"

#ifdef ARTIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace artin {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string mnp(int m, int n, int p) {
  return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p);
}

void record(BatteryResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) {
    ++r.passed;
  } else if (r.failures.size() < kMaxReportedFailures) {
    r.failures.push_back(what);
  }
}

// Runs `check` on each case in parallel and records the outcome in case order.
template <typename Case, typename Check>
void run_cases(BatteryResult& r, const std::vector<Case>& cases, Check check) {
  std::vector<std::string> failure(cases.size());
  std::vector<char> ok(cases.size(), 0);
  const auto n = static_cast<std::int64_t>(cases.size());
#ifdef ARTIN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      ok[k] = check(cases[k], failure[k]) ? 1 : 0;
    } catch (const std::exception& e) {
      failure[k] += std::string(" threw: ") + e.what();
    }
  }
  for (std::size_t k = 0; k < cases.size(); ++k) record(r, ok[k] != 0, failure[k]);
}

std::string describe(const DefiningGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ", ";
    out += g.vertex(e.u).name() + orientation_marker(e.orientation) + g.vertex(e.v).name() + ":" +
           std::to_string(e.label);
  }
  return "{" + out + "}";
}

bool oracle_agrees(const DefiningGraph& gamma, std::string& why) {
  why = describe(gamma);
  const auto link = build_link(gamma);
  const auto g = girth(link).girth;
  const auto w = detect_forbidden(gamma);
  const bool long_loops = !g || *g >= 6;
  if (w.empty() != long_loops || (!w.empty() && *g != 4)) {
    why += ": " + std::to_string(w.size()) + " witnesses, girth " + (g ? std::to_string(*g) : std::string("none"));
    return false;
  }
  for (const auto& wit : w) {
    std::vector<std::size_t> idx;
    for (const auto& v : wit.induced_link_loop) idx.push_back(link.vertex_index(v.generator, v.end));
    const auto loop = make_loop(link, idx);
    if (!is_embedded_loop(link, loop) || loop.length() != 4) {
      why += ": witness loop not embedded";
      return false;
    }
  }
  return true;
}

}  // namespace

DefiningGraph oriented_triangle(int m, int n, int p) {
  DefiningGraph g;
  const GeneratorId a("a"), b("b"), c("c");
  g.add_edge(a, b, m, Orientation::Forward);
  g.add_edge(b, c, n, Orientation::Forward);
  g.add_edge(c, a, p, Orientation::Forward);
  return g;
}

BatteryResult battery_tietze(int max_m) {
  Timer t;
  BatteryResult r{"tietze-equivalence", 0, 0, {}, 0.0};
  for (int m = 2; m <= max_m; ++m) record(r, verify_tietze_equivalence(m).ok(), "m=" + std::to_string(m));
  r.seconds = t.seconds();
  return r;
}

BatteryResult battery_triangle_presentation(int lo, int hi) {
  Timer t;
  BatteryResult r{"triangular-presentation", 0, 0, {}, 0.0};
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n)
      for (int p = lo; p <= hi; ++p) {
        const auto g = oriented_triangle(m, n, p);
        const auto tri = build_triangular(g);
        const auto total = static_cast<std::size_t>(m + n + p);
        const bool ok = tri.presentation.generators().size() == total &&
                        tri.presentation.relators().size() == total && tri.presentation.is_triangular() &&
                        verify_triangular_against_standard(g);
        record(r, ok, mnp(m, n, p));
      }
  r.seconds = t.seconds();
  return r;
}

BatteryResult battery_short_loops(int lo, int hi) {
  Timer t;
  BatteryResult r{"short-loops", 0, 0, {}, 0.0};
  std::vector<std::array<int, 3>> cases;
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n)
      for (int p = lo; p <= hi; ++p) cases.push_back({m, n, p});
  run_cases(r, cases, [](const std::array<int, 3>& c, std::string& why) {
    const auto [m, n, p] = c;
    why = mnp(m, n, p);
    const auto link = build_link(oriented_triangle(m, n, p));
    const auto g = girth(link);
    if (g.girth != std::optional<std::size_t>(6)) {
      why += ": girth " + (g.girth ? std::to_string(*g.girth) : std::string("none"));
      return false;
    }
    const auto comps = components(middle_subgraph(link));
    std::size_t singles = 0, chains = 0;
    for (const auto& comp : comps) {
      if (comp.edges.size() == 1) ++singles;
      if (comp.edges.size() == 3 && comp.is_path()) ++chains;
    }
    if (singles != static_cast<std::size_t>(m + n + p - 9) || chains != 3 || comps.size() != singles + chains) {
      why += ": middle subgraph has " + std::to_string(singles) + " single edges, " + std::to_string(chains) +
             " 3-chains, " + std::to_string(comps.size()) + " components";
      return false;
    }
    for (std::size_t v = 0; v < link.vertex_count(); ++v) {
      const int level = link.vertex(v).level;
      if (level != 1 && level != 4) continue;
      if (!is_forest(neighborhood(link, v, 2))) {
        why += ": radius-2 neighbourhood of " + link.vertex(v).label() + " has a cycle";
        return false;
      }
    }
    return true;
  });
  r.seconds = t.seconds();
  return r;
}

BatteryResult battery_forbidden_oracle(std::size_t vertices, const std::vector<int>& labels, bool one_wildcard) {
  Timer t;
  BatteryResult r{one_wildcard ? "forbidden-oracle-wildcard" : "forbidden-oracle", 0, 0, {}, 0.0};
  const auto alphabet = one_wildcard ? directed_alphabet_with_wildcard(labels) : directed_alphabet(labels);
  const auto wildcard = static_cast<std::uint8_t>(alphabet.size() - 1);
  std::vector<DecoratedGraph> cases;
  enumerate_decorated_graphs(
      vertices, alphabet,
      [&](const std::vector<std::uint8_t>& code) {
        if (!one_wildcard) return true;
        return std::count(code.begin(), code.end(), wildcard) == 1;
      },
      [&](const DecoratedGraph& g) { cases.push_back(g); });
  run_cases(r, cases, [&](const DecoratedGraph& dg, std::string& why) {
    return oracle_agrees(to_defining_graph(vertices, alphabet, dg), why);
  });
  r.seconds = t.seconds();
  return r;
}

BatteryResult battery_triangle_free_b2(std::size_t vertices, const std::vector<int>& labels) {
  Timer t;
  BatteryResult r{"triangle-free-b2", 0, 0, {}, 0.0};
  std::vector<int> directed;
  bool with_two = false;
  for (int l : labels) {
    if (l == 2)
      with_two = true;
    else
      directed.push_back(l);
  }
  const auto alphabet = with_two ? directed_alphabet_with_wildcard(directed) : directed_alphabet(directed);
  std::vector<DecoratedGraph> cases;
  auto triangle_free_shape = [](const std::vector<std::pair<std::size_t, std::size_t>>& shape) {
    for (const auto& e : shape)
      for (const auto& f : shape)
        for (const auto& h : shape) {
          std::set<std::size_t> vs{e.first, e.second, f.first, f.second, h.first, h.second};
          if (vs.size() == 3 && &e < &f && &f < &h) return false;
        }
    return true;
  };
  enumerate_decorated_graphs(vertices, alphabet, {}, [&](const DecoratedGraph& g) { cases.push_back(g); },
                             triangle_free_shape);
  run_cases(r, cases, [&](const DecoratedGraph& dg, std::string& why) {
    const auto gamma = to_defining_graph(vertices, alphabet, dg);
    why = describe(gamma);
    const auto complex = build_complex(build_triangular(gamma));
    const auto link = build_link(complex);
    const auto metric = assign_metric(complex, link, MetricScheme::B2);
    const auto cond = check_link_condition(link, metric);
    if (!cond.holds) {
      why += ": B2 minimum " + cond.min_value->str() + " pi";
      return false;
    }
    for (const auto& loop : enumerate_short_loops(link, 6)) {
      const auto mids = loop.count(link, EdgeKind::Middle);
      if ((loop.length() == 4 && mids != 4) || (loop.length() == 6 && mids < 2)) {
        why += ": loop " + loop_str(link, loop) + " has " + std::to_string(mids) + " middle edges";
        return false;
      }
    }
    return true;
  });
  r.seconds = t.seconds();
  return r;
}

BatteryResult battery_random_graphs(std::size_t vertices, const std::vector<int>& labels, std::size_t count,
                                    std::uint64_t seed) {
  Timer t;
  BatteryResult r{"forbidden-oracle-random", 0, 0, {}, 0.0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<DefiningGraph> cases;
  for (std::size_t k = 0; k < count; ++k) {
    DefiningGraph g;
    for (std::size_t v = 0; v < vertices; ++v) g.add_vertex(GeneratorId("v" + std::to_string(v)));
    for (std::size_t u = 0; u < vertices; ++u)
      for (std::size_t v = u + 1; v < vertices; ++v) {
        if (!coin(rng)) continue;
        const int label = labels[pick(rng)];
        const bool forward = coin(rng);
        const auto o = label == 2 ? Orientation::Wildcard : forward ? Orientation::Forward : Orientation::Backward;
        g.add_edge(GeneratorId("v" + std::to_string(u)), GeneratorId("v" + std::to_string(v)), label, o);
      }
    cases.push_back(std::move(g));
  }
  run_cases(r, cases, [](const DefiningGraph& g, std::string& why) { return oracle_agrees(g, why); });
  r.seconds = t.seconds();
  return r;
}

std::string battery_line(const BatteryResult& r) {
  std::string out = std::string(r.ok() ? "PASS " : "FAIL ") + r.name + ": " + std::to_string(r.passed) + "/" +
                    std::to_string(r.cases);
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
  out += buf;
  for (const auto& f : r.failures) out += "\n  " + f;
  return out;
}

}  // namespace artin
