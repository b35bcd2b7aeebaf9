#include "artin/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

namespace {

bool valid_vertex_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

// ---------------------------------------------------------------------------
// DefiningGraph

std::size_t DefiningGraph::add_vertex(const GeneratorId& v) {
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  if (!valid_vertex_name(v.name()))
    throw InvalidGraph("vertex name '" + v.name() + "' must use only letters, digits and '_'");
  index_.emplace(v, vertices_.size());
  vertices_.push_back(v);
  return vertices_.size() - 1;
}

std::size_t DefiningGraph::add_edge(const GeneratorId& u, const GeneratorId& v, int label, Orientation orientation) {
  if (u == v) throw InvalidGraph("loop at " + u.name());
  if (label < 2) throw InvalidGraph("edge " + u.name() + "-" + v.name() + " has label " + std::to_string(label) + " < 2");
  if (orientation == Orientation::Wildcard && label != 2)
    throw InvalidGraph("wildcard edge " + u.name() + "-" + v.name() + " must have label 2");
  const std::size_t iu = add_vertex(u);
  const std::size_t iv = add_vertex(v);
  if (find_edge(iu, iv)) throw InvalidGraph("multiple edges between " + u.name() + " and " + v.name());
  edges_.push_back({iu, iv, label, orientation});
  return edges_.size() - 1;
}

void DefiningGraph::set_orientation(std::size_t edge, Orientation orientation) {
  auto& e = edges_.at(edge);
  if (orientation == Orientation::Wildcard && e.label != 2) throw InvalidGraph("wildcard requires label 2");
  e.orientation = orientation;
}

void DefiningGraph::set_rotation(const GeneratorId& v, std::vector<GeneratorId> order) {
  if (!find_vertex(v)) throw InvalidRotation("rotation for unknown vertex " + v.name());
  rotation_[v] = std::move(order);
}

std::optional<std::size_t> DefiningGraph::find_vertex(const GeneratorId& v) const {
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t DefiningGraph::vertex_index(const GeneratorId& v) const {
  if (auto i = find_vertex(v)) return *i;
  throw InvalidGraph("unknown vertex " + v.name());
}

std::optional<std::size_t> DefiningGraph::find_edge(std::size_t u, std::size_t v) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return std::nullopt;
}

std::size_t DefiningGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const GammaEdge& e) { return e.u == v || e.v == v; }));
}

std::size_t DefiningGraph::tail(std::size_t e) const {
  const auto& ed = edges_.at(e);
  switch (ed.orientation) {
    case Orientation::Forward: return ed.u;
    case Orientation::Backward: return ed.v;
    case Orientation::Wildcard: break;
    case Orientation::Unoriented:
      if (ed.label != 2)
        throw UnorientedEdge("edge " + vertices_[ed.u].name() + "-" + vertices_[ed.v].name() + " has no direction");
      break;
  }
  return vertices_[ed.u] < vertices_[ed.v] ? ed.u : ed.v;
}

std::size_t DefiningGraph::head(std::size_t e) const {
  const auto& ed = edges_.at(e);
  return tail(e) == ed.u ? ed.v : ed.u;
}

bool DefiningGraph::fully_oriented() const noexcept {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const GammaEdge& e) { return e.orientation == Orientation::Unoriented && e.label != 2; });
}

bool DefiningGraph::large_type() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const GammaEdge& e) { return e.label >= 3; });
}

bool DefiningGraph::triangle_free() const {
  const std::size_t n = vertices_.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : edges_) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (const auto& e : edges_)
    for (std::size_t w = 0; w < n; ++w)
      if (adj[e.u][w] && adj[e.v][w]) return false;
  return true;
}

DefiningGraph DefiningGraph::reversed() const {
  DefiningGraph out = *this;
  for (auto& e : out.edges_) {
    if (e.orientation == Orientation::Forward) {
      e.orientation = Orientation::Backward;
    } else if (e.orientation == Orientation::Backward) {
      e.orientation = Orientation::Forward;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// OrientationAssignment

void OrientationAssignment::set(std::size_t edge, Orientation o) {
  if (o == Orientation::Unoriented) throw std::invalid_argument("assignment entries must be directed or wildcard");
  dirs_.at(edge) = o;
}

bool OrientationAssignment::covers_all() const noexcept {
  return std::all_of(dirs_.begin(), dirs_.end(), [](const auto& d) { return d.has_value(); });
}

DefiningGraph resolve_orientations(const DefiningGraph& gamma, const OrientationAssignment& assignment) {
  if (assignment.size() != 0 && assignment.size() != gamma.edge_count())
    throw IncompleteAssignment("assignment has " + std::to_string(assignment.size()) + " entries for " +
                               std::to_string(gamma.edge_count()) + " edges");
  DefiningGraph out = gamma;
  for (std::size_t e = 0; e < gamma.edge_count(); ++e) {
    const auto& ed = gamma.edge(e);
    if (ed.orientation == Orientation::Wildcard) continue;
    const auto given = assignment.size() ? assignment.get(e) : std::nullopt;
    if (given && *given == Orientation::Wildcard && ed.orientation != Orientation::Unoriented) {
      continue;  // a directed label-2 edge already reads both ways
    } else if (given) {
      out.set_orientation(e, *given);
    } else if (ed.orientation == Orientation::Unoriented) {
      if (ed.label != 2)
        throw IncompleteAssignment("no direction for edge " + gamma.vertex(ed.u).name() + "-" +
                                   gamma.vertex(ed.v).name());
      out.set_orientation(e, Orientation::Wildcard);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::vector<GeneratorId> generators, std::vector<Relator> relators,
                           std::set<GeneratorId> hubs)
    : generators_(std::move(generators)), relators_(std::move(relators)), hubs_(std::move(hubs)) {
  const std::set<GeneratorId> declared(generators_.begin(), generators_.end());
  if (declared.size() != generators_.size()) throw InvalidPresentation("duplicate generator");
  for (const auto& h : hubs_)
    if (!declared.contains(h)) throw InvalidPresentation("hub " + h.name() + " is not a generator");
  std::set<CyclicWord> seen;
  for (const auto& r : relators_) {
    if (r.word.empty()) throw InvalidPresentation("empty relator");
    if (!r.word.is_cyclically_reduced()) throw InvalidPresentation("relator not cyclically reduced: " + r.word.str());
    for (const auto& l : r.word)
      if (!declared.contains(l.generator()))
        throw InvalidPresentation("relator mentions undeclared generator " + l.generator().name());
    if (!seen.insert(CyclicWord(r.word)).second) throw InvalidPresentation("duplicate relator " + r.word.str());
  }
}

bool Presentation::is_triangular() const {
  if (hubs_.empty()) return relators_.empty();
  return std::all_of(relators_.begin(), relators_.end(), [this](const Relator& r) {
    const auto& w = r.word;
    return w.size() == 3 && w[0].exponent() == -1 && is_hub(w[0].generator()) && w[1].exponent() == 1 &&
           !is_hub(w[1].generator()) && w[2].exponent() == 1 && !is_hub(w[2].generator());
  });
}

std::string Presentation::str() const {
  std::string out = "gen:";
  for (const auto& g : generators_) out += " " + g.name();
  out += "\n";
  for (const auto& r : relators_) out += "rel: " + r.word.str() + "\n";
  return out;
}

Presentation Presentation::parse(const std::string& text) {
  std::vector<GeneratorId> gens;
  std::vector<Relator> rels;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':', first);
    if (colon == std::string::npos) throw ParseError("expected 'gen:' or 'rel:'", lineno, first + 1);
    const std::string key = line.substr(first, colon - first);
    const std::string rest = line.substr(colon + 1);
    try {
      if (key == "gen") {
        std::istringstream toks(rest);
        std::string t;
        while (toks >> t) gens.emplace_back(t);
      } else if (key == "rel") {
        rels.push_back({FreeWord::parse(rest), std::nullopt});
      } else {
        throw ParseError("unknown key '" + key + "'", lineno, first + 1);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno, colon + 2);
    }
  }
  std::set<GeneratorId> hubs;
  const bool all_triangles = !rels.empty() && std::all_of(rels.begin(), rels.end(), [](const Relator& r) {
    return r.word.size() == 3 && r.word[0].exponent() == -1;
  });
  if (all_triangles)
    for (const auto& r : rels) hubs.insert(r.word[0].generator());
  return Presentation(std::move(gens), std::move(rels), std::move(hubs));
}

// ---------------------------------------------------------------------------
// Builders

FreeWord alternating(const GeneratorId& a, const GeneratorId& b, int k) {
  std::vector<Letter> out;
  for (int i = 0; i < k; ++i) out.emplace_back(i % 2 == 0 ? a : b, 1);
  return FreeWord(std::move(out));
}

FreeWord standard_relator(const GeneratorId& a, const GeneratorId& b, int m) {
  return alternating(a, b, m) * alternating(b, a, m).inverse();
}

GeneratorId hub_name(const GeneratorId& tail, const GeneratorId& head) {
  return GeneratorId("x_{" + tail.name() + "," + head.name() + "}");
}

GeneratorId chain_name(const GeneratorId& tail, const GeneratorId& head, int i) {
  return GeneratorId("d_{" + tail.name() + "," + head.name() + "," + std::to_string(i) + "}");
}

Presentation build_standard(const DefiningGraph& gamma) {
  std::vector<Relator> rels;
  for (std::size_t e = 0; e < gamma.edge_count(); ++e) {
    const auto& ed = gamma.edge(e);
    rels.push_back({standard_relator(gamma.vertex(ed.u), gamma.vertex(ed.v), ed.label), RelatorSource{e, 0}});
  }
  return Presentation(gamma.vertices(), std::move(rels));
}

TriangularPresentation build_triangular(const DefiningGraph& gamma) {
  std::vector<GeneratorId> gens = gamma.vertices();
  std::vector<Relator> rels;
  std::set<GeneratorId> hubs;
  std::vector<HubRecord> records;
  for (std::size_t e = 0; e < gamma.edge_count(); ++e) {
    const auto& ed = gamma.edge(e);
    const GeneratorId& t = gamma.vertex(gamma.tail(e));
    const GeneratorId& h = gamma.vertex(gamma.head(e));
    HubRecord rec{hub_name(t, h), {t, h}, e};
    for (int i = 3; i <= ed.label; ++i) rec.cycle.push_back(chain_name(t, h, i));
    gens.push_back(rec.hub);
    gens.insert(gens.end(), rec.cycle.begin() + 2, rec.cycle.end());
    hubs.insert(rec.hub);
    const std::size_t m = rec.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      FreeWord w{Letter(rec.hub, -1), Letter(rec.cycle[i], 1), Letter(rec.cycle[(i + 1) % m], 1)};
      rels.push_back({std::move(w), RelatorSource{e, i}});
    }
    records.push_back(std::move(rec));
  }
  return {Presentation(std::move(gens), std::move(rels), std::move(hubs)), std::move(records), gamma.vertices()};
}

namespace {

FreeWord h_relator(const GeneratorId& x, const GeneratorId& a1, int m) {
  const FreeWord X{Letter(x, 1)};
  const FreeWord A{Letter(a1, 1)};
  const int k = m / 2;
  if (m % 2 == 0) return reduce(power(X, k) * A * (A * power(X, k)).inverse());
  return reduce(power(X, k + 1) * (A * power(X, k) * A).inverse());
}

}  // namespace

TwoGeneratorFamily build_two_generator_family(int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const GeneratorId x("x");
  std::vector<GeneratorId> a;
  for (int i = 1; i <= m; ++i) a.emplace_back("a" + std::to_string(i));

  Presentation g({a[0], a[1]}, {{standard_relator(a[0], a[1], m), std::nullopt}});
  Presentation h({x, a[0]}, {{h_relator(x, a[0], m), std::nullopt}});

  std::vector<GeneratorId> igens{x};
  igens.insert(igens.end(), a.begin(), a.end());
  std::vector<Relator> irels;
  for (int i = 0; i < m; ++i)
    irels.push_back({FreeWord{Letter(x, -1), Letter(a[i], 1), Letter(a[(i + 1) % m], 1)},
                     RelatorSource{0, static_cast<std::size_t>(i)}});
  Presentation ip(std::move(igens), std::move(irels), {x});
  return {std::move(g), std::move(h), std::move(ip)};
}

FreeWord solve_for(const FreeWord& relator, const GeneratorId& g) {
  if (relator.occurrences(g) != 1) throw std::invalid_argument(g.name() + " must occur exactly once in " + relator.str());
  const auto& ls = relator.letters();
  const auto pos = static_cast<std::size_t>(
      std::find_if(ls.begin(), ls.end(), [&](const Letter& l) { return l.generator() == g; }) - ls.begin());
  const FreeWord before = relator.subword(0, pos);
  const FreeWord after = relator.subword(pos + 1, ls.size() - pos - 1);
  // before * g^e * after = 1  =>  g^e = before^-1 after^-1
  FreeWord value = reduce(before.inverse() * after.inverse());
  return ls[pos].exponent() == 1 ? value : value.inverse();
}

FreeWord compose_chain(const GeneratorId& hub, const std::vector<GeneratorId>& cycle, std::vector<std::string>* trace) {
  const std::size_t m = cycle.size();
  std::vector<FreeWord> rels;
  for (std::size_t i = 0; i < m; ++i)
    rels.push_back(FreeWord{Letter(hub, -1), Letter(cycle[i], 1), Letter(cycle[(i + 1) % m], 1)});
  for (std::size_t j = 1; j < m; ++j) {
    const FreeWord value = solve_for(rels[j - 1], cycle[j]);
    if (trace) trace->push_back("eliminate " + cycle[j].name() + " = " + value.str());
    for (std::size_t k = j; k < m; ++k) rels[k] = substitute(rels[k], cycle[j], value);
  }
  FreeWord out = cyclically_reduce(rels[m - 1]);
  if (trace) trace->push_back("chain relator: " + out.str());
  return out;
}

VerificationReport verify_tietze_equivalence(int m) {
  VerificationReport rep;
  rep.m = m;
  const auto fam = build_two_generator_family(m);
  const GeneratorId x("x"), a1("a1"), a2("a2");
  const FreeWord g_rel = fam.g.relators().front().word;
  const FreeWord h_rel = fam.h.relators().front().word;
  const CyclicWord g_cyc(g_rel), h_cyc(h_rel);
  auto& tr = rep.trace;
  tr.push_back("G relator: " + g_rel.str());
  tr.push_back("H relator: " + h_rel.str());

  const FreeWord x_def{Letter(a1, 1), Letter(a2, 1)};
  const FreeWord h_sub = substitute(h_rel, x, x_def);
  const FreeWord h_sub_cyc = cyclically_reduce(h_sub);
  tr.push_back("H with x -> a1 a2: " + h_sub.str());
  tr.push_back("cyclically reduced: " + h_sub_cyc.str());
  rep.h_to_g = CyclicWord(h_sub_cyc).equal_up_to_inversion(g_cyc);

  const FreeWord a2_def{Letter(a1, -1), Letter(x, 1)};
  const FreeWord g_sub = cyclically_reduce(substitute(g_rel, a2, a2_def));
  tr.push_back("G with a2 -> a1^-1 x, cyclically reduced: " + g_sub.str());
  rep.g_to_h = CyclicWord(g_sub).equal_up_to_inversion(h_cyc);

  std::vector<GeneratorId> cycle;
  for (int i = 1; i <= m; ++i) cycle.emplace_back("a" + std::to_string(i));
  const FreeWord chained = compose_chain(x, cycle, &tr);
  rep.i_to_h = CyclicWord(chained).equal_up_to_inversion(h_cyc);
  return rep;
}

bool verify_triangular_against_standard(const DefiningGraph& gamma, std::vector<std::string>* trace) {
  const auto tri = build_triangular(gamma);
  bool ok = true;
  for (const auto& rec : tri.hubs) {
    const FreeWord chained = compose_chain(rec.hub, rec.cycle, trace);
    const FreeWord hub_def{Letter(rec.cycle[0], 1), Letter(rec.cycle[1], 1)};
    const FreeWord std_form = cyclically_reduce(substitute(chained, rec.hub, hub_def));
    const auto& ed = gamma.edge(rec.gamma_edge);
    const FreeWord expected = standard_relator(gamma.vertex(ed.u), gamma.vertex(ed.v), ed.label);
    const bool match = CyclicWord(std_form).equal_up_to_inversion(CyclicWord(expected));
    if (trace) trace->push_back(rec.hub.name() + " -> " + std_form.str() + (match ? " [ok]" : " [MISMATCH]"));
    ok = ok && match;
  }
  return ok;
}

}  // namespace artin
