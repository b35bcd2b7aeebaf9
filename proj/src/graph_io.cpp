#include "artin/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

Orientation marker_orientation(const Token& t, std::size_t lineno) {
  if (t.text == ">") return Orientation::Forward;
  if (t.text == "<") return Orientation::Backward;
  if (t.text == "?") return Orientation::Wildcard;
  if (t.text == ".") return Orientation::Unoriented;
  throw ParseError("bad orientation '" + t.text + "' (expected >, <, ? or .)", lineno, t.column);
}

int parse_label(const Token& t, std::size_t lineno) {
  std::size_t used = 0;
  int label = 0;
  try {
    label = std::stoi(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size()) throw ParseError("bad label '" + t.text + "'", lineno, t.column);
  return label;
}

}  // namespace

char orientation_marker(Orientation o) {
  switch (o) {
    case Orientation::Forward: return '>';
    case Orientation::Backward: return '<';
    case Orientation::Wildcard: return '?';
    case Orientation::Unoriented: return '.';
  }
  return '.';
}

DefiningGraph parse_gamma(std::string_view text) {
  DefiningGraph g;
  struct PendingRot {
    std::string vertex;
    std::vector<GeneratorId> order;
    std::size_t line;
    std::size_t column;
  };
  std::vector<PendingRot> rots;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    try {
      if (kw.text == "vertex") {
        if (toks.size() != 2) throw ParseError("expected 'vertex <name>'", lineno, kw.column);
        g.add_vertex(GeneratorId(toks[1].text));
      } else if (kw.text == "edge") {
        if (toks.size() < 4 || toks.size() > 5)
          throw ParseError("expected 'edge <u> <v> <label> [>|<|?|.]'", lineno, kw.column);
        const int label = parse_label(toks[3], lineno);
        const Orientation o = toks.size() == 5 ? marker_orientation(toks[4], lineno) : Orientation::Unoriented;
        g.add_edge(GeneratorId(toks[1].text), GeneratorId(toks[2].text), label, o);
      } else if (kw.text == "rot") {
        if (toks.size() < 2 || !toks[1].text.ends_with(':'))
          throw ParseError("expected 'rot <v>: <n1> <n2> ...'", lineno, kw.column);
        PendingRot r{toks[1].text.substr(0, toks[1].text.size() - 1), {}, lineno, toks[1].column};
        for (std::size_t i = 2; i < toks.size(); ++i) r.order.emplace_back(toks[i].text);
        rots.push_back(std::move(r));
      } else {
        throw ParseError("unknown directive '" + kw.text + "'", lineno, kw.column);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno, toks.size() > 1 ? toks[1].column : kw.column);
    }
  }
  for (auto& r : rots) {
    try {
      g.set_rotation(GeneratorId(r.vertex), std::move(r.order));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), r.line, r.column);
    }
  }
  return g;
}

DefiningGraph parse_gamma_json(const nlohmann::json& j) {
  DefiningGraph g;
  try {
    for (const auto& v : j.value("vertices", nlohmann::json::array())) g.add_vertex(GeneratorId(v.get<std::string>()));
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      const std::string mark = e.value("orientation", std::string("."));
      Orientation o = Orientation::Unoriented;
      if (mark == ">") o = Orientation::Forward;
      else if (mark == "<") o = Orientation::Backward;
      else if (mark == "?") o = Orientation::Wildcard;
      else if (mark != ".") throw InvalidGraph("bad orientation '" + mark + "'");
      g.add_edge(GeneratorId(e.at("u").get<std::string>()), GeneratorId(e.at("v").get<std::string>()),
                 e.at("label").get<int>(), o);
    }
    if (j.contains("rotation"))
      for (const auto& [v, order] : j.at("rotation").items()) {
        std::vector<GeneratorId> ids;
        for (const auto& n : order) ids.emplace_back(n.get<std::string>());
        g.set_rotation(GeneratorId(v), std::move(ids));
      }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return g;
}

DefiningGraph parse_gamma_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 1, e.byte);
    }
    return parse_gamma_json(j);
  }
  return parse_gamma(text);
}

DefiningGraph load_gamma(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gamma_any(ss.str());
}

std::string write_gamma(const DefiningGraph& gamma) {
  std::string out;
  for (const auto& v : gamma.vertices()) out += "vertex " + v.name() + "\n";
  for (const auto& e : gamma.edges())
    out += "edge " + gamma.vertex(e.u).name() + " " + gamma.vertex(e.v).name() + " " + std::to_string(e.label) + " " +
           orientation_marker(e.orientation) + "\n";
  for (const auto& [v, order] : gamma.rotation()) {
    out += "rot " + v.name() + ":";
    for (const auto& n : order) out += " " + n.name();
    out += "\n";
  }
  return out;
}

nlohmann::json gamma_to_json(const DefiningGraph& gamma) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : gamma.vertices()) j["vertices"].push_back(v.name());
  j["edges"] = nlohmann::json::array();
  for (const auto& e : gamma.edges())
    j["edges"].push_back({{"u", gamma.vertex(e.u).name()},
                          {"v", gamma.vertex(e.v).name()},
                          {"label", e.label},
                          {"orientation", std::string(1, orientation_marker(e.orientation))}});
  if (!gamma.rotation().empty()) {
    j["rotation"] = nlohmann::json::object();
    for (const auto& [v, order] : gamma.rotation()) {
      auto arr = nlohmann::json::array();
      for (const auto& n : order) arr.push_back(n.name());
      j["rotation"][v.name()] = arr;
    }
  }
  return j;
}

}  // namespace artin
