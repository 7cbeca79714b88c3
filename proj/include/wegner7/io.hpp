#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wegner7/coloring.hpp"
#include "wegner7/error.hpp"
#include "wegner7/pipeline.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

// ---------------------------------------------------------------------------
// .rot: first line n, then one line "v: a b c" per vertex listing neighbors clockwise.
// '#' starts a comment. Vertices are 0-indexed.

inline PlanarGraph parse_rot(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<int>> rot;
  std::vector<bool> seen;
  auto fail = [&](const std::string& msg) { throw error(errc::parse_error, "line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0) fail("expected the vertex count");
      std::string rest;
      if (ls >> rest) fail("unexpected text after the vertex count");
      rot.assign(static_cast<std::size_t>(n), {});
      seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    int v = -1;
    char colon = 0;
    if (!(ls >> v >> colon) || colon != ':') fail("expected 'vertex: neighbors'");
    if (v < 0 || v >= n) fail("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    if (seen[static_cast<std::size_t>(v)]) fail("vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = true;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int w = -1;
      try {
        w = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail("bad neighbor '" + tok + "'");
      if (w < 0 || w >= n) fail("neighbor " + std::to_string(w) + " out of range");
      rot[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  if (n < 0) throw error(errc::parse_error, "line " + std::to_string(lineno) + ": empty input");
  return PlanarGraph::from_rotation(std::move(rot));
}

inline std::string write_rot(const PlanarGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += std::to_string(v) + ":";
    for (int w : g.neighbors(v)) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::input_violation, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::input_violation, "cannot write " + path);
  out << text;
}

/// An input graph: embedded (.rot) or abstract (graph6).
using LoadedGraph = std::variant<PlanarGraph, SimpleGraph>;

inline bool looks_like_graph6(const std::string& path, std::string_view text) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".g6" || ext == ".graph6") return true;
  if (ext == ".rot") return false;
  std::string_view t = text;
  if (t.starts_with(">>graph6<<")) return true;
  const auto end = t.find_first_of("\r\n");
  const auto first = t.substr(0, end);
  return !first.empty() && first.find_first_of(" :#") == std::string_view::npos &&
         !std::all_of(first.begin(), first.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline LoadedGraph parse_graph(const std::string& name, std::string_view text) {
  if (looks_like_graph6(name, text)) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    const auto end = text.find_first_of("\r\n");
    return read_graph6(text.substr(0, end));
  }
  return parse_rot(text);
}

inline LoadedGraph load_graph(const std::string& path) { return parse_graph(path, read_file(path)); }

inline SimpleGraph as_simple(const LoadedGraph& g) {
  return std::visit([](const auto& x) { return to_simple(x); }, g);
}

inline std::string edge_list(const SimpleGraph& g) {
  const auto es = g.edges();
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(es.size()) + "\n";
  for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline const char* class_name(ColorClass c) {
  switch (c) {
    case ColorClass::Blue: return "blue";
    case ColorClass::Red: return "red";
    case ColorClass::None: return "none";
  }
  return "none";
}

inline nlohmann::json coloring_json(const PaletteColoring& pal) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v = 0; v < pal.size(); ++v) arr.push_back({{"vertex", v}, {"class", class_name(pal.class_of(v))}, {"color", pal[v]}});
  return arr;
}

inline PaletteColoring coloring_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw error(errc::parse_error, "\"coloring\" must be an array");
  PaletteColoring pal(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("vertex") || !e.contains("color"))
      throw error(errc::parse_error, "coloring entries need \"vertex\" and \"color\"");
    const int v = e.at("vertex").get<int>();
    if (v < 0 || v >= n) throw error(errc::parse_error, "coloring vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw error(errc::parse_error, "vertex " + std::to_string(v) + " colored twice");
    seen[static_cast<std::size_t>(v)] = true;
    pal.set(v, e.at("color").get<int>());
  }
  return pal;
}

inline nlohmann::json square_checks_json(const SimpleGraph& g, const PaletteColoring& pal) {
  const auto conflict = find_square_conflict(g, pal);
  nlohmann::json j{{"proper_square", !conflict}, {"colors_used", pal.colors_used()}, {"max_color", pal.max_color()},
                   {"within_palette", pal.max_color() <= kPaletteSize}};
  if (conflict) j["conflict"] = {{"edge", {conflict->edge.first, conflict->edge.second}}, {"reason", conflict->reason}};
  return j;
}

inline nlohmann::json to_json(const BoundarySpec& spec) {
  nlohmann::json j{{"outer", spec.outer.vertices}};
  if (spec.special) {
    j["special"] = {{"role", spec.special->role == BoundarySpec::Role::B0 ? "b0" : "r0"},
                    {"vertex", spec.special->vertex},
                    {"kind", to_string(spec.special->kind)}};
  }
  return j;
}

inline nlohmann::json to_json(const DecompositionChecks& c) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : c.red_paths) paths.push_back(p.vertices);
  nlohmann::json j{{"extends_precoloring", c.extends_precoloring},
                   {"no_red_facial_4path", c.no_red_facial_4path},
                   {"blue_proper", c.blue_proper},
                   {"r0_prime_rule_applies", c.r0_prime_rule_applies},
                   {"r0_prime_red", c.r0_prime_red},
                   {"red_facial_paths", paths}};
  if (c.blue_conflict) j["blue_conflict"] = {c.blue_conflict->first, c.blue_conflict->second};
  return j;
}

inline nlohmann::json to_json(const CertifiedDecomposition& d) {
  nlohmann::json marks = nlohmann::json::array();
  for (int v = 0; v < d.host.vertex_count(); ++v)
    marks.push_back({{"vertex", d.to_input[static_cast<std::size_t>(v)]},
                     {"class", d.cert.rb.is_blue(v) ? "blue" : "red"},
                     {"blue_color", d.cert.blue3[v]}});
  nlohmann::json j{{"host_hash", graph_hash(d.host)},
                   {"host_to_input", d.to_input},
                   {"spec", to_json(d.spec)},
                   {"marks", marks},
                   {"checks", to_json(d.cert.checks)},
                   {"search_nodes", d.cert.nodes}};
  if (d.removed)
    j["removed_edge"] = {d.to_input[static_cast<std::size_t>(d.removed->first)], d.to_input[static_cast<std::size_t>(d.removed->second)]};
  return j;
}

inline const char* path_taken(const ColorResult& r) {
  if (r.used_oracle && r.used_decomposition) return "mixed";
  if (r.used_oracle) return "oracle";
  if (r.used_decomposition) return "decomposition";
  return "reduction";
}

/// Report that can be re-verified against the graph alone.
inline nlohmann::json report_json(const SimpleGraph& g, const ColorResult& r) {
  nlohmann::json path = nlohmann::json::array();
  for (const auto& s : r.path) path.push_back({{"action", s.action}, {"vertices", s.vertices}, {"detail", s.detail}});
  nlohmann::json attempts = nlohmann::json::array();
  for (const auto& a : r.attempts)
    attempts.push_back({{"route", a.route}, {"r0", a.r0}, {"kind", to_string(a.kind)}, {"outcome", a.outcome}});
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return {{"graph_hash", graph_hash(g)},
          {"n", g.vertex_count()},
          {"path_taken", path_taken(r)},
          {"coloring", coloring_json(r.coloring)},
          {"checks", square_checks_json(g, r.coloring)},
          {"path", path},
          {"attempts", attempts},
          {"certificates", certs}};
}

}  // namespace wegner7
