#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wegner7/generators.hpp"
#include "wegner7/io.hpp"
#include "wegner7/oracle.hpp"
#include "wegner7/pipeline.hpp"

namespace wegner7::cli {

enum Exit : int { kVerified = 0, kInputError = 2, kBudgetExceeded = 3, kCertificationFailure = 4 };

inline int exit_code(errc c) {
  switch (c) {
    case errc::asymmetric_rotation:
    case errc::euler_violation:
    case errc::input_violation:
    case errc::parse_error:
    case errc::not_facial:
    case errc::degree_too_low:
    case errc::not_cubic:
    case errc::spec_mismatch:
    case errc::bad_n:
    case errc::start_not_in_colors:
      return kInputError;
    case errc::budget_exceeded:
    case errc::over_budget:
    case errc::too_large:
    case errc::no_decomposition:
    case errc::no_light_pair:
    case errc::precondition_failed:
      return kBudgetExceeded;
    default:
      return kCertificationFailure;
  }
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int report_error(const Streams& io, const error& e, bool json) {
  const int code = exit_code(e.code());
  if (json)
    io.out << nlohmann::json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}, {"exit", code}}}}.dump(2) << "\n";
  else
    io.err << "error: " << e.what() << "\n";
  return code;
}

inline int cmd_square(const Streams& io, const std::string& path) {
  try {
    io.out << edge_list(square(as_simple(load_graph(path))));
    return kVerified;
  } catch (const error& e) {
    return report_error(io, e, false);
  }
}

struct ColorArgs {
  std::string input;
  ColorMode mode = ColorMode::Auto;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string out_path;
};

inline ColorResult color_graph(const LoadedGraph& g, const PipelineOptions& opt) {
  if (const auto* pg = std::get_if<PlanarGraph>(&g)) return seven_color_detailed(*pg, opt);
  const SimpleGraph& s = std::get<SimpleGraph>(g);
  if (opt.mode != ColorMode::Oracle)
    throw error(errc::input_violation, "graph6 input carries no embedding; use --mode oracle or a .rot file");
  if (s.max_degree() > 3) throw error(errc::input_violation, "maximum degree exceeds 3");
  if (!is_planar(s)) throw error(errc::input_violation, "graph is not planar");
  if (s.vertex_count() > opt.budget.max_vertices)
    throw error(errc::too_large, std::to_string(s.vertex_count()) + " vertices exceed the oracle limit of " + std::to_string(opt.budget.max_vertices));
  const auto best = optimal_coloring(square(s), opt.budget);
  ColorResult r;
  r.coloring = PaletteColoring(s.vertex_count());
  for (int v = 0; v < s.vertex_count(); ++v) r.coloring.set(v, best.color[static_cast<std::size_t>(v)] + 1);
  r.used_oracle = true;
  std::vector<int> all(static_cast<std::size_t>(s.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  r.path.push_back({"oracle", all, "oracle mode; " + std::to_string(best.colors) + " colors"});
  if (const auto bad = find_square_conflict(s, r.coloring)) throw error(errc::certification_failed, bad->reason);
  return r;
}

inline int cmd_color(const Streams& io, const ColorArgs& args) {
  try {
    const auto g = load_graph(args.input);
    PipelineOptions opt;
    opt.mode = args.mode;
    opt.budget = OracleBudget::from_env();
    const auto t0 = std::chrono::steady_clock::now();
    const ColorResult r = color_graph(g, opt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const SimpleGraph s = as_simple(g);
    if (!verify_square_coloring(s, r.coloring)) throw error(errc::certification_failed, "coloring failed verification");
    auto report = report_json(s, r);
    report["input"] = args.input;
    report["mode"] = to_string(args.mode);
    report["seed"] = args.seed ? nlohmann::json(*args.seed) : nlohmann::json(nullptr);
    report["timings_ms"] = {{"color", ms}};
    if (!args.out_path.empty()) write_file(args.out_path, report.dump(2) + "\n");
    if (args.json) {
      io.out << report.dump(2) << "\n";
    } else {
      io.out << "verified: " << r.coloring.colors_used() << " colors on " << s.vertex_count() << " vertices (" << path_taken(r) << ")\n";
      for (int v = 0; v < r.coloring.size(); ++v) io.out << v << " " << r.coloring[v] << "\n";
    }
    return kVerified;
  } catch (const error& e) {
    return report_error(io, e, args.json);
  } catch (const nlohmann::json::exception& e) {
    return report_error(io, error(errc::input_violation, e.what()), args.json);
  }
}

inline int cmd_verify(const Streams& io, const std::string& graph_path, const std::string& coloring_path) {
  try {
    const SimpleGraph s = as_simple(load_graph(graph_path));
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(coloring_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw error(errc::parse_error, coloring_path + ": " + e.what());
    }
    if (doc.is_object() && !doc.contains("coloring") && doc.contains("report")) doc = doc["report"];
    if (!doc.is_object() || !doc.contains("coloring")) throw error(errc::parse_error, coloring_path + ": missing \"coloring\"");
    const std::string hash = graph_hash(s);
    if (doc.contains("graph_hash") && doc["graph_hash"].get<std::string>() != hash) {
      io.err << "graph hash mismatch: coloring is for " << doc["graph_hash"].get<std::string>() << ", graph is " << hash << "\n";
      return kInputError;
    }
    const PaletteColoring pal = coloring_from_json(doc["coloring"], s.vertex_count());
    const auto checks = square_checks_json(s, pal);
    if (doc.contains("checks") && doc["checks"].contains("proper_square") &&
        doc["checks"]["proper_square"] != checks["proper_square"])
      io.err << "stored proper_square=" << doc["checks"]["proper_square"] << " differs from recomputed " << checks["proper_square"] << "\n";
    if (const auto bad = find_square_conflict(s, pal)) {
      io.out << "conflict: " << bad->reason;
      if (bad->edge.first != bad->edge.second && bad->edge.first >= 0) io.out << " (square edge " << bad->edge.first << "-" << bad->edge.second << ")";
      io.out << "\n";
      return kCertificationFailure;
    }
    io.out << "verified: " << pal.colors_used() << " colors, graph " << hash << "\n";
    return kVerified;
  } catch (const error& e) {
    return report_error(io, e, false);
  } catch (const nlohmann::json::exception& e) {
    return report_error(io, error(errc::parse_error, e.what()), false);
  }
}

struct CorpusArgs {
  CorpusSpec spec;
  int workers = 1;
  std::string out_dir;
  bool json = false;
};

struct CorpusRow {
  std::string id;
  int n = 0;
  bool verified = false;
  int colors = 0;
  int chi = -1;  // -1 when not computed
  std::string path;
  std::string failure;
  nlohmann::json report;
};

inline CorpusRow run_corpus_entry(const CorpusEntry& e, const PipelineOptions& opt) {
  CorpusRow row;
  row.id = e.id;
  row.n = e.graph.vertex_count();
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = seven_color_detailed(e.graph, opt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    row.verified = verify_square_coloring(e.graph, r.coloring);
    row.colors = r.coloring.colors_used();
    row.path = path_taken(r);
    row.report = report_json(to_simple(e.graph), r);
    row.report["id"] = e.id;
    row.report["metadata"] = to_json(e.meta);
    row.report["timings_ms"] = {{"color", ms}};
  } catch (const error& e2) {
    row.failure = e2.what();
  }
  if (e.graph.vertex_count() <= opt.budget.max_vertices) {
    try {
      row.chi = chromatic_number(square(e.graph), opt.budget);
    } catch (const error&) {
    }
  }
  return row;
}

inline std::vector<CorpusRow> run_corpus(const std::vector<CorpusEntry>& entries, const PipelineOptions& opt, int workers) {
  std::vector<CorpusRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) rows[i] = run_corpus_entry(entries[i], opt);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline int cmd_corpus(const Streams& io, const CorpusArgs& args) {
  try {
    const auto entries = corpus(args.spec);
    PipelineOptions opt;
    opt.budget = OracleBudget::from_env();
    const auto rows = run_corpus(entries, opt, args.workers);

    if (!args.out_dir.empty()) {
      std::filesystem::create_directories(args.out_dir);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto base = (std::filesystem::path(args.out_dir) / entries[i].id).string();
        write_file(base + ".rot", write_rot(entries[i].graph));
        nlohmann::json side{{"id", entries[i].id}, {"seed", entries[i].seed.seed}, {"steps", entries[i].seed.steps},
                            {"metadata", to_json(entries[i].meta)}};
        if (!rows[i].report.is_null()) side["report"] = rows[i].report;
        write_file(base + ".json", side.dump(2) + "\n");
      }
    }

    int verified = 0, max_colors = 0, need7 = 0;
    for (const auto& r : rows) {
      verified += r.verified ? 1 : 0;
      max_colors = std::max(max_colors, r.colors);
      need7 += r.chi == 7 ? 1 : 0;
    }
    if (args.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"id", r.id}, {"n", r.n}, {"verified", r.verified}, {"colors", r.colors}, {"chi", r.chi},
                       {"path", r.path}, {"failure", r.failure}});
      io.out << nlohmann::json{{"instances", arr}, {"verified", verified}, {"total", rows.size()},
                               {"max_colors", max_colors}, {"needing_7", need7}}.dump(2)
             << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%-12s %4s %8s %6s %4s  %s\n", "id", "n", "verified", "colors", "chi", "path");
      io.out << line;
      for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-12s %4d %8s %6d %4s  %s\n", r.id.c_str(), r.n, r.verified ? "yes" : "NO", r.colors,
                      r.chi < 0 ? "-" : std::to_string(r.chi).c_str(), r.failure.empty() ? r.path.c_str() : r.failure.c_str());
        io.out << line;
      }
      io.out << "verified " << verified << "/" << rows.size() << ", max colors " << max_colors << ", instances needing 7 colors: " << need7
             << "\n";
    }
    return verified == static_cast<int>(rows.size()) ? kVerified : kCertificationFailure;
  } catch (const error& e) {
    return report_error(io, e, args.json);
  }
}

inline int cmd_generate(const Streams& io, const std::string& kind, int n, std::uint64_t seed, const std::string& out_path) {
  try {
    PlanarGraph g;
    if (kind == "gadget") g = prism_gadget();
    else if (kind == "tight") g = wegner_tight();
    else if (kind == "prism") g = prism();
    else if (kind == "k4") g = k4();
    else if (kind == "random") g = random_cubic_planar(n, seed);
    else throw error(errc::input_violation, "unknown kind '" + kind + "'");
    const std::string text = write_rot(g);
    if (out_path.empty()) io.out << text;
    else write_file(out_path, text);
    return kVerified;
  } catch (const error& e) {
    return report_error(io, e, false);
  }
}

/// Parses argv and dispatches to a command. Returns the process exit code.
inline int run(int argc, const char* const* argv, const Streams& io) {
  CLI::App app{"Colorings of squares of planar graphs with maximum degree three"};
  app.require_subcommand(1);

  std::string sq_in;
  auto* sq = app.add_subcommand("square", "Print the edge list of G^2");
  sq->add_option("input", sq_in, ".rot or graph6 file")->required();

  ColorArgs ca;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  auto* col = app.add_subcommand("color", "Color G^2 with at most seven colors and verify");
  col->add_option("input", ca.input, ".rot or graph6 file")->required();
  col->add_option("--mode", mode, "decomp, oracle or auto")->check(CLI::IsMember({"decomp", "oracle", "auto"}));
  auto* seed_opt = col->add_option("--seed", seed, "recorded in the report");
  col->add_flag("--json", ca.json, "print the JSON report");
  col->add_option("--out", ca.out_path, "also write the JSON report here");

  std::string v_graph, v_coloring;
  auto* ver = app.add_subcommand("verify", "Check a coloring JSON against a graph");
  ver->add_option("graph", v_graph)->required();
  ver->add_option("coloring", v_coloring)->required();

  CorpusArgs co;
  co.spec.count = 100;
  auto* cor = app.add_subcommand("corpus", "Generate a corpus and color every member");
  cor->add_option("--sizes", co.spec.sizes, "even vertex counts")->delimiter(',');
  cor->add_option("--count", co.spec.count);
  cor->add_option("--seed", co.spec.seed);
  cor->add_option("--workers", co.workers)->check(CLI::PositiveNumber);
  cor->add_flag("--include-tight", co.spec.include_tight, "append the 14-vertex example needing seven colors");
  cor->add_option("--out", co.out_dir, "write .rot files and JSON sidecars here");
  cor->add_flag("--json", co.json);

  std::string g_kind = "random", g_out;
  int g_n = 8;
  std::uint64_t g_seed = 1;
  auto* gen = app.add_subcommand("generate", "Write a graph in .rot format");
  gen->add_option("kind", g_kind, "gadget, tight, prism, k4 or random")->check(CLI::IsMember({"gadget", "tight", "prism", "k4", "random"}));
  gen->add_option("--n", g_n);
  gen->add_option("--seed", g_seed);
  gen->add_option("--out", g_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int rc = app.exit(e, o, er);
    io.out << o.str();
    io.err << er.str();
    return rc == 0 ? 0 : kInputError;
  }

  if (*sq) return cmd_square(io, sq_in);
  if (*col) {
    ca.mode = mode == "decomp" ? ColorMode::Decomposition : mode == "oracle" ? ColorMode::Oracle : ColorMode::Auto;
    if (*seed_opt) ca.seed = seed;
    return cmd_color(io, ca);
  }
  if (*ver) return cmd_verify(io, v_graph, v_coloring);
  if (*cor) return cmd_corpus(io, co);
  return cmd_generate(io, g_kind, g_n, g_seed, g_out);
}

}  // namespace wegner7::cli
