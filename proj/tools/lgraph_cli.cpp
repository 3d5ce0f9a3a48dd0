// Command-line front end. Exit status: 0 success, 1 negative answer, 2 error.
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lgraph/error.hpp"
#include "lgraph/generators.hpp"
#include "lgraph/io.hpp"
#include "lgraph/labeling.hpp"
#include "lgraph/lift3d.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/recognition.hpp"
#include "lgraph/render.hpp"
#include "lgraph/schnyder.hpp"
#include "lgraph/sl.hpp"

using namespace lgraph;

namespace {

struct RunConfig {
  std::string command;
  std::string in, out;
  std::uint64_t seed = 0;
  int max_iters = 50;
  std::vector<Vertex> base_edge;
  bool overlay_staircase = false;
  int count = 10;
  int n_min = 4, n_max = 30;
  std::size_t limit = 1000;
};

struct Outcome {
  int status = 0;
  std::string text;  // written to --out or stdout
};

Outcome ok(const Json& j, int status = 0) { return {status, j.dump(2) + "\n"}; }

bool is_triangulation(const PlaneGraph& g) {
  const int n = g.num_vertices();
  if (n < 3 || g.num_edges() != 3 * n - 6 || !g.embedded()) return false;
  for (const auto& f : g.faces())
    if (f.size() != 3) return false;
  return true;
}

// v1, v2, vn clockwise on the outer face, rotated to start at the base edge.
std::array<Vertex, 3> outer_triangle(const GraphDocument& doc) {
  auto f = doc.graph.outer_face();
  if (f.size() != 3) throw NotTriangulation("outer face is not a triangle");
  if (doc.base_edge) {
    for (int i = 0; i < 3; ++i)
      if (f[i] == doc.base_edge->first && f[(i + 1) % 3] == doc.base_edge->second)
        return {f[i], f[(i + 1) % 3], f[(i + 2) % 3]};
    throw MalformedInput("base_edge must be two consecutive outer vertices in clockwise order");
  }
  return {f[0], f[1], f[2]};
}

// Embeds a graph with 3n - 6 edges if it came without a rotation.
bool maybe_triangulation(PlaneGraph& g) {
  const int n = g.num_vertices();
  if (n < 3 || g.num_edges() != 3 * n - 6) return false;
  if (!g.embedded()) {
    if (!is_planar(g)) return false;
    embed(g);
  }
  return is_triangulation(g);
}

GraphDocument input_graph(const RunConfig& c, bool embed) {
  auto j = read_json_file(c.in);
  auto doc = embed ? load_graph(j) : load_abstract_graph(j);
  if (c.base_edge.size() == 2) {
    if (!doc.graph.adjacent(c.base_edge[0], c.base_edge[1])) throw MalformedInput("--base-edge is not an edge");
    doc.base_edge = {c.base_edge[0], c.base_edge[1]};
  }
  return doc;
}

SchnyderRealizer triangulation_realizer(const GraphDocument& doc) {
  if (!is_triangulation(doc.graph)) throw NotTriangulation("input is not a maximal plane graph");
  return compute_realizer(doc.graph, outer_triangle(doc));
}

Json recognition_json(const Recognition& r) {
  Json j{{"lgraph", r.lgraph}};
  if (r.lgraph) {
    j["base_edge"] = {r.v1, r.v2};
    j["order"] = r.order->order;
  } else {
    j["reason"] = r.reason;
  }
  return j;
}

Outcome cmd_validate(const RunConfig& c) {
  auto j = read_json_file(c.in);
  Report rep;
  std::string kind;
  if (j.contains("shapes")) {
    kind = "lrep";
    rep = validate_lrep(rep_from_json(j));
  } else if (j.contains("boxes")) {
    kind = "cuboids";
    rep = validate_cuboids(cuboids_from_json(j)).report;
  } else if (j.contains("triangles")) {
    kind = "triangles";
    rep = validate_triangles(triangles_from_json(j));
  } else if (j.contains("outer") && j.contains("graph")) {
    kind = "realizer";
    rep = validate_realizer(realizer_from_json(j));
  } else {
    kind = "graph";
    auto doc = load_graph(j);
    return ok({{"kind", kind},
               {"valid", true},
               {"n", doc.graph.num_vertices()},
               {"edges", doc.graph.num_edges()},
               {"faces", doc.graph.faces().size()},
               {"triangulation", is_triangulation(doc.graph)}});
  }
  return ok({{"kind", kind}, {"valid", rep.ok()}, {"failures", rep.failures}}, rep.ok() ? 0 : 1);
}

Outcome cmd_recognize(const RunConfig& c) {
  auto doc = input_graph(c, false);
  if (doc.base_edge) {
    auto r = test_base_edge(doc.graph, doc.base_edge->first, doc.base_edge->second);
    Json j{{"lgraph", r.ok()}, {"base_edge", {doc.base_edge->first, doc.base_edge->second}}};
    if (r.ok())
      j["order"] = r.order->order;
    else
      j["refusal"] = {{"step", r.refusal.step}, {"detail", r.refusal.detail}};
    return ok(j, r.ok() ? 0 : 1);
  }
  auto r = recognize(doc.graph);
  return ok(recognition_json(r), r.lgraph ? 0 : 1);
}

Outcome cmd_realizer(const RunConfig& c) { return ok(realizer_to_json(triangulation_realizer(input_graph(c, true)))); }

Outcome cmd_label(const RunConfig& c) {
  return ok(labeling_to_json(labeling_from_realizer(triangulation_realizer(input_graph(c, true)))));
}

Outcome cmd_order(const RunConfig& c) {
  auto doc = input_graph(c, false);
  if (maybe_triangulation(doc.graph)) {
    auto r = triangulation_realizer(doc);
    auto d = delete_green(r);
    auto two = two_canonical_from_labeling(labeling_from_realizer(r, d));
    std::vector<Vertex> host_two;
    for (Vertex v : two.order) host_two.push_back(d.to_host[v]);
    return ok({{"canonical", canonical_order_from_realizer(r).order}, {"two_canonical", host_two}});
  }
  auto r = recognize(doc.graph);
  if (!r.lgraph) return ok(recognition_json(r), 1);
  return ok({{"two_canonical", r.order->order}, {"base_edge", {r.v1, r.v2}}});
}

// Representation of the input: a triangulation goes through its realizer
// (the representation is of H minus v_n and the green edges), any other graph
// through recognition.
std::optional<LRepresentation> build(const RunConfig& c, Json& info) {
  auto doc = input_graph(c, false);
  const int n = doc.graph.num_vertices();
  if (n >= 4 && maybe_triangulation(doc.graph)) {
    auto r = triangulation_realizer(doc);
    auto d = delete_green(r);
    auto el = labeling_from_realizer(r, d);
    auto rep = build_lrep(d.graph, two_canonical_from_labeling(el));
    info["from"] = "realizer";
    info["to_host"] = d.to_host;
    return rep;
  }
  if (doc.base_edge) {
    auto t = test_base_edge(doc.graph, doc.base_edge->first, doc.base_edge->second);
    if (!t.ok()) {
      info = {{"lgraph", false}, {"refusal", {{"step", t.refusal.step}, {"detail", t.refusal.detail}}}};
      return std::nullopt;
    }
    return *t.rep;
  }
  auto r = recognize(doc.graph);
  if (!r.lgraph) {
    info = recognition_json(r);
    return std::nullopt;
  }
  return *r.rep;
}

Outcome cmd_build(const RunConfig& c) {
  Json info;
  auto rep = build(c, info);
  if (!rep) return ok(info, 1);
  return ok(rep_to_json(*rep));
}

Outcome cmd_equilateralize(const RunConfig& c) {
  auto rep = rep_from_json(read_json_file(c.in));
  auto eq = equilateralize(rep);
  auto check = validate_lrep(eq);
  if (!check.ok()) throw Error("equilateral representation failed validation: " + check.summary());
  return ok(rep_to_json(eq));
}

Outcome cmd_complete(const RunConfig& c) {
  auto comp = complete_to_triangulation(rep_from_json(read_json_file(c.in)));
  return ok(realizer_to_json(comp.realizer));
}

Outcome cmd_lift(const RunConfig& c) {
  auto rep = rep_from_json(read_json_file(c.in));
  auto comp = complete_to_triangulation(rep);
  auto h = heights_from_canonical(canonical_order_from_realizer(comp.realizer));
  auto cr = lift_cuboids(rep, comp.realizer, h);
  auto check = validate_cuboids(cr);
  if (!check.report.ok()) throw Error("lift failed validation: " + check.report.summary());
  return ok(cuboids_to_json(cr));
}

Outcome cmd_sl_solve(const RunConfig& c) {
  auto r = triangulation_realizer(input_graph(c, true));
  auto out = felsner_iterate(r, c.max_iters);
  Json j{{"converged", out.converged}, {"trace", trace_to_json(out.trace)}};
  if (out.converged) {
    j["realizer"] = realizer_to_json(out.realizer);
    j["rep"] = rep_to_json(out.rep);
    j["approximate"] = out.solution.approximate;
    j["triangles"] = triangles_to_json(homothetic_triangles(out.rep, out.realizer));
    j["cubes"] = cuboids_to_json(cubes_from_sl(out.rep, out.realizer));
  }
  return ok(j, out.converged ? 0 : 1);
}

Outcome cmd_render_svg(const RunConfig& c) {
  auto j = read_json_file(c.in);
  if (j.contains("triangles") && j["triangles"].is_object()) j = j["triangles"];  // sl-solve output
  SvgOptions opt{c.overlay_staircase};
  if (j.contains("triangles")) return {0, render_svg(triangles_from_json(j), opt)};
  if (j.contains("rep")) j = j["rep"];
  return {0, render_svg(rep_from_json(j), opt)};
}

Outcome cmd_export_obj(const RunConfig& c) {
  auto j = read_json_file(c.in);
  if (j.contains("cubes")) j = j["cubes"];
  return {0, export_obj(cuboids_from_json(j))};
}

// Seeded triangulations, each run through the full 2D and 3D pipeline.
Outcome cmd_corpus(const RunConfig& c) {
  if (c.out.empty()) throw MalformedInput("corpus needs --out DIR");
  if (c.n_min < 4 || c.n_max < c.n_min) throw MalformedInput("need 4 <= n-min <= n-max");
  std::filesystem::create_directories(c.out);
  std::vector<Json> rows(c.count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t seed = c.seed + i;
    int n = c.n_min + static_cast<int>(seed % static_cast<std::uint64_t>(c.n_max - c.n_min + 1));
    Json row{{"instance", i}, {"n", n}, {"seed", seed}};
    try {
      auto h = random_triangulation(n, seed);
      auto r = compute_realizer(h, {0, 1, n - 1});
      auto d = delete_green(r);
      auto rep = equilateralize(build_lrep(d.graph, two_canonical_from_labeling(labeling_from_realizer(r, d))));
      auto comp = complete_to_triangulation(rep);
      auto cr = lift_cuboids(rep, comp.realizer, heights_from_canonical(canonical_order_from_realizer(comp.realizer)));
      auto check = validate_cuboids(cr);
      std::string base = c.out + "/instance_" + std::to_string(i);
      write_text_file(base + "_graph.json", graph_to_json(h).dump(2) + "\n");
      write_text_file(base + "_rep.json", rep_to_json(rep).dump(2) + "\n");
      write_text_file(base + "_boxes.json", cuboids_to_json(cr).dump(2) + "\n");
      row["ok"] = check.report.ok() && check.proper;
    } catch (const Error& e) {
      row["ok"] = false;
      row["error"] = e.what();
    }
    rows[i] = row;
  }
  bool all = true;
  for (const auto& r : rows) all = all && r["ok"].get<bool>();
  return ok({{"instances", rows}, {"all_ok", all}}, all ? 0 : 1);
}

Outcome cmd_oracle(const RunConfig& c) {
  auto doc = input_graph(c, false);
  std::vector<std::pair<Vertex, Vertex>> bases;
  if (doc.base_edge)
    bases.push_back(*doc.base_edge);
  else
    for (const auto& e : doc.graph.edges()) {
      bases.emplace_back(e.u, e.v);
      bases.emplace_back(e.v, e.u);
    }
  Json rows = Json::array();
  bool any = false;
  for (auto [a, b] : bases) {
    auto orders = oracle_two_canonical(doc.graph, a, b, c.limit);
    Json lst = Json::array();
    for (const auto& o : orders) lst.push_back(o.order);
    rows.push_back({{"base_edge", {a, b}}, {"orders", lst}, {"truncated", orders.size() >= c.limit}});
    any = any || !orders.empty();
  }
  return ok({{"two_canonical", any}, {"bases", rows}}, any ? 0 : 1);
}

Outcome run(const RunConfig& c) {
  if (c.command == "validate") return cmd_validate(c);
  if (c.command == "recognize") return cmd_recognize(c);
  if (c.command == "realizer") return cmd_realizer(c);
  if (c.command == "label") return cmd_label(c);
  if (c.command == "order") return cmd_order(c);
  if (c.command == "build") return cmd_build(c);
  if (c.command == "equilateralize") return cmd_equilateralize(c);
  if (c.command == "complete") return cmd_complete(c);
  if (c.command == "lift") return cmd_lift(c);
  if (c.command == "sl-solve") return cmd_sl_solve(c);
  if (c.command == "render-svg") return cmd_render_svg(c);
  if (c.command == "export-obj") return cmd_export_obj(c);
  if (c.command == "corpus") return cmd_corpus(c);
  if (c.command == "oracle") return cmd_oracle(c);
  throw MalformedInput("unknown command " + c.command);
}

void fail(const std::string& what) { std::cerr << Json{{"error", what}}.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-shape contact graphs: recognition, representations, 3D lifts"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "validate a graph, realizer, representation, triangles or boxes"},
      {"recognize", "decide whether the graph is a maximal L-graph"},
      {"realizer", "Schnyder realizer of a triangulation"},
      {"label", "edge labeling of a triangulation minus v_n"},
      {"order", "canonical and 2-canonical orders"},
      {"build", "L-representation"},
      {"equilateralize", "equilateral representation with the same labeling"},
      {"complete", "complete a representation to a triangulation with realizer"},
      {"lift", "square-based cuboids from a representation"},
      {"sl-solve", "SL-representation by the iteration, with triangles and cubes"},
      {"render-svg", "SVG of a representation or triangles"},
      {"export-obj", "OBJ of boxes"},
      {"corpus", "generate and check seeded instances"},
      {"oracle", "all 2-canonical orders by exhaustive search"},
  };
  for (auto [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* in = sub->add_option("--in", cfg.in, "input JSON")->check(CLI::ExistingFile);
    if (std::string(name) != "corpus") in->required();
    sub->add_option("--out", cfg.out, "output file (directory for corpus)");
    sub->add_option("--seed", cfg.seed, "seed");
    sub->add_option("--max-iters", cfg.max_iters, "iteration bound for sl-solve");
    sub->add_option("--base-edge", cfg.base_edge, "ordered base edge u,v")->delimiter(',')->expected(2);
    sub->add_flag("--overlay-staircase", cfg.overlay_staircase, "draw the outer staircase");
    if (std::string(name) == "corpus") {
      sub->add_option("--count", cfg.count, "number of instances");
      sub->add_option("--n-min", cfg.n_min, "smallest n");
      sub->add_option("--n-max", cfg.n_max, "largest n");
    }
    if (std::string(name) == "oracle") sub->add_option("--limit", cfg.limit, "orders per base edge");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail(e.what());
    return 2;
  }
  try {
    auto res = run(cfg);
    if (cfg.out.empty() || cfg.command == "corpus")
      std::cout << res.text;
    else
      write_text_file(cfg.out, res.text);
    return res.status;
  } catch (const std::exception& e) {
    fail(e.what());
    return 2;
  }
}
