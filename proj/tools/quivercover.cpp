#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quivercover/ar_knit.hpp"
#include "quivercover/build_cover.hpp"
#include "quivercover/covering.hpp"
#include "quivercover/export.hpp"
#include "quivercover/fixture_io.hpp"
#include "quivercover/hochschild.hpp"
#include "quivercover/weakly_shod.hpp"

using namespace qc;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t steps = 64;
  int jobs = 0;
  std::string dot;
};

// Verdict failures exit with 2; everything thrown exits with 1.
struct Outcome {
  ojson results = ojson::object();
  std::vector<std::string> warnings;
  bool verdict_ok = true;
};

KnitOptions knit_options(const Globals& g, bool recursion) {
  KnitOptions o = recursion ? recursion_knit_options() : KnitOptions{};
  o.steps = g.steps;
  o.seed = g.seed;
  return o;
}

AlgebraPtr load_algebra(const std::string& path) { return Algebra::create(load_presentation(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ojson peel_json(const std::vector<PeelStep>& peels) { return ojson::parse(peel_trace_json(peels)); }

Outcome cmd_info(const std::string& file) {
  AlgebraPtr a = load_algebra(file);
  Outcome o;
  o.results["presentation"] = presentation_json(a->presentation());
  o.results["dim"] = a->dim();
  std::vector<std::size_t> proj;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) proj.push_back(projective_at(a, v).total_dim());
  o.results["projective_dims"] = proj;
  o.results["nilpotency_index"] = a->nilpotency_index();
  o.results["hereditary"] = a->is_hereditary();
  return o;
}

Outcome cmd_ar(const std::string& file, const Globals& g) {
  AlgebraPtr a = load_algebra(file);
  std::vector<Representation> seeds;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) seeds.push_back(projective_at(a, v));
  ARFragment f = knit_component(a, seeds, knit_options(g, false));
  Outcome o;
  o.results = ojson::parse(fragment_json(f));
  o.results["complete"] = f.complete;
  std::size_t bad = 0;
  for (const auto& m : f.meshes)
    if (!m.check.ok()) ++bad;
  o.results["failed_meshes"] = bad;
  if (f.budget_exhausted) o.warnings.push_back("knitting budget exhausted");
  if (f.dimension_capped) o.warnings.push_back("module dimension cap reached");
  if (!g.dot.empty()) write_file(g.dot, to_dot(f));
  o.verdict_ok = bad == 0;
  return o;
}

Outcome cmd_orbit_graph(const std::string& file, const std::string& method, const std::string& trace, const Globals& g) {
  AlgebraPtr a = load_algebra(file);
  KnitOptions opts = knit_options(g, true);
  OrbitGraphReport r = method == "knit"        ? orbit_graph_knitted(a, opts)
                       : method == "recursive" ? orbit_graph_recursive(a, opts)
                                               : orbit_graph_both(a, opts);
  Outcome o;
  o.results["method"] = method;
  o.results["graph"] = graph_json(r.graph);
  o.results["vertices"] = r.graph.vertices.size();
  o.results["edges"] = r.graph.edges.size();
  o.results["pi1_rank"] = r.pi1_rank;
  o.results["is_tree"] = r.is_tree;
  o.results["provenance"] = r.provenance;
  o.warnings = r.warnings;
  if (!trace.empty()) write_file(trace, peel_trace_json(r.peels) + "\n");
  if (!g.dot.empty()) write_file(g.dot, to_dot(r.graph, "O"));
  o.verdict_ok = r.provenance != "disagree";
  return o;
}

Outcome cmd_hh(const std::string& file) {
  AlgebraPtr a = load_algebra(file);
  Outcome o;
  o.results["hh0"] = hh0_dim(*a);
  o.results["hh1"] = hh1_dim(*a);
  return o;
}

Outcome cmd_simply_connected(const std::string& file, const Globals& g) {
  AlgebraPtr a = load_algebra(file);
  SimplyConnectedReport r = simply_connected_verdict(a, knit_options(g, true));
  Outcome o;
  o.results["simply_connected"] = r.simply_connected ? "yes" : "no";
  o.results["orbit_graph_is_tree"] = r.tree;
  o.results["pi1_rank"] = r.pi1_rank;
  o.results["hh1"] = r.hh1;
  o.results["consistent"] = r.consistent;
  o.verdict_ok = r.consistent;
  return o;
}

Outcome cmd_peel(const std::string& file, const std::string& trace, const Globals& g) {
  AlgebraPtr a = load_algebra(file);
  OrbitGraphReport r = orbit_graph_recursive(a, knit_options(g, true));
  Outcome o;
  o.results["peels"] = peel_json(r.peels);
  o.results["orbit_graph"] = graph_json(r.graph);
  o.warnings = r.warnings;
  if (!trace.empty()) write_file(trace, peel_trace_json(r.peels) + "\n");
  return o;
}

Outcome cmd_cover_check(const std::string& file) {
  CoveringFixture c = load_covering(file);
  Diagnostics d = check_galois(c.functor, c.action);
  Outcome o;
  o.results["group_order"] = c.action.order();
  o.results["diagnostics"] = diagnostics_json(d);
  o.verdict_ok = d.ok();
  return o;
}

Outcome cmd_pushdown(const std::string& file, const std::string& module) {
  Document doc = parse_document(read_file(file));
  CoveringFixture c = covering_from_document(doc);
  const NamedModule& m = doc.module(module);
  if (m.over != doc.names.at(0)) throw std::invalid_argument("module '" + module + "' is not over the total category");
  Representation x = push_down(c.functor, m.module);
  Outcome o;
  o.results["module"] = module;
  o.results["dims"] = m.module.dims();
  o.results["push_down"] = module_json(x);
  o.results["indecomposable"] = is_indecomposable(x);
  return o;
}

Outcome cmd_universal_cover(const std::string& file, std::size_t radius, const std::string& base, const Globals& g) {
  Multigraph graph;
  std::string text = read_file(file);
  if (file.size() > 3 && file.substr(file.size() - 3) == ".tq") graph = orbit_graph(parse_translation_quiver(text)).graph;
  else graph = parse_graph(text);
  std::size_t b = 0;
  if (!base.empty()) {
    auto it = std::find(graph.vertices.begin(), graph.vertices.end(), base);
    if (it == graph.vertices.end()) throw std::invalid_argument("unknown base vertex '" + base + "'");
    b = static_cast<std::size_t>(it - graph.vertices.begin());
  }
  if (graph.vertices.empty()) throw std::invalid_argument("empty graph");
  GraphCovering cov = universal_cover_graph(graph, b, radius);
  Outcome o;
  o.results["radius"] = radius;
  o.results["vertices"] = cov.total.vertices.size();
  o.results["edges"] = cov.total.edges.size();
  o.results["acyclic"] = !has_cycle(cov.total);
  o.results["base_pi1_rank"] = pi1(graph).rank;
  Diagnostics d = check_graph_covering(cov);
  o.results["diagnostics"] = diagnostics_json(d);
  if (!g.dot.empty()) write_file(g.dot, to_dot(cov.total, "Cover"));
  o.verdict_ok = d.ok() && !has_cycle(cov.total);
  return o;
}

Outcome cmd_build_cover(const std::string& file, const std::string& quotient, const std::string& cover_out,
                        const Globals& g) {
  AlgebraPtr a = load_algebra(file);
  CoverBuild c = build_A_tilde(a, parse_quotient(quotient), knit_options(g, true));
  Diagnostics d = check_galois(c.functor, c.action);
  Outcome o;
  o.results["quotient"] = quotient;
  o.results["generators"] = c.generators;
  o.results["weights"] = c.weights;
  o.results["connected"] = c.connected;
  o.results["dim"] = c.total->dim();
  o.results["presentation"] = print_presentation(c.total->presentation());
  o.results["diagnostics"] = diagnostics_json(d);
  if (!cover_out.empty()) write_file(cover_out, print_presentation(c.total->presentation()));
  o.verdict_ok = d.ok();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit graphs, Galois coverings and Hochschild cohomology of bound quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--steps", g.steps, "Knitting budget in meshes");
  app.add_option("--jobs", g.jobs, "OpenMP threads (0 keeps the default)");
  app.add_option("--dot", g.dot, "Write a DOT file for graph-like results");

  std::string file, method = "both", trace, module, base, quotient = "1", cover_out;
  std::size_t radius = 3;

  auto* info = app.add_subcommand("info", "Parse a presentation and report dimensions");
  auto* ar = app.add_subcommand("ar", "Knit the components of the projectives");
  auto* og = app.add_subcommand("orbit-graph", "Orbit graph of the connecting component");
  auto* hh = app.add_subcommand("hh", "dim HH0 and dim HH1");
  auto* sc = app.add_subcommand("simply-connected", "Simple connectedness verdict");
  auto* pl = app.add_subcommand("peel", "Chain of one-point extension peels");
  auto* cc = app.add_subcommand("cover-check", "Galois covering diagnostics for a covering fixture");
  auto* pd = app.add_subcommand("pushdown", "Push down a module of a covering fixture");
  auto* uc = app.add_subcommand("universal-cover", "Ball in the universal cover of a graph");
  auto* bc = app.add_subcommand("build-cover", "Finite quotient of the covering attached to the orbit graph");
  for (auto* s : {info, ar, og, hh, sc, pl, cc, pd, uc, bc}) s->add_option("file", file, "Input file")->required();
  og->add_option("--method", method)->check(CLI::IsMember({"knit", "recursive", "both"}));
  og->add_option("--peel-trace", trace, "Write the peel chain as JSON");
  pl->add_option("--peel-trace", trace, "Write the peel chain as JSON");
  pd->add_option("module", module, "Module name in the fixture")->required();
  uc->add_option("--radius", radius);
  uc->add_option("--base", base, "Base vertex (default: the first)");
  bc->add_option("--quotient", quotient, "\"Z/n: i j ...\" or \"1\"");
  bc->add_option("--cover-out", cover_out, "Write the covering presentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (g.jobs > 0) omp_set_num_threads(g.jobs);

  CLI::App* cmd = app.get_subcommands().front();
  Outcome out;
  std::string input;
  try {
    input = read_file(file);
    const std::string name = cmd->get_name();
    if (name == "info") out = cmd_info(file);
    else if (name == "ar") out = cmd_ar(file, g);
    else if (name == "orbit-graph") out = cmd_orbit_graph(file, method, trace, g);
    else if (name == "hh") out = cmd_hh(file);
    else if (name == "simply-connected") out = cmd_simply_connected(file, g);
    else if (name == "peel") out = cmd_peel(file, trace, g);
    else if (name == "cover-check") out = cmd_cover_check(file);
    else if (name == "pushdown") out = cmd_pushdown(file, module);
    else if (name == "universal-cover") out = cmd_universal_cover(file, radius, base, g);
    else out = cmd_build_cover(file, quotient, cover_out, g);
  } catch (const ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  ojson report;
  report["command"] = cmd->get_name();
  report["input_digest"] = hex_digest(input);
  report["seed"] = g.seed;
  report["results"] = out.results;
  report["warnings"] = out.warnings;
  if (const char* env = std::getenv("QUIVERCOVER_MAX_PATHLEN")) report["max_path_length"] = env;
  std::cout << report.dump(2) << "\n";
  return out.verdict_ok ? 0 : 2;
}
