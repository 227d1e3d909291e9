#include "quivercover/weakly_shod.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"
#include "quivercover/hochschild.hpp"

namespace qc {

namespace {

std::size_t top_vertex(const Representation& m) {
  auto t = top_dims(m);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t[v]) return v;
  throw std::invalid_argument("module has zero top");
}

std::vector<bool> reachable_from(const ARFragment& f, std::size_t start, bool forward) {
  std::vector<std::vector<std::size_t>> adj(f.vertices.size());
  for (const auto& a : f.arrows) {
    if (forward) adj[a.source].push_back(a.target);
    else adj[a.target].push_back(a.source);
  }
  std::vector<bool> seen(f.vertices.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return seen;
}

}  // namespace

PfReport compute_pf(const ARFragment& f) {
  PfReport r;
  r.fragment_incomplete = !f.complete;
  const std::size_t n = f.vertices.size();
  std::vector<bool> after_injective(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.vertices[i].injective) continue;
    auto seen = reachable_from(f, i, true);
    for (std::size_t j = 0; j < n; ++j)
      if (seen[j]) after_injective[j] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pf;  // (algebra vertex, fragment vertex)
  for (std::size_t i = 0; i < n; ++i)
    if (f.vertices[i].projective && after_injective[i]) pf.emplace_back(top_vertex(f.vertices[i].module), i);
  std::sort(pf.begin(), pf.end());
  for (auto& p : pf) r.projectives.push_back(p.first);
  r.below.assign(pf.size(), std::vector<bool>(pf.size(), false));
  for (std::size_t i = 0; i < pf.size(); ++i) {
    auto seen = reachable_from(f, pf[i].second, true);
    bool maximal = true;
    for (std::size_t j = 0; j < pf.size(); ++j)
      if (j != i && seen[pf[j].second]) {
        r.below[i][j] = true;
        maximal = false;
      }
    if (maximal) r.maximal.push_back(pf[i].first);
  }
  return r;
}

PfReport compute_pf(const ConnectingReport& r) {
  if (r.concealed) {
    PfReport p;
    p.concealed = true;
    for (const auto& c : r.components) p.fragment_incomplete |= !c.complete;
    return p;
  }
  return compute_pf(r.components.at(0));
}

PfReport compute_pf(const AlgebraPtr& alg, const KnitOptions& opts) { return compute_pf(connecting_component(alg, opts)); }

std::optional<std::size_t> choose_peel_vertex(const AlgebraPtr& alg, const PfReport& pf) {
  std::optional<std::size_t> best;
  for (auto v : pf.maximal)
    if (!best || alg->quiver().vertex_name(v) < alg->quiver().vertex_name(*best)) best = v;
  return best;
}

PeelStep peel(const AlgebraPtr& a, std::size_t vertex) {
  const Quiver& q = a->quiver();
  if (vertex >= q.num_vertices()) throw std::invalid_argument("peel vertex out of range");
  if (!q.arrows_out(vertex).empty())
    throw std::invalid_argument("peel vertex " + q.vertex_name(vertex) + " is not a sink");
  PeelStep s;
  s.vertex = vertex;
  s.vertex_name = q.vertex_name(vertex);
  s.a = a;
  s.separating = true;
  if (q.num_vertices() == 1) return s;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (v != vertex) keep.push_back(v);
  s.b = Algebra::create(restrict_to_vertices(a->presentation(), keep));
  s.components = connected_components(s.b->quiver());
  Representation rad = radical(projective_at(a, vertex)).module;
  if (rad.dim(vertex)) throw std::invalid_argument("rad P has support at the peel vertex");
  std::vector<std::size_t> comp_of(s.b->num_vertices(), 0);
  for (std::size_t c = 0; c < s.components.size(); ++c)
    for (auto v : s.components[c]) comp_of[v] = c;
  std::vector<std::size_t> per_component(s.components.size(), 0);
  for (auto& part : indecompose(restrict_module(rad, s.b))) {
    PeelSummand ps{part.module, part.multiplicity, 0};
    for (std::size_t v = 0; v < ps.module.dims().size(); ++v)
      if (ps.module.dim(v)) {
        ps.component = comp_of[v];
        break;
      }
    ++per_component[ps.component];
    if (ps.multiplicity != 1) s.separating = false;
    s.summands.push_back(std::move(ps));
  }
  for (auto k : per_component)
    if (k != 1) s.separating = false;
  return s;
}

PeelStep peel(const AlgebraPtr& a, std::size_t vertex, const PfReport& pf) {
  if (std::find(pf.maximal.begin(), pf.maximal.end(), vertex) == pf.maximal.end())
    throw std::invalid_argument("P_" + a->quiver().vertex_name(vertex) + " is not maximal in P^f");
  return peel(a, vertex);
}

AlgebraPtr component_algebra(const PeelStep& s, std::size_t component) {
  return Algebra::create(restrict_to_vertices(s.b->presentation(), s.components.at(component)));
}

KnitOptions recursion_knit_options() {
  KnitOptions o;
  o.stop_when_stabilized = true;
  o.verify_meshes = false;
  return o;
}

namespace {

std::size_t locate_orbit(const Representation& x, const RecursionNode& node) {
  const std::size_t steps = 4 * node.algebra->num_vertices() + 8;
  Representation y = x;
  for (std::size_t k = 0; k <= steps && !y.is_zero(); ++k) {
    for (std::size_t u = 0; u < node.representatives.size(); ++u)
      for (const auto& r : node.representatives[u])
        if (r.dims() == y.dims() && is_isomorphic(r, y)) return u;
    if (y.total_dim() > 400) break;
    y = tau(y);
  }
  throw UnsupportedBaseCase("summand " + x.dim_vector_string() + " is not tau-equivalent to a recorded orbit");
}

void collect_peels(const RecursionNode& n, std::vector<PeelStep>& out) {
  if (n.step) out.push_back(*n.step);
  for (const auto& c : n.children) collect_peels(c, out);
}

}  // namespace

RecursionNode recursion_tree(const AlgebraPtr& alg, const KnitOptions& opts) {
  RecursionNode node;
  node.algebra = alg;
  const Quiver& q = alg->quiver();
  auto hereditary_base = [&] {
    node.kind = RecursionNode::Kind::hereditary_base;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      node.graph.add_vertex("(P" + q.vertex_name(v) + ")");
      node.representatives.push_back({projective_at(alg, v)});
    }
    for (const auto& a : q.arrows()) node.graph.add_edge(a.source, a.target);
    return node;
  };
  if (alg->is_hereditary() && q.num_vertices() == 1) return hereditary_base();
  PfReport pf = compute_pf(alg, opts);
  if (pf.projectives.empty()) {
    if (alg->is_hereditary()) return hereditary_base();
    throw UnsupportedBaseCase("base case unsupported: P^f is empty and the algebra is not hereditary");
  }
  node.kind = RecursionNode::Kind::peel;
  std::size_t v = *choose_peel_vertex(alg, pf);
  node.step = peel(alg, v, pf);
  const PeelStep& s = *node.step;
  std::vector<std::size_t> offset;
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    RecursionNode child = recursion_tree(component_algebra(s, c), opts);
    offset.push_back(node.graph.vertices.size());
    for (const auto& name : child.graph.vertices) node.graph.add_vertex(name);
    for (const auto& e : child.graph.edges) node.graph.add_edge(e.u + offset.back(), e.v + offset.back());
    for (const auto& reps : child.representatives) {
      std::vector<Representation> ext;
      for (const auto& r : reps) ext.push_back(extend_module(r, alg));
      node.representatives.push_back(std::move(ext));
    }
    node.children.push_back(std::move(child));
  }
  node.peel_orbit = node.graph.add_vertex("(P" + q.vertex_name(v) + ")");
  node.representatives.push_back({projective_at(alg, v)});
  for (const auto& sm : s.summands) {
    const RecursionNode& child = node.children[sm.component];
    std::size_t orbit = offset[sm.component] + locate_orbit(restrict_module(sm.module, child.algebra), child);
    for (std::size_t k = 0; k < sm.multiplicity; ++k) node.graph.add_edge(orbit, node.peel_orbit);
    node.summand_orbit.push_back(orbit);
  }
  return node;
}

OrbitGraphReport orbit_graph_recursive(const AlgebraPtr& alg, const KnitOptions& opts) {
  RecursionNode node = recursion_tree(alg, opts);
  OrbitGraphReport r;
  r.graph = std::move(node.graph);
  r.pi1_rank = pi1(r.graph).rank;
  r.is_tree = is_tree(r.graph);
  r.provenance = "recursive";
  collect_peels(node, r.peels);
  return r;
}

OrbitGraphReport orbit_graph_knitted(const AlgebraPtr& alg, const KnitOptions& opts) {
  ConnectingReport c = connecting_component(alg, opts);
  const ARFragment& f = c.components.at(0);
  OrbitGraphReport r;
  r.graph = orbit_graph(f.translation_quiver()).graph;
  r.pi1_rank = pi1(r.graph).rank;
  r.is_tree = is_tree(r.graph);
  r.provenance = "knitted";
  if (c.concealed) r.warnings.push_back("no component with projectives and injectives; postprojective component used");
  if (f.stabilized) r.warnings.push_back("orbit stabilization heuristic stopped the knitting");
  if (f.budget_exhausted) r.warnings.push_back("knitting budget exhausted");
  if (f.dimension_capped) r.warnings.push_back("module dimension cap reached");
  return r;
}

OrbitGraphReport orbit_graph_both(const AlgebraPtr& alg, const KnitOptions& opts) {
  OrbitGraphReport rec = orbit_graph_recursive(alg, opts);
  OrbitGraphReport knit = orbit_graph_knitted(alg, opts);
  rec.provenance = isomorphic(rec.graph, knit.graph) ? "both-agree" : "disagree";
  rec.warnings = knit.warnings;
  return rec;
}

SimplyConnectedReport simply_connected_verdict(const AlgebraPtr& alg, const KnitOptions& opts) {
  const Presentation& p = alg->presentation();
  if (!p.flag_is_true("weakly_shod") || p.flag("canonical_type") != std::optional<std::string>("false"))
    throw MissingPrerequisite("requires flags weakly_shod=true and canonical_type=false");
  SimplyConnectedReport r;
  OrbitGraphReport og = orbit_graph_recursive(alg, opts);
  r.tree = og.is_tree;
  r.pi1_rank = og.pi1_rank;
  r.hh1 = hh1_dim(*alg);
  r.simply_connected = r.tree;
  r.consistent = r.tree == (r.hh1 == 0);
  return r;
}

LemmaReport check_lemmas(const AlgebraPtr& alg, std::optional<std::size_t> vertex, const KnitOptions& opts) {
  LemmaReport r;
  if (vertex) {
    r.step = peel(alg, *vertex);
  } else {
    PfReport pf = compute_pf(alg, opts);
    auto v = choose_peel_vertex(alg, pf);
    if (!v) throw std::invalid_argument("P^f is empty; give the peel vertex explicitly");
    r.step = peel(alg, *v, pf);
  }
  r.hh1_a = hh1_dim(*alg);
  r.tree_a = orbit_graph_recursive(alg, opts).is_tree;
  for (std::size_t c = 0; c < r.step.components.size(); ++c) {
    AlgebraPtr cb = component_algebra(r.step, c);
    r.hh1_b.push_back(hh1_dim(*cb));
    r.tree_b.push_back(orbit_graph_recursive(cb, opts).is_tree);
  }
  r.separating = r.step.separating;
  bool all_tree = std::all_of(r.tree_b.begin(), r.tree_b.end(), [](bool t) { return t; });
  r.simply_connected_equivalence = r.tree_a == (all_tree && r.separating);
  r.hh1_equivalence = hh1_separating_consistency(r.hh1_a, r.hh1_b, r.separating).holds();
  return r;
}

bool predecessors_are_b_modules(const ARFragment& f, std::size_t pm_fragment_vertex, std::size_t x0) {
  auto seen = reachable_from(f, pm_fragment_vertex, false);
  for (std::size_t i = 0; i < f.vertices.size(); ++i)
    if (seen[i] && i != pm_fragment_vertex && f.vertices[i].module.dim(x0)) return false;
  return true;
}

std::string peel_trace_json(const std::vector<PeelStep>& peels) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : peels) {
    nlohmann::ordered_json j;
    j["vertex"] = s.vertex_name;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& c : s.components) {
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      for (auto v : c) names.push_back(s.b->quiver().vertex_name(v));
      comps.push_back(names);
    }
    j["components"] = comps;
    nlohmann::ordered_json sums = nlohmann::ordered_json::array();
    for (const auto& sm : s.summands)
      sums.push_back({{"dims", sm.module.dim_vector_string()},
                      {"multiplicity", sm.multiplicity},
                      {"component", sm.component}});
    j["summands"] = sums;
    j["separating"] = s.separating;
    out.push_back(j);
  }
  return out.dump(2);
}

}  // namespace qc
