#include "quivercover/trans_quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qc {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::size_t TranslationQuiver::add_vertex(std::string name, bool projective, bool injective, bool frontier) {
  if (find_vertex(name)) throw std::invalid_argument("duplicate vertex " + name);
  vertices_.push_back({std::move(name), projective, injective, frontier});
  tau_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t TranslationQuiver::add_arrow(std::size_t source, std::size_t target, std::size_t multiplicity) {
  if (source >= vertices_.size() || target >= vertices_.size()) throw std::out_of_range("arrow endpoint");
  if (auto a = find_arrow(source, target)) {
    arrows_[*a].multiplicity += multiplicity;
    return *a;
  }
  arrows_.push_back({source, target, multiplicity});
  sigma_.emplace_back();
  return arrows_.size() - 1;
}

void TranslationQuiver::set_tau(std::size_t y, std::size_t x) { tau_.at(y) = x; }

void TranslationQuiver::set_sigma(std::size_t arrow, std::size_t image) { sigma_.at(arrow) = image; }

std::optional<std::size_t> TranslationQuiver::tau_inv(std::size_t v) const {
  for (std::size_t y = 0; y < tau_.size(); ++y)
    if (tau_[y] == v) return y;
  return std::nullopt;
}

std::optional<std::size_t> TranslationQuiver::find_vertex(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

std::optional<std::size_t> TranslationQuiver::find_arrow(std::size_t source, std::size_t target) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == source && arrows_[a].target == target) return a;
  return std::nullopt;
}

std::optional<std::size_t> TranslationQuiver::sigma(std::size_t a) const {
  if (sigma_.at(a)) return sigma_[a];
  const TQArrow& ar = arrows_[a];
  auto t = tau_[ar.target];
  if (!t) return std::nullopt;
  return find_arrow(*t, ar.source);
}

void TranslationQuiver::validate() const {
  for (std::size_t y = 0; y < vertices_.size(); ++y) {
    if (!tau_[y]) continue;
    if (vertices_[y].projective) throw std::invalid_argument("tau defined on projective vertex " + vertices_[y].name);
    if (vertices_[*tau_[y]].injective)
      throw std::invalid_argument("tau of " + vertices_[y].name + " is the injective vertex " + vertices_[*tau_[y]].name);
  }
}

std::vector<std::vector<std::size_t>> graph_components(const Multigraph& g) {
  UnionFind uf(g.vertices.size());
  for (const auto& e : g.edges) uf.unite(e.u, e.v);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

Pi1Report pi1(const Multigraph& g) {
  Pi1Report r;
  auto comps = graph_components(g);
  r.connected = comps.size() <= 1;
  std::vector<std::size_t> comp_of(g.vertices.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<std::size_t> edges(comps.size(), 0);
  for (const auto& e : g.edges) ++edges[comp_of[e.u]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t rank = edges[c] + 1 - comps[c].size();
    r.component_ranks.push_back(rank);
    r.rank += rank;
  }
  return r;
}

std::size_t pi1_rank(const Multigraph& g) {
  Pi1Report r = pi1(g);
  if (!r.connected) throw std::invalid_argument("pi1_rank: graph is disconnected");
  return r.rank;
}

bool is_tree(const Multigraph& g) {
  Pi1Report r = pi1(g);
  return r.connected && r.rank == 0;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  const std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  auto adjacency = [n](const Multigraph& g) {
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
    for (const auto& e : g.edges) {
      ++m[e.u][e.v];
      if (e.u != e.v) ++m[e.v][e.u];
    }
    return m;
  };
  auto ma = adjacency(a), mb = adjacency(b);
  auto signature = [n](const std::vector<std::vector<std::size_t>>& m, std::size_t v) {
    std::vector<std::size_t> row = m[v];
    std::sort(row.begin(), row.end());
    row.push_back(m[v][v]);
    return row;
  };
  std::vector<std::vector<std::size_t>> sa(n), sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(ma, v);
    sb[v] = signature(mb, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = ma[v][v] == mb[w][w];
      for (std::size_t u = 0; u < v && ok; ++u) ok = ma[v][u] == mb[w][map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

OrbitGraph orbit_graph(const TranslationQuiver& tq, const OrbitGraphOptions& opts) {
  const std::size_t n = tq.num_vertices();
  UnionFind vuf(n);
  for (std::size_t v = 0; v < n; ++v)
    if (auto t = tq.tau(v)) vuf.unite(v, *t);
  OrbitGraph og;
  og.orbit_of.assign(n, 0);
  std::map<std::size_t, std::size_t> root_to_orbit;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = vuf.find(v);
    auto it = root_to_orbit.find(r);
    if (it == root_to_orbit.end()) {
      it = root_to_orbit.emplace(r, og.graph.add_vertex("(" + tq.vertex(v).name + ")")).first;
      og.orbit_members.emplace_back();
    }
    og.orbit_of[v] = it->second;
    og.orbit_members[it->second].push_back(v);
  }
  // Periodic orbits: tau returns to its start.
  std::vector<bool> periodic(og.orbit_members.size(), false);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t cur = v;
    for (std::size_t k = 0; k < n; ++k) {
      auto t = tq.tau(cur);
      if (!t) break;
      cur = *t;
      if (cur == v) {
        periodic[og.orbit_of[v]] = true;
        break;
      }
    }
  }
  for (std::size_t o = 0; o < periodic.size(); ++o)
    if (periodic[o]) {
      if (opts.strict) throw PeriodicOrbitError("periodic tau-orbit " + og.graph.vertices[o]);
      og.periodic_orbits.push_back(o);
    }

  const std::size_t m = tq.num_arrows();
  UnionFind auf(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto s = tq.sigma(a);
    if (!s) continue;
    auf.unite(a, *s);
  }
  // A sigma-chain that closes up is a tube; those are outside the supported case.
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t cur = a;
    for (std::size_t k = 0; k < m; ++k) {
      auto s = tq.sigma(cur);
      if (!s) break;
      cur = *s;
      if (cur == a)
        throw PeriodicOrbitError("cyclic sigma-orbit through arrow " + tq.vertex(tq.arrow(a).source).name + " -> " +
                                 tq.vertex(tq.arrow(a).target).name);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> chains;
  for (std::size_t a = 0; a < m; ++a) chains[auf.find(a)].push_back(a);
  for (auto& [root, arrows] : chains) {
    std::size_t mult = 0;
    for (auto a : arrows) mult = std::max(mult, tq.arrow(a).multiplicity);
    const TQArrow& first = tq.arrow(arrows.front());
    for (std::size_t k = 0; k < mult; ++k) {
      og.graph.add_edge(og.orbit_of[first.source], og.orbit_of[first.target]);
      og.edge_arrows.push_back(arrows);
    }
  }
  for (auto o : og.periodic_orbits) {
    og.graph.add_edge(o, o);
    og.edge_arrows.emplace_back();
  }
  return og;
}

bool Diagnostics::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void Diagnostics::add(std::string condition, bool passed, std::string witness) {
  checks.push_back({std::move(condition), passed, std::move(witness)});
}

std::string Diagnostics::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.condition << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.witness.empty()) os << " (" << c.witness << ")";
    os << '\n';
  }
  return os.str();
}

Diagnostics check_tq_covering(const TranslationQuiver& total, const TranslationQuiver& base,
                              const std::vector<std::size_t>& p) {
  Diagnostics d;
  const std::size_t n = total.num_vertices();
  if (p.size() != n) {
    d.add("(a) covering of unoriented graphs", false, "vertex map has wrong size");
    return d;
  }
  auto vname = [&](std::size_t v) { return total.vertex(v).name; };
  // (a): for each non-frontier vertex, arrows out of / into it map bijectively onto those of p(x).
  std::string wa;
  for (std::size_t x = 0; x < n && wa.empty(); ++x) {
    if (total.vertex(x).frontier || base.vertex(p[x]).frontier) continue;
    std::map<std::pair<int, std::size_t>, long long> count;  // (direction, base neighbour) -> multiplicity balance
    for (const auto& a : total.arrows()) {
      if (a.source == x) count[{1, p[a.target]}] += static_cast<long long>(a.multiplicity);
      if (a.target == x) count[{-1, p[a.source]}] += static_cast<long long>(a.multiplicity);
    }
    for (const auto& a : base.arrows()) {
      if (a.source == p[x]) count[{1, a.target}] -= static_cast<long long>(a.multiplicity);
      if (a.target == p[x]) count[{-1, a.source}] -= static_cast<long long>(a.multiplicity);
    }
    for (const auto& [key, bal] : count)
      if (bal != 0) {
        wa = "star of " + vname(x) + " differs at neighbour " + base.vertex(key.second).name;
        break;
      }
  }
  d.add("(a) covering of unoriented graphs", wa.empty(), wa);
  std::string wb;
  for (std::size_t x = 0; x < n && wb.empty(); ++x) {
    if (total.vertex(x).projective != base.vertex(p[x]).projective) wb = vname(x) + " projective mark";
    else if (total.vertex(x).injective != base.vertex(p[x]).injective) wb = vname(x) + " injective mark";
  }
  d.add("(b) projectives and injectives", wb.empty(), wb);
  std::string wc;
  for (std::size_t x = 0; x < n && wc.empty(); ++x) {
    auto t = total.tau(x);
    auto bt = base.tau(p[x]);
    if (t && bt && p[*t] != *bt) wc = "p(tau " + vname(x) + ") != tau p(" + vname(x) + ")";
    else if (t && !bt) wc = "tau " + vname(x) + " defined but not downstairs";
    else if (!t && bt && !total.vertex(x).frontier) wc = "tau " + vname(x) + " missing upstairs";
  }
  d.add("(c) commutes with tau", wc.empty(), wc);
  return d;
}

Diagnostics check_tq_galois(const TranslationQuiver& total, const TranslationQuiver& base,
                            const std::vector<std::size_t>& p, const std::vector<Permutation>& action) {
  Diagnostics d = check_tq_covering(total, base, p);
  const std::size_t n = total.num_vertices();
  auto vname = [&](std::size_t v) { return total.vertex(v).name; };
  std::string wd;
  for (std::size_t g = 1; g < action.size() && wd.empty(); ++g) {
    for (std::size_t x = 0; x < n; ++x)
      if (action[g][x] == x) {
        wd = "non-identity element " + std::to_string(g) + " fixes " + vname(x);
        break;
      }
  }
  std::string wauto;
  for (std::size_t g = 0; g < action.size() && wauto.empty(); ++g)
    for (const auto& a : total.arrows()) {
      auto b = total.find_arrow(action[g][a.source], action[g][a.target]);
      if (!b || total.arrow(*b).multiplicity != a.multiplicity) {
        wauto = "element " + std::to_string(g) + " does not preserve " + vname(a.source) + " -> " + vname(a.target);
        break;
      }
    }
  d.add("(d) G acts freely on vertices", wd.empty() && wauto.empty(), wd.empty() ? wauto : wd);
  std::string we;
  for (std::size_t g = 0; g < action.size() && we.empty(); ++g)
    for (std::size_t x = 0; x < n; ++x)
      if (p[action[g][x]] != p[x]) {
        we = "p(g " + vname(x) + ") != p(" + vname(x) + ")";
        break;
      }
  d.add("(e) p g = p", we.empty(), we);
  // (f): fibres are exactly the G-orbits and every base vertex is hit.
  std::string wf;
  std::vector<std::vector<std::size_t>> fibre(base.num_vertices());
  for (std::size_t x = 0; x < n; ++x) fibre[p[x]].push_back(x);
  for (std::size_t b = 0; b < base.num_vertices() && wf.empty(); ++b) {
    if (fibre[b].empty()) {
      wf = "empty fibre over " + base.vertex(b).name;
      break;
    }
    std::vector<std::size_t> orbit;
    for (const auto& g : action) orbit.push_back(g[fibre[b][0]]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit != fibre[b]) wf = "fibre over " + base.vertex(b).name + " is not a single orbit";
  }
  d.add("(f) quotient map is an isomorphism", wf.empty() && d.checks[0].passed && d.checks[2].passed, wf);
  Multigraph und;
  for (std::size_t x = 0; x < n; ++x) und.add_vertex(vname(x));
  for (const auto& a : total.arrows()) und.add_edge(a.source, a.target);
  d.add("(g) total quiver connected", graph_components(und).size() <= 1);
  return d;
}

TQQuotient quotient_tq(const TranslationQuiver& tq, const std::vector<Permutation>& action) {
  const std::size_t n = tq.num_vertices();
  for (std::size_t k = 1; k < action.size(); ++k) {
    const Permutation& g = action[k];
    for (std::size_t x = 0; x < n; ++x)
      if (g[x] == x) throw std::invalid_argument("quotient_tq: action is not free at " + tq.vertex(x).name);
    for (std::size_t x = 0; x < n; ++x) {
      auto t = tq.tau(x);
      auto gt = tq.tau(g[x]);
      if (t.has_value() != gt.has_value() || (t && g[*t] != *gt))
        throw std::invalid_argument("quotient_tq: action does not commute with tau at " + tq.vertex(x).name);
    }
    for (const auto& a : tq.arrows()) {
      auto b = tq.find_arrow(g[a.source], g[a.target]);
      if (!b || tq.arrow(*b).multiplicity != a.multiplicity)
        throw std::invalid_argument("quotient_tq: action does not preserve arrows");
    }
  }
  TQQuotient out;
  out.projection.assign(n, SIZE_MAX);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (out.projection[x] != SIZE_MAX) continue;
    const TQVertex& v = tq.vertex(x);
    std::size_t q = out.quiver.add_vertex(v.name, v.projective, v.injective, v.frontier);
    rep.push_back(x);
    for (const auto& g : action) out.projection[g[x]] = q;
  }
  for (std::size_t q = 0; q < rep.size(); ++q) {
    for (const auto& a : tq.arrows())
      if (a.source == rep[q]) out.quiver.add_arrow(q, out.projection[a.target], a.multiplicity);
    if (auto t = tq.tau(rep[q])) out.quiver.set_tau(q, out.projection[*t]);
  }
  return out;
}

Diagnostics check_graph_covering(const GraphCovering& cov) {
  Diagnostics d;
  const auto& T = cov.total;
  const auto& B = cov.base;
  // Half-edge stars: (edge, end) with end 0 = tail, 1 = head.
  auto star = [](const Multigraph& g, std::size_t v) {
    std::vector<std::pair<std::size_t, int>> s;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].u == v) s.emplace_back(e, 0);
      if (g.edges[e].v == v) s.emplace_back(e, 1);
    }
    return s;
  };
  std::string w;
  for (std::size_t e = 0; e < T.edges.size() && w.empty(); ++e) {
    const auto& te = T.edges[e];
    const auto& be = B.edges[cov.edge_map[e]];
    if (cov.vertex_map[te.u] != be.u || cov.vertex_map[te.v] != be.v) w = "edge " + std::to_string(e) + " endpoints";
  }
  for (std::size_t x = 0; x < T.vertices.size() && w.empty(); ++x) {
    auto up = star(T, x);
    std::vector<std::pair<std::size_t, int>> image;
    for (auto [e, end] : up) image.emplace_back(cov.edge_map[e], end);
    std::sort(image.begin(), image.end());
    auto down = star(B, cov.vertex_map[x]);
    std::sort(down.begin(), down.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      w = "star of " + T.vertices[x] + " is not mapped injectively";
      break;
    }
    bool boundary = !cov.boundary.empty() && cov.boundary[x];
    if (!boundary && image != down) w = "star of " + T.vertices[x] + " is not mapped onto the star of its image";
  }
  d.add("covering of graphs", w.empty(), w);
  return d;
}

GraphCovering universal_cover_graph(const Multigraph& g, std::size_t base, std::size_t radius) {
  if (base >= g.vertices.size()) throw std::out_of_range("universal_cover_graph: base vertex");
  GraphCovering cov;
  cov.base = g;
  struct Node {
    std::size_t at;
    std::size_t last_edge;
    int last_dir;
    std::size_t depth;
    std::string word;
  };
  std::vector<Node> nodes{{base, SIZE_MAX, 0, 0, ""}};
  cov.total.add_vertex(g.vertices[base]);
  cov.vertex_map.push_back(base);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Node cur = nodes[k];
    if (cur.depth == radius) continue;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      for (int dir : {1, -1}) {
        std::size_t from = dir == 1 ? ed.u : ed.v;
        std::size_t to = dir == 1 ? ed.v : ed.u;
        if (from != cur.at) continue;
        if (cur.last_edge == e && cur.last_dir == -dir) continue;
        std::string word = cur.word + (cur.word.empty() ? "" : ".") + "e" + std::to_string(e) + (dir == 1 ? "" : "'");
        std::size_t idx = cov.total.add_vertex(g.vertices[to] + "[" + word + "]");
        cov.vertex_map.push_back(to);
        nodes.push_back({to, e, dir, cur.depth + 1, word});
        if (dir == 1) cov.total.add_edge(k, idx);
        else cov.total.add_edge(idx, k);
        cov.edge_map.push_back(e);
      }
    }
  }
  cov.boundary.assign(nodes.size(), false);
  for (std::size_t k = 0; k < nodes.size(); ++k) cov.boundary[k] = nodes[k].depth == radius;
  return cov;
}

bool has_cycle(const Multigraph& g) {
  UnionFind uf(g.vertices.size());
  for (const auto& e : g.edges)
    if (!uf.unite(e.u, e.v)) return true;
  return false;
}

std::string to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) os << "  v" << v << " [label=" << quote(g.vertices[v]) << "];\n";
  for (const auto& e : g.edges) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const TranslationQuiver& tq, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < tq.num_vertices(); ++v) {
    const auto& x = tq.vertex(v);
    os << "  v" << v << " [label=" << quote(x.name);
    if (x.projective) os << ", shape=box";
    else if (x.injective) os << ", shape=diamond";
    if (x.frontier) os << ", style=dotted";
    os << "];\n";
  }
  for (const auto& a : tq.arrows()) {
    os << "  v" << a.source << " -> v" << a.target;
    if (a.multiplicity > 1) os << " [label=\"x" << a.multiplicity << "\"]";
    os << ";\n";
  }
  for (std::size_t v = 0; v < tq.num_vertices(); ++v)
    if (auto t = tq.tau(v)) os << "  v" << v << " -> v" << *t << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qc
