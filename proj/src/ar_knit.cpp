#include "quivercover/ar_knit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qc {

namespace {

// Map from a sum of indecomposable projectives sending the generator of the i-th summand to images[i].
ModuleMap map_from_generators(const std::vector<std::size_t>& vertices, const Representation& target,
                              const std::vector<Vector>& images) {
  const AlgebraPtr& alg = target.algebra();
  ModuleMap f;
  for (std::size_t x = 0; x < alg->num_vertices(); ++x) {
    std::size_t cols = 0;
    for (auto v : vertices) cols += alg->basis_between(x, v).size();
    Matrix m(target.dim(x), cols);
    std::size_t c = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t b : alg->basis_between(x, vertices[i])) {
        Vector img = target.basis_matrix(b).apply(images[i]);
        for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img[r];
        ++c;
      }
    f.components.push_back(std::move(m));
  }
  return f;
}

// Basis of rad End(M) as the radical of the trace form.
std::vector<ModuleMap> endomorphism_radical(const Representation& m) {
  HomSpace e = hom_space(m, m);
  const std::size_t d = e.dim();
  if (d <= 1) return {};
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      ModuleMap p = compose(e.basis[i], e.basis[j]);
      Rational t = 0;
      for (const auto& c : p.components)
        for (std::size_t k = 0; k < c.rows(); ++k) t += c(k, k);
      g(i, j) = t;
      g(j, i) = t;
    }
  std::vector<ModuleMap> out;
  for (const auto& v : nullspace_basis(g)) out.push_back(combine(e.basis, v));
  return out;
}

Matrix columns_of(const std::vector<Vector>& cols, std::size_t len) { return Matrix::from_columns(cols, len); }

std::size_t flat_len(const Representation& m, const Representation& n) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += m.dim(v) * n.dim(v);
  return s;
}

}  // namespace

AlmostSplitSequence almost_split_ending_at(const Representation& z, const DecomposeOptions& opts) {
  if (z.is_zero() || is_projective(z)) throw std::invalid_argument("almost_split_ending_at: module is projective");
  Representation t = tau(z);
  MinimalPresentation mp = minimal_presentation(z);
  const Representation& p0 = mp.top.cover;
  const Representation& om = mp.omega.module;
  const ModuleMap& iota = mp.omega.inclusion;
  HomSpace h = hom_space(om, t);
  HomSpace rp = hom_space(p0, t);
  const std::size_t len = flat_len(om, t);
  std::vector<Vector> rcols, hcols;
  for (const auto& f : rp.basis) rcols.push_back(flatten(compose(f, iota)));
  for (const auto& f : h.basis) hcols.push_back(flatten(f));
  // Ext^1 = Hom(Omega, tau X) / restrictions from P0; C indexes a complement of the restrictions.
  Matrix rmat = rcols.empty() ? Matrix(len, 0) : column_basis(columns_of(rcols, len));
  std::vector<std::size_t> chosen;
  {
    Matrix all = hstack(rmat, columns_of(hcols, len));
    for (auto p : rref(all).pivots)
      if (p >= rmat.cols()) chosen.push_back(p - rmat.cols());
  }
  if (chosen.empty()) throw std::runtime_error("almost_split_ending_at: Ext^1(X, tau X) vanishes");
  ModuleMap eta = h.basis[chosen[0]];
  auto rad = endomorphism_radical(z);
  if (!rad.empty() && chosen.size() > 1) {
    std::vector<Vector> bcols;
    for (std::size_t c = 0; c < rmat.cols(); ++c) bcols.push_back(rmat.column(c));
    for (auto c : chosen) bcols.push_back(hcols[c]);
    Matrix basis = columns_of(bcols, len);
    const std::size_t k = chosen.size();
    Matrix action(0, k);
    for (const auto& r : rad) {
      // Lift r to P0 and restrict to Omega.
      std::vector<Vector> images;
      for (std::size_t i = 0; i < mp.top.vertices.size(); ++i) {
        std::size_t v = mp.top.vertices[i];
        Vector target = r.components[v].apply(mp.top.generators[i]);
        auto y = solve(mp.top.pi.components[v], target);
        if (!y) throw std::logic_error("almost_split_ending_at: endomorphism does not lift");
        images.push_back(*y);
      }
      ModuleMap lift = map_from_generators(mp.top.vertices, p0, images);
      ModuleMap r_om;
      for (std::size_t x = 0; x < om.dims().size(); ++x) {
        if (om.dim(x) == 0) {
          r_om.components.emplace_back(0, 0);
          continue;
        }
        r_om.components.push_back(left_inverse(iota.components[x]) * lift.components[x] * iota.components[x]);
      }
      Matrix a(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto coords = solve(basis, flatten(compose(h.basis[chosen[j]], r_om)));
        if (!coords) throw std::logic_error("almost_split_ending_at: Ext action leaves the space");
        for (std::size_t i = 0; i < k; ++i) a(i, j) = (*coords)[rmat.cols() + i];
      }
      action = vstack(action, a);
    }
    auto soc = nullspace_basis(action);
    if (soc.empty()) throw std::logic_error("almost_split_ending_at: empty socle of Ext^1");
    std::vector<ModuleMap> picked;
    for (auto c : chosen) picked.push_back(h.basis[c]);
    eta = combine(picked, soc[0]);
  }
  DirectSum s = direct_sum_with_maps({t, p0});
  ModuleMap m;
  for (std::size_t x = 0; x < om.dims().size(); ++x) {
    Matrix neg = iota.components[x];
    neg *= Rational(-1);
    m.components.push_back(vstack(eta.components[x], neg));
  }
  QuotientModule cok = cokernel(m, s.module);
  AlmostSplitSequence seq;
  seq.start = t;
  seq.middle = cok.module;
  seq.end = z;
  seq.phi = compose(cok.projection, s.inclusions[0]);
  for (std::size_t x = 0; x < om.dims().size(); ++x)
    seq.theta.components.push_back(mp.top.pi.components[x] * s.projections[1].components[x] * cok.sections[x]);
  seq.middle_summands = indecompose(seq.middle, opts);
  return seq;
}

SequenceCheck verify_almost_split(const AlmostSplitSequence& s, const std::vector<Representation>& tests) {
  SequenceCheck c;
  const auto& dims = s.end.dims();
  bool exact = is_homomorphism(s.phi, s.start, s.middle) && is_homomorphism(s.theta, s.middle, s.end);
  for (std::size_t x = 0; x < dims.size() && exact; ++x) {
    exact = s.middle.dim(x) == s.start.dim(x) + s.end.dim(x) && rank(s.phi.components[x]) == s.start.dim(x) &&
            rank(s.theta.components[x]) == s.end.dim(x) && (s.theta.components[x] * s.phi.components[x]).is_zero();
  }
  c.exact = exact;
  if (!exact) c.failure = "sequence is not exact";

  HomSpace back = hom_space(s.end, s.middle);
  {
    std::vector<Vector> cols;
    for (const auto& f : back.basis) cols.push_back(flatten(compose(s.theta, f)));
    Vector id = flatten(identity_map(s.end));
    bool split = !cols.empty() && solve(Matrix::from_columns(cols, id.size()), id).has_value();
    c.non_split = !split;
    if (split && c.failure.empty()) c.failure = "sequence splits";
  }

  auto factors = [&](const Representation& w, const std::vector<ModuleMap>& required) {
    HomSpace hw = hom_space(w, s.middle);
    std::size_t len = flat_len(w, s.end);
    std::vector<Vector> cols;
    for (const auto& u : hw.basis) cols.push_back(flatten(compose(s.theta, u)));
    std::size_t r0 = cols.empty() ? 0 : rank(Matrix::from_columns(cols, len));
    for (const auto& f : required) cols.push_back(flatten(f));
    std::size_t r1 = cols.empty() ? 0 : rank(Matrix::from_columns(cols, len));
    return r0 == r1;
  };
  bool fact = factors(s.end, endomorphism_radical(s.end));
  std::size_t tested = 1;
  for (const auto& w : tests) {
    if (!fact) break;
    if (!same_algebra(w, s.end) || w.is_zero()) continue;
    if (w.dims() == s.end.dims() && is_isomorphic(w, s.end)) continue;
    HomSpace hz = hom_space(w, s.end);
    ++tested;
    if (hz.basis.empty()) continue;
    fact = factors(w, hz.basis);
  }
  c.factorization = fact;
  c.tested_modules = tested;
  if (!fact && c.failure.empty()) c.failure = "a non-retraction does not factor through the middle term";
  return c;
}

std::optional<std::size_t> ARFragment::find(const Representation& m, std::uint64_t seed) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].module.dims() == m.dims() && is_isomorphic(vertices[v].module, m, seed)) return v;
  return std::nullopt;
}

std::size_t ARFragment::multiplicity(std::size_t source, std::size_t target) const {
  for (const auto& a : arrows)
    if (a.source == source && a.target == target) return a.multiplicity;
  return 0;
}

bool ARFragment::contains_projective() const {
  return std::any_of(vertices.begin(), vertices.end(), [](const ARVertex& v) { return v.projective; });
}

bool ARFragment::contains_injective() const {
  return std::any_of(vertices.begin(), vertices.end(), [](const ARVertex& v) { return v.injective; });
}

std::vector<Representation> ARFragment::modules() const {
  std::vector<Representation> out;
  for (const auto& v : vertices) out.push_back(v.module);
  return out;
}

TranslationQuiver ARFragment::translation_quiver() const {
  TranslationQuiver tq;
  for (const auto& v : vertices) tq.add_vertex(v.name, v.projective, v.injective, !(v.preds_known && v.succs_known));
  for (const auto& a : arrows) tq.add_arrow(a.source, a.target, a.multiplicity);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].tau) tq.set_tau(v, *vertices[v].tau);
  return tq;
}

namespace {

class Knitter {
 public:
  Knitter(const AlgebraPtr& alg, const KnitOptions& opts) : opts_(opts) {
    f_.algebra = alg;
    dopts_.seed = opts.seed;
  }

  std::size_t add(const Representation& m) {
    auto key = m.dims();
    for (auto v : by_dims_[key])
      if (is_isomorphic(f_.vertices[v].module, m, opts_.seed)) return v;
    ARVertex x;
    x.module = m;
    x.projective = is_projective(m);
    x.injective = is_injective(m);
    x.name = name_for(m, x.projective, x.injective);
    f_.vertices.push_back(std::move(x));
    blocked_.push_back(false);
    by_dims_[key].push_back(f_.vertices.size() - 1);
    return f_.vertices.size() - 1;
  }

  void run(const std::vector<Representation>& seeds) {
    for (const auto& s : seeds) add(s);
    std::size_t steps = 0;
    for (;;) {
      std::optional<std::size_t> next;
      for (std::size_t v = 0; v < f_.vertices.size(); ++v)
        if (!blocked_[v] && !(f_.vertices[v].preds_known && f_.vertices[v].succs_known)) {
          next = v;
          break;
        }
      if (!next) break;
      if (opts_.stop_when_stabilized && stabilized()) {
        f_.stabilized = true;
        break;
      }
      if (steps >= opts_.steps) {
        f_.budget_exhausted = true;
        break;
      }
      ARVertex& v = f_.vertices[*next];
      if (!v.preds_known) steps += expand_preds(*next);
      else steps += expand_succs(*next);
    }
    f_.complete = std::all_of(f_.vertices.begin(), f_.vertices.end(),
                              [](const ARVertex& v) { return v.preds_known && v.succs_known; });
    assign_orbits();
    if (opts_.verify_meshes) {
      auto mods = f_.modules();
      for (auto& [mesh, seq] : pending_checks_) f_.meshes[mesh].check = verify_almost_split(seq, mods);
    }
  }

  ARFragment take() { return std::move(f_); }

 private:
  std::string name_for(const Representation& m, bool proj, bool inj) {
    const Quiver& q = m.algebra()->quiver();
    auto single = [&](const std::vector<std::size_t>& d) -> std::optional<std::size_t> {
      std::optional<std::size_t> at;
      std::size_t total = 0;
      for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v]) {
          total += d[v];
          at = v;
        }
      if (total == 1) return at;
      return std::nullopt;
    };
    if (auto v = single(m.dims())) return "S" + q.vertex_name(*v);
    if (proj)
      if (auto v = single(top_dims(m))) return "P" + q.vertex_name(*v);
    if (inj)
      if (auto v = single(socle(m).module.dims())) return "I" + q.vertex_name(*v);
    return "M" + std::to_string(++counter_);
  }

  void link(std::size_t s, std::size_t t, std::size_t mult) {
    for (auto& a : f_.arrows)
      if (a.source == s && a.target == t) {
        if (a.multiplicity != mult)
          throw std::logic_error("inconsistent arrow multiplicity " + f_.vertices[s].name + " -> " + f_.vertices[t].name);
        return;
      }
    f_.arrows.push_back({s, t, mult});
  }

  bool too_big(const Representation& m) const { return opts_.max_module_dim && m.total_dim() > opts_.max_module_dim; }

  std::size_t expand_preds(std::size_t v) {
    Representation m = f_.vertices[v].module;
    if (f_.vertices[v].projective) {
      for (const auto& s : indecompose(radical(m).module, dopts_)) link(add(s.module), v, s.multiplicity);
      f_.vertices[v].preds_known = true;
      return 0;
    }
    mesh_ending_at(v);
    return 1;
  }

  std::size_t expand_succs(std::size_t v) {
    Representation m = f_.vertices[v].module;
    if (f_.vertices[v].injective) {
      SubModule soc = socle(m);
      QuotientModule q = quotient(m, soc.inclusion.components);
      for (const auto& s : indecompose(q.module, dopts_)) link(v, add(s.module), s.multiplicity);
      f_.vertices[v].succs_known = true;
      return 0;
    }
    Representation z = tau_inv(m);
    if (too_big(z)) {
      blocked_[v] = true;
      f_.dimension_capped = true;
      return 0;
    }
    std::size_t zi = add(z);
    if (f_.vertices[zi].preds_known) {
      f_.vertices[v].succs_known = true;
      return 0;
    }
    mesh_ending_at(zi);
    return 1;
  }

  void mesh_ending_at(std::size_t zi) {
    Representation z = f_.vertices[zi].module;
    AlmostSplitSequence seq = almost_split_ending_at(z, dopts_);
    for (const auto& s : seq.middle_summands)
      if (too_big(s.module)) {
        blocked_[zi] = true;
        f_.dimension_capped = true;
        return;
      }
    std::size_t ti = add(seq.start);
    Mesh mesh;
    mesh.start = ti;
    mesh.end = zi;
    for (const auto& s : seq.middle_summands) {
      std::size_t y = add(s.module);
      link(ti, y, s.multiplicity);
      link(y, zi, s.multiplicity);
      mesh.middle.emplace_back(y, s.multiplicity);
    }
    f_.vertices[zi].tau = ti;
    f_.vertices[ti].tau_inv = zi;
    f_.vertices[zi].preds_known = true;
    f_.vertices[ti].succs_known = true;
    f_.meshes.push_back(std::move(mesh));
    pending_checks_.emplace_back(f_.meshes.size() - 1, std::move(seq));
  }

  std::vector<std::size_t> orbit_roots() {
    std::vector<std::size_t> parent(f_.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t v = 0; v < f_.vertices.size(); ++v)
      if (f_.vertices[v].tau) {
        std::size_t a = find(v), b = find(*f_.vertices[v].tau);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < f_.vertices.size(); ++v) roots.push_back(find(v));
    return roots;
  }

  bool stabilized() {
    auto roots = orbit_roots();
    std::map<std::size_t, bool> expanded;
    for (std::size_t v = 0; v < f_.vertices.size(); ++v)
      if (f_.vertices[v].preds_known && f_.vertices[v].succs_known) expanded[roots[v]] = true;
    for (std::size_t v = 0; v < f_.vertices.size(); ++v) {
      const auto& x = f_.vertices[v];
      if (!(x.preds_known && x.succs_known) && !expanded[roots[v]]) return false;
    }
    return true;
  }

  void assign_orbits() {
    auto roots = orbit_roots();
    std::map<std::size_t, std::size_t> label;
    for (std::size_t v = 0; v < f_.vertices.size(); ++v) {
      auto it = label.emplace(roots[v], label.size()).first;
      f_.vertices[v].orbit = it->second;
    }
  }

  ARFragment f_;
  KnitOptions opts_;
  DecomposeOptions dopts_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
  std::vector<bool> blocked_;
  std::vector<std::pair<std::size_t, AlmostSplitSequence>> pending_checks_;
  std::size_t counter_ = 0;
};

}  // namespace

ARFragment knit_component(const AlgebraPtr& alg, const std::vector<Representation>& seeds, const KnitOptions& opts) {
  Knitter k(alg, opts);
  k.run(seeds);
  return k.take();
}

ConnectingReport connecting_component(const AlgebraPtr& alg, const KnitOptions& opts) {
  const std::size_t n = alg->num_vertices();
  std::vector<std::pair<Representation, std::pair<bool, std::size_t>>> seeds;  // (module, (is injective, vertex))
  for (std::size_t v = 0; v < n; ++v) seeds.push_back({projective_at(alg, v), {false, v}});
  for (std::size_t v = 0; v < n; ++v) seeds.push_back({injective_at(alg, v), {true, v}});
  std::vector<ARFragment> comps;
  auto covered = [&](const Representation& m) {
    for (const auto& c : comps)
      if (c.find(m, opts.seed)) return true;
    return false;
  };
  auto locate = [&](const ARFragment& f, ConnectingReport& r) {
    for (const auto& [m, tag] : seeds)
      if (f.find(m, opts.seed)) (tag.first ? r.injectives : r.projectives).push_back(tag.second);
  };
  for (const auto& [m, tag] : seeds) {
    if (covered(m)) continue;
    ARFragment f = knit_component(alg, {m}, opts);
    if (f.contains_projective() && f.contains_injective()) {
      ConnectingReport r;
      locate(f, r);
      r.components.push_back(std::move(f));
      return r;
    }
    comps.push_back(std::move(f));
  }
  // Concealed case: one piece holds every projective, another every injective.
  ConnectingReport r;
  std::optional<std::size_t> pp, pi;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool allp = true, alli = true;
    for (const auto& [m, tag] : seeds) {
      bool in = comps[c].find(m, opts.seed).has_value();
      if (!tag.first) allp = allp && in;
      else alli = alli && in;
    }
    if (allp && !pp) pp = c;
    if (alli && !pi) pi = c;
  }
  if (!pp || !pi) throw std::runtime_error("no non semi-regular component found within the knitting budget");
  r.concealed = true;
  r.components.push_back(comps[*pp]);
  r.components.push_back(comps[*pi]);
  for (std::size_t c = 0; c < 2; ++c) locate(r.components[c], r);
  std::sort(r.projectives.begin(), r.projectives.end());
  std::sort(r.injectives.begin(), r.injectives.end());
  return r;
}

namespace {

std::optional<std::vector<std::size_t>> topological_order(const ARFragment& f) {
  const std::size_t n = f.vertices.size();
  std::vector<std::size_t> indeg(n, 0), order;
  for (const auto& a : f.arrows) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = n; v-- > 0;)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (const auto& a : f.arrows)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace

bool has_oriented_cycle(const ARFragment& f) { return !topological_order(f).has_value(); }

WeaklyShodCertificate certify_weakly_shod(const ARFragment& f) {
  auto order = topological_order(f);
  if (!order) throw std::runtime_error("oriented cycle in the connecting fragment");
  const std::size_t n = f.vertices.size();
  std::vector<long> best(n, -1);
  std::vector<std::size_t> parent(n, SIZE_MAX);
  for (auto v : *order) {
    if (f.vertices[v].injective && best[v] < 0) best[v] = 0;
    if (best[v] < 0) continue;
    for (const auto& a : f.arrows)
      if (a.source == v && best[a.target] < best[v] + 1) {
        best[a.target] = best[v] + 1;
        parent[a.target] = v;
      }
  }
  WeaklyShodCertificate c;
  std::optional<std::size_t> end;
  for (std::size_t v = 0; v < n; ++v)
    if (f.vertices[v].projective && best[v] >= 0 && (!end || best[v] > best[*end])) end = v;
  if (!end) return c;
  c.bound = static_cast<std::size_t>(best[*end]);
  for (std::size_t v = *end;; v = parent[v]) {
    c.witness.push_back(v);
    if (best[v] == 0 || parent[v] == SIZE_MAX) break;
  }
  std::reverse(c.witness.begin(), c.witness.end());
  return c;
}

namespace {

std::vector<std::size_t> closure_part(const ARFragment& f, bool left) {
  if (!f.complete) throw std::runtime_error("representation-finiteness not certified: fragment is incomplete");
  const std::size_t n = f.vertices.size();
  std::vector<bool> good(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& m = f.vertices[v].module;
    good[v] = (left ? projective_dimension(m, 1) : injective_dimension(m, 1)).has_value();
  }
  // A vertex is in the part iff no bad vertex reaches it (left) or is reached from it (right).
  std::vector<bool> tainted(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (!good[v]) {
      tainted[v] = true;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& a : f.arrows) {
      std::size_t from = left ? a.source : a.target;
      std::size_t to = left ? a.target : a.source;
      if (from == v && !tainted[to]) {
        tainted[to] = true;
        stack.push_back(to);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!tainted[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::size_t> left_part(const ARFragment& f) { return closure_part(f, true); }
std::vector<std::size_t> right_part(const ARFragment& f) { return closure_part(f, false); }

bool is_quasi_tilted_by_left_part(const ARFragment& f) {
  auto lp = left_part(f);
  std::size_t projectives = 0;
  for (auto v : lp) projectives += f.vertices[v].projective ? 1 : 0;
  return projectives == f.algebra->num_vertices();
}

std::string to_dot(const ARFragment& f, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < f.vertices.size(); ++v) {
    const auto& x = f.vertices[v];
    os << "  v" << v << " [label=\"" << x.name << " " << x.module.dim_vector_string() << "\"";
    if (x.projective && x.injective) os << ", shape=box, peripheries=2";
    else if (x.projective) os << ", shape=box";
    else if (x.injective) os << ", shape=diamond";
    if (!(x.preds_known && x.succs_known)) os << ", style=dotted";
    os << "];\n";
  }
  for (const auto& a : f.arrows) {
    os << "  v" << a.source << " -> v" << a.target;
    if (a.multiplicity > 1) os << " [label=\"x" << a.multiplicity << "\"]";
    os << ";\n";
  }
  for (std::size_t v = 0; v < f.vertices.size(); ++v)
    if (f.vertices[v].tau) os << "  v" << v << " -> v" << *f.vertices[v].tau << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string fragment_json(const ARFragment& f) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& x : f.vertices) {
    nlohmann::ordered_json v;
    v["name"] = x.name;
    v["dims"] = x.module.dims();
    v["projective"] = x.projective;
    v["injective"] = x.injective;
    v["frontier"] = !(x.preds_known && x.succs_known);
    v["orbit"] = x.orbit;
    v["tau"] = x.tau ? nlohmann::ordered_json(f.vertices[*x.tau].name) : nlohmann::ordered_json(nullptr);
    j["vertices"].push_back(v);
  }
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : f.arrows)
    j["arrows"].push_back({{"source", f.vertices[a.source].name},
                           {"target", f.vertices[a.target].name},
                           {"multiplicity", a.multiplicity}});
  j["meshes"] = nlohmann::ordered_json::array();
  for (const auto& m : f.meshes) {
    nlohmann::ordered_json mj;
    mj["start"] = f.vertices[m.start].name;
    mj["end"] = f.vertices[m.end].name;
    mj["verified"] = m.check.ok();
    j["meshes"].push_back(mj);
  }
  j["complete"] = f.complete;
  j["budget_exhausted"] = f.budget_exhausted;
  j["stabilized"] = f.stabilized;
  j["dimension_capped"] = f.dimension_capped;
  return j.dump(2);
}

}  // namespace qc
