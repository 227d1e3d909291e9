#include "quivercover/covering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qc {

std::size_t GroupAction::arrow(std::size_t g, std::size_t a) const {
  const std::size_t nv = algebra->num_vertices();
  return group.elements[g][nv + a] - nv;
}

std::vector<Permutation> GroupAction::vertex_permutations() const {
  const std::size_t nv = algebra->num_vertices();
  std::vector<Permutation> out;
  for (const auto& p : group.elements) out.emplace_back(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(nv));
  return out;
}

GroupAction make_action(const AlgebraPtr& alg, const std::vector<std::pair<Permutation, Permutation>>& generators) {
  const Quiver& q = alg->quiver();
  const std::size_t nv = q.num_vertices(), na = q.num_arrows();
  std::vector<Permutation> gens;
  for (const auto& [vp, ap] : generators) {
    if (vp.size() != nv || ap.size() != na) throw std::invalid_argument("group generator has wrong size");
    Permutation p(nv + na);
    for (std::size_t v = 0; v < nv; ++v) p[v] = vp[v];
    for (std::size_t a = 0; a < na; ++a) {
      if (ap[a] >= na) throw std::invalid_argument("arrow permutation out of range");
      const Arrow& from = q.arrow(a);
      const Arrow& to = q.arrow(ap[a]);
      if (vp.at(from.source) != to.source || vp.at(from.target) != to.target)
        throw std::invalid_argument("arrow " + from.name + " is not sent to an arrow between the image vertices");
      p[nv + a] = nv + ap[a];
    }
    gens.push_back(std::move(p));
  }
  return GroupAction{alg, generate_group(gens, nv + na)};
}

GroupAction trivial_action(const AlgebraPtr& alg) { return make_action(alg, {}); }

Element CoveringFunctor::apply(std::size_t basis_index) const {
  const Path& p = total->basis(basis_index);
  if (p.arrows.empty()) return {{base->idempotent(object_map[p.source]), Rational(1)}};
  Element e = arrow_images[p.arrows[0]];
  for (std::size_t k = 1; k < p.arrows.size(); ++k) e = base->multiply(e, arrow_images[p.arrows[k]]);
  return e;
}

std::vector<std::size_t> CoveringFunctor::fibre(std::size_t base_vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < object_map.size(); ++v)
    if (object_map[v] == base_vertex) out.push_back(v);
  return out;
}

CoveringFunctor functor_from_arrow_map(const AlgebraPtr& total, const AlgebraPtr& base,
                                       const std::vector<std::size_t>& object_map,
                                       const std::vector<std::size_t>& arrow_map) {
  const Quiver& e = total->quiver();
  const Quiver& b = base->quiver();
  if (object_map.size() != e.num_vertices() || arrow_map.size() != e.num_arrows())
    throw std::invalid_argument("functor data has wrong size");
  CoveringFunctor f{total, base, object_map, {}};
  for (std::size_t a = 0; a < e.num_arrows(); ++a) {
    if (object_map[e.arrow(a).source] >= b.num_vertices() || arrow_map[a] >= b.num_arrows())
      throw std::invalid_argument("functor data out of range");
    const Arrow& img = b.arrow(arrow_map[a]);
    if (img.source != object_map[e.arrow(a).source] || img.target != object_map[e.arrow(a).target])
      throw std::invalid_argument("arrow " + e.arrow(a).name + " mapped to " + img.name + " with wrong endpoints");
    f.arrow_images.push_back({{base->arrow_element(arrow_map[a]), Rational(1)}});
  }
  return f;
}

CoveringFunctor identity_functor(const AlgebraPtr& alg) {
  std::vector<std::size_t> ob(alg->num_vertices()), ar(alg->quiver().num_arrows());
  for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = i;
  for (std::size_t i = 0; i < ar.size(); ++i) ar[i] = i;
  return functor_from_arrow_map(alg, alg, ob, ar);
}

CoveringFunctor opposite_functor(const CoveringFunctor& f) {
  CoveringFunctor op{f.total->opposite(), f.base->opposite(), f.object_map, {}};
  for (const auto& img : f.arrow_images) {
    Element e;
    for (const auto& [i, c] : img) {
      const Path& p = f.base->basis(i);
      std::vector<std::size_t> rev(p.arrows.rbegin(), p.arrows.rend());
      e = add(e, scale(op.base->reduce(p.target, rev), c));
    }
    op.arrow_images.push_back(std::move(e));
  }
  return op;
}

namespace {

// Coordinates of an element in the local basis of B(x, y).
Vector local_coords(const Algebra& alg, const Element& e, std::size_t x, std::size_t y) {
  Vector v(alg.basis_between(x, y).size());
  for (const auto& [i, c] : e) {
    const Path& p = alg.basis(i);
    if (p.source != x || p.target != y) throw std::invalid_argument("element not supported on the expected paths");
    v[alg.local_index(i)] = c;
  }
  return v;
}

// Columns: F(p) for p in E(x', y') over the fibre entries y' (or x' when `over_sources`).
Matrix fibre_sum_matrix(const CoveringFunctor& f, std::size_t fixed, std::size_t w, bool over_sources) {
  const Algebra& e = *f.total;
  const Algebra& b = *f.base;
  std::size_t fx = f.object_map[fixed];
  std::size_t bx = over_sources ? w : fx, by = over_sources ? fx : w;
  std::vector<Vector> cols;
  for (std::size_t other : f.fibre(w)) {
    std::size_t s = over_sources ? other : fixed, t = over_sources ? fixed : other;
    for (std::size_t p : e.basis_between(s, t)) cols.push_back(local_coords(b, f.apply(p), bx, by));
  }
  return Matrix::from_columns(cols, b.basis_between(bx, by).size());
}

Element path_image(const CoveringFunctor& f, std::size_t source, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) return {{f.base->idempotent(f.object_map[source]), Rational(1)}};
  Element e = f.arrow_images[arrows[0]];
  for (std::size_t k = 1; k < arrows.size(); ++k) e = f.base->multiply(e, f.arrow_images[arrows[k]]);
  return e;
}

}  // namespace

Diagnostics check_covering_functor(const CoveringFunctor& f) {
  Diagnostics d;
  const Quiver& eq = f.total->quiver();
  const Quiver& bq = f.base->quiver();
  bool ok = f.object_map.size() == eq.num_vertices() && f.arrow_images.size() == eq.num_arrows();
  std::string witness;
  for (std::size_t v = 0; ok && v < f.object_map.size(); ++v)
    if (f.object_map[v] >= bq.num_vertices()) {
      ok = false;
      witness = eq.vertex_name(v);
    }
  for (std::size_t a = 0; ok && a < eq.num_arrows(); ++a)
    for (const auto& [i, c] : f.arrow_images[a]) {
      const Path& p = f.base->basis(i);
      if (p.source != f.object_map[eq.arrow(a).source] || p.target != f.object_map[eq.arrow(a).target] ||
          p.arrows.empty()) {
        ok = false;
        witness = eq.arrow(a).name;
      }
    }
  d.add("well defined on objects and arrows", ok, witness);
  if (!ok) return d;

  std::string rel_witness;
  for (const auto& r : f.total->presentation().relations()) {
    Element sum;
    for (const auto& t : r.terms) sum = add(sum, scale(path_image(f, r.source, t.arrows), t.coeff));
    if (!sum.empty() && rel_witness.empty()) rel_witness = relation_to_string(eq, r);
  }
  d.add("relations map to zero", rel_witness.empty(), rel_witness);

  for (bool over_sources : {false, true}) {
    std::string w;
    for (std::size_t x = 0; x < eq.num_vertices() && w.empty(); ++x)
      for (std::size_t bw = 0; bw < bq.num_vertices() && w.empty(); ++bw) {
        Matrix m = fibre_sum_matrix(f, x, bw, over_sources);
        std::size_t r = rank(m);
        if (r != m.rows() || r != m.cols()) {
          w = over_sources ? "(F^-1(" + bq.vertex_name(bw) + "), " + eq.vertex_name(x) + ")"
                           : "(" + eq.vertex_name(x) + ", F^-1(" + bq.vertex_name(bw) + "))";
          w += ": " + std::to_string(m.cols()) + " -> " + std::to_string(m.rows()) + ", rank " + std::to_string(r);
        }
      }
    d.add(over_sources ? "sum over fibre of E(-, y) is bijective" : "sum over fibre of E(x, -) is bijective",
          w.empty(), w);
  }
  return d;
}

Diagnostics check_galois(const CoveringFunctor& f, const GroupAction& act) {
  Diagnostics d;
  const Quiver& eq = f.total->quiver();
  const std::size_t nv = eq.num_vertices();

  std::string w;
  for (std::size_t g : act.group.generators) {
    for (const auto& r : f.total->presentation().relations()) {
      Element sum;
      for (const auto& t : r.terms) {
        std::vector<std::size_t> moved;
        for (auto a : t.arrows) moved.push_back(act.arrow(g, a));
        sum = add(sum, scale(f.total->reduce(act.vertex(g, r.source), moved), t.coeff));
      }
      if (!sum.empty() && w.empty()) w = relation_to_string(eq, r);
    }
  }
  d.add("group acts by automorphisms", w.empty(), w);

  w.clear();
  for (std::size_t g = 0; g < act.order() && w.empty(); ++g) {
    for (std::size_t v = 0; v < nv && w.empty(); ++v)
      if (f.object_map[act.vertex(g, v)] != f.object_map[v]) w = eq.vertex_name(v);
    for (std::size_t a = 0; a < eq.num_arrows() && w.empty(); ++a)
      if (f.arrow_images[act.arrow(g, a)] != f.arrow_images[a]) w = eq.arrow(a).name;
  }
  d.add("F g = F", w.empty(), w);

  w.clear();
  for (std::size_t g = 1; g < act.order() && w.empty(); ++g)
    for (std::size_t v = 0; v < nv && w.empty(); ++v)
      if (act.vertex(g, v) == v) w = eq.vertex_name(v);
  d.add("free on objects", w.empty(), w);

  std::string empty_fibre, not_transitive;
  for (std::size_t b = 0; b < f.base->num_vertices(); ++b) {
    auto fib = f.fibre(b);
    if (fib.empty()) {
      if (empty_fibre.empty()) empty_fibre = f.base->quiver().vertex_name(b);
      continue;
    }
    std::vector<std::size_t> orbit;
    for (std::size_t g = 0; g < act.order(); ++g) orbit.push_back(act.vertex(g, fib[0]));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit != fib && not_transitive.empty()) not_transitive = f.base->quiver().vertex_name(b);
  }
  d.add("fibres non-empty", empty_fibre.empty(), empty_fibre);
  d.add("transitive on fibres", not_transitive.empty(), not_transitive);

  for (auto& c : check_covering_functor(f).checks) d.checks.push_back(std::move(c));
  return d;
}

Representation push_down(const CoveringFunctor& f, const Representation& m) {
  const Algebra& b = *f.base;
  const Quiver& bq = b.quiver();
  const std::size_t nb = b.num_vertices();
  std::vector<std::vector<std::size_t>> fib(nb);
  std::vector<std::size_t> offset(f.object_map.size(), 0), dims(nb, 0);
  for (std::size_t v = 0; v < f.object_map.size(); ++v) {
    std::size_t w = f.object_map[v];
    fib[w].push_back(v);
    offset[v] = dims[w];
    dims[w] += m.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t beta = 0; beta < bq.num_arrows(); ++beta) {
    std::size_t x = bq.arrow(beta).source, y = bq.arrow(beta).target;
    Matrix out(dims[x], dims[y]);
    Vector target = local_coords(b, {{b.arrow_element(beta), Rational(1)}}, x, y);
    for (std::size_t xs : fib[x]) {
      Matrix cols = fibre_sum_matrix(f, xs, y, false);
      auto coeffs = solve(cols, target);
      if (!coeffs) throw std::invalid_argument("push-down: arrow " + bq.arrow(beta).name + " has no lift");
      std::size_t k = 0;
      for (std::size_t ys : fib[y]) {
        Element e;
        for (std::size_t p : f.total->basis_between(xs, ys)) {
          if (!is_zero((*coeffs)[k])) e.push_back({p, (*coeffs)[k]});
          ++k;
        }
        if (!e.empty() && m.dim(xs) && m.dim(ys)) out.set_block(offset[xs], offset[ys], m.element_matrix(e, xs, ys));
      }
    }
    maps.push_back(std::move(out));
  }
  return Representation(f.base, std::move(dims), std::move(maps));
}

ModuleMap push_down(const CoveringFunctor& f, const ModuleMap& map) {
  const std::size_t nb = f.base->num_vertices();
  std::vector<Matrix> comps(nb);
  for (std::size_t v = 0; v < f.object_map.size(); ++v) {
    Matrix& c = comps[f.object_map[v]];
    c = block_diagonal(c, map.components[v]);
  }
  return ModuleMap{std::move(comps)};
}

Representation pull_up(const CoveringFunctor& f, const Representation& x) {
  const Quiver& eq = f.total->quiver();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < eq.num_vertices(); ++v) dims.push_back(x.dim(f.object_map[v]));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < eq.num_arrows(); ++a)
    maps.push_back(x.element_matrix(f.arrow_images[a], f.object_map[eq.arrow(a).source],
                                    f.object_map[eq.arrow(a).target]));
  return Representation(f.total, std::move(dims), std::move(maps));
}

Representation twist(const GroupAction& act, std::size_t g, const Representation& m) {
  const Quiver& q = act.algebra->quiver();
  std::size_t gi = act.inverse(g);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) dims.push_back(m.dim(act.vertex(gi, v)));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.push_back(m.map(act.arrow(gi, a)));
  return Representation(m.algebra(), std::move(dims), std::move(maps));
}

std::vector<std::size_t> stabilizer(const GroupAction& act, const Representation& m) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < act.order(); ++g) {
    Representation t = twist(act, g, m);
    if (t.dims() == m.dims() && is_isomorphic(t, m)) out.push_back(g);
  }
  return out;
}

std::string to_string(FirstKind k) {
  switch (k) {
    case FirstKind::yes:
      return "first-kind";
    case FirstKind::no:
      return "not-first-kind";
    default:
      return "unknown";
  }
}

FirstKindResult is_first_kind(const CoveringFunctor& f, const Representation& x, const DecomposeOptions& opts) {
  FirstKindResult r;
  std::vector<Summand> parts;
  try {
    parts = indecompose(pull_up(f, x), opts);
  } catch (const DecompositionError& e) {
    r.detail = e.what();
    return r;
  }
  for (const auto& s : parts) {
    Representation down = push_down(f, s.module);
    if (down.dims() == x.dims() && is_isomorphic(down, x, opts.seed)) {
      r.verdict = FirstKind::yes;
      r.lift = s.module;
      r.detail = "lift " + s.module.dim_vector_string();
      return r;
    }
  }
  r.verdict = FirstKind::no;
  r.detail = std::to_string(parts.size()) + " summand classes of the pull-up, none pushes down to X";
  return r;
}

namespace {

// Is there h: N -> M with h o f = id (section) or f o h = id (retraction)?
bool splits(const ModuleMap& f, const Representation& m, const Representation& n, bool section) {
  const Representation& id_of = section ? m : n;
  if (id_of.is_zero()) return true;
  HomSpace h = hom_space(n, m);
  Vector target = flatten(identity_map(id_of));
  std::vector<Vector> cols;
  for (const auto& b : h.basis) cols.push_back(flatten(section ? compose(b, f) : compose(f, b)));
  if (cols.empty()) return false;
  return solve(Matrix::from_columns(cols, target.size()), target).has_value();
}

}  // namespace

bool is_section(const ModuleMap& f, const Representation& m, const Representation& n) {
  return splits(f, m, n, true);
}

bool is_retraction(const ModuleMap& f, const Representation& m, const Representation& n) {
  return splits(f, m, n, false);
}

SectionReport check_section_retraction_reflection(const CoveringFunctor& f, const ModuleMap& map,
                                                  const Representation& m, const Representation& n) {
  SectionReport r;
  r.section = is_section(map, m, n);
  r.retraction = is_retraction(map, m, n);
  Representation pm = push_down(f, m), pn = push_down(f, n);
  ModuleMap pf = push_down(f, map);
  r.pushed_section = is_section(pf, pm, pn);
  r.pushed_retraction = is_retraction(pf, pm, pn);
  return r;
}

TauReport check_tau_commutation(const CoveringFunctor& f, const Representation& x) {
  TauReport r;
  Representation down = push_down(f, x);
  if (!is_indecomposable(x)) {
    r.hypotheses = false;
    r.note = "X is decomposable";
  } else if (is_projective(x)) {
    r.hypotheses = false;
    r.note = "X is projective";
  } else if (!is_indecomposable(down)) {
    r.hypotheses = false;
    r.note = "push-down is decomposable";
  }
  r.lhs = push_down(f, tau(x));
  r.rhs = tau(down);
  r.agree = r.lhs.dims() == r.rhs.dims() && is_isomorphic(r.lhs, r.rhs);
  return r;
}

CoveringPropertyCheck covering_property(const CoveringFunctor& f, const GroupAction& act, const Representation& m,
                                        const Representation& n) {
  CoveringPropertyCheck c;
  c.hom_base = hom_dim(push_down(f, m), push_down(f, n));
  for (std::size_t g = 0; g < act.order(); ++g) c.hom_total += hom_dim(twist(act, g, m), n);
  return c;
}

QuotientCategory quotient_presentation(const GroupAction& act) {
  const Algebra& e = *act.algebra;
  const Quiver& q = e.quiver();
  const std::size_t nv = q.num_vertices(), na = q.num_arrows();
  for (std::size_t g = 1; g < act.order(); ++g)
    for (std::size_t v = 0; v < nv; ++v)
      if (act.vertex(g, v) == v) throw std::invalid_argument("action is not free at " + q.vertex_name(v));

  std::vector<std::size_t> vrep(nv), arep(na);
  for (std::size_t v = 0; v < nv; ++v) {
    vrep[v] = v;
    for (std::size_t g = 0; g < act.order(); ++g) vrep[v] = std::min(vrep[v], act.vertex(g, v));
  }
  for (std::size_t a = 0; a < na; ++a) {
    arep[a] = a;
    for (std::size_t g = 0; g < act.order(); ++g) arep[a] = std::min(arep[a], act.arrow(g, a));
  }
  Quiver bq;
  std::map<std::size_t, std::size_t> vindex, aindex;
  for (std::size_t v = 0; v < nv; ++v)
    if (vrep[v] == v) vindex[v] = bq.add_vertex(q.vertex_name(v));
  for (std::size_t a = 0; a < na; ++a)
    if (arep[a] == a)
      aindex[a] = bq.add_arrow(q.arrow(a).name, vindex.at(vrep[q.arrow(a).source]), vindex.at(vrep[q.arrow(a).target]));

  std::vector<Relation> rels;
  for (const auto& r : e.presentation().relations()) {
    std::vector<Term> terms;
    for (const auto& t : r.terms) {
      Term u{t.coeff, {}};
      for (auto a : t.arrows) u.arrows.push_back(aindex.at(arep[a]));
      terms.push_back(std::move(u));
    }
    Relation nr = normalize_relation(bq, std::move(terms));
    if (std::find(rels.begin(), rels.end(), nr) == rels.end()) rels.push_back(std::move(nr));
  }
  auto base = Algebra::create(Presentation(bq, std::move(rels), e.presentation().flags()));
  std::vector<std::size_t> ob(nv), ar(na);
  for (std::size_t v = 0; v < nv; ++v) ob[v] = vindex.at(vrep[v]);
  for (std::size_t a = 0; a < na; ++a) ar[a] = aindex.at(arep[a]);
  return QuotientCategory{base, functor_from_arrow_map(act.algebra, base, ob, ar)};
}

std::vector<std::optional<std::size_t>> label_push_downs(const CoveringFunctor& f,
                                                         const std::vector<Representation>& total_modules,
                                                         const std::vector<Representation>& base_modules) {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& m : total_modules) {
    Representation d = push_down(f, m);
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < base_modules.size() && !hit; ++j)
      if (base_modules[j].dims() == d.dims() && is_isomorphic(base_modules[j], d)) hit = j;
    out.push_back(hit);
  }
  return out;
}

}  // namespace qc
