#include "quivercover/build_cover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qc {

namespace {

long long mod(long long x, std::size_t n) {
  long long m = static_cast<long long>(n);
  return ((x % m) + m) % m;
}

}  // namespace

CoverBuild weighted_cover(const AlgebraPtr& alg, const std::vector<long long>& weights, std::size_t modulus) {
  const Quiver& q = alg->quiver();
  const std::size_t nv = q.num_vertices(), na = q.num_arrows(), n = modulus;
  if (weights.size() != na) throw std::invalid_argument("one weight per arrow expected");
  auto sheet_name = [&](const std::string& base, std::size_t h) {
    return n == 1 ? base : base + "_" + std::to_string(h);
  };
  Quiver eq;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t v = 0; v < nv; ++v) eq.add_vertex(sheet_name(q.vertex_name(v), h));
  std::vector<long long> w(na);
  for (std::size_t a = 0; a < na; ++a) w[a] = mod(weights[a], n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      const Arrow& ar = q.arrow(a);
      std::size_t th = static_cast<std::size_t>(mod(static_cast<long long>(h) + w[a], n));
      eq.add_arrow(sheet_name(ar.name, h), h * nv + ar.source, th * nv + ar.target);
    }
  std::vector<Relation> rels;
  for (const auto& r : alg->presentation().relations())
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<Term> terms;
      std::optional<std::size_t> end;
      for (const auto& t : r.terms) {
        std::size_t sheet = h;
        Term u{t.coeff, {}};
        for (auto a : t.arrows) {
          u.arrows.push_back(sheet * na + a);
          sheet = static_cast<std::size_t>(mod(static_cast<long long>(sheet) + w[a], n));
        }
        if (end && *end != sheet)
          throw std::invalid_argument("relation " + relation_to_string(q, r) + " is not homogeneous for the weights");
        end = sheet;
        terms.push_back(std::move(u));
      }
      rels.push_back(normalize_relation(eq, std::move(terms)));
    }
  CoverBuild out;
  out.modulus = n;
  out.weights = w;
  out.total = Algebra::create(Presentation(eq, std::move(rels)));
  std::vector<std::size_t> ob(n * nv), ar(n * na);
  for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = i % nv;
  for (std::size_t i = 0; i < ar.size(); ++i) ar[i] = i % na;
  out.functor = functor_from_arrow_map(out.total, alg, ob, ar);
  std::vector<std::pair<Permutation, Permutation>> gens;
  if (n > 1) {
    Permutation vp(n * nv), ap(n * na);
    for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = (i + nv) % (n * nv);
    for (std::size_t i = 0; i < ap.size(); ++i) ap[i] = (i + na) % (n * na);
    gens.emplace_back(vp, ap);
  }
  out.action = make_action(out.total, gens);
  out.connected = connected_components(eq).size() == 1;
  return out;
}

namespace {

struct Assigner {
  const QuotientSpec& q;
  std::size_t next = 0;
  std::map<std::string, long long> weight;  // arrow name -> weight
  std::vector<std::string> labels;
  bool dry_run = false;

  explicit Assigner(const QuotientSpec& spec) : q(spec) {}

  long long take(std::string label) {
    labels.push_back(std::move(label));
    if (dry_run) return 0;
    if (q.modulus == 1 && q.images.empty()) return 0;
    if (next >= q.images.size())
      throw std::invalid_argument("quotient lists " + std::to_string(q.images.size()) +
                                  " generator images, fewer than the rank of pi1");
    return q.images[next++];
  }
};

std::vector<long long> weights_for(const AlgebraPtr& alg, const Assigner& as) {
  std::vector<long long> w;
  for (const auto& a : alg->quiver().arrows()) w.push_back(as.weight.at(a.name));
  return w;
}

// Sub-module of P_x0 generated by the arrow a into x0.
Representation arrow_image(const AlgebraPtr& alg, std::size_t a) {
  const Algebra& A = *alg;
  const Arrow& ar = A.quiver().arrow(a);
  Representation py = projective_at(alg, ar.source), px = projective_at(alg, ar.target);
  ModuleMap f;
  Element alpha{{A.arrow_element(a), Rational(1)}};
  for (std::size_t u = 0; u < A.num_vertices(); ++u) {
    const auto& src = A.basis_between(u, ar.source);
    Matrix m(px.dim(u), py.dim(u));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [k, c] : A.multiply({{src[j], Rational(1)}}, alpha)) m(A.local_index(k), j) = c;
    f.components.push_back(std::move(m));
  }
  return image(f, px).module;
}

void assign(const RecursionNode& node, Assigner& as) {
  const Quiver& q = node.algebra->quiver();
  if (node.kind == RecursionNode::Kind::hereditary_base) {
    std::vector<std::size_t> parent(q.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& a : q.arrows()) {
      std::size_t u = find(a.source), v = find(a.target);
      if (u != v) {
        parent[u] = v;
        as.weight[a.name] = 0;
      } else {
        as.weight[a.name] = as.take("arrow " + a.name);
      }
    }
    return;
  }
  const PeelStep& s = *node.step;
  for (const auto& child : node.children) assign(child, as);

  std::vector<std::size_t> incoming = q.arrows_in(s.vertex);
  std::vector<std::vector<std::size_t>> arrows_of(s.summands.size());
  std::vector<std::size_t> total(s.b ? s.b->num_vertices() : 0, 0);
  for (auto a : incoming) {
    Representation u = restrict_module(arrow_image(node.algebra, a), s.b);
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += u.dim(v);
    bool found = false;
    for (std::size_t j = 0; j < s.summands.size() && !found; ++j)
      if (s.summands[j].module.dims() == u.dims() && is_isomorphic(s.summands[j].module, u)) {
        arrows_of[j].push_back(a);
        found = true;
      }
    if (!found) throw UnsupportedBaseCase("image of arrow " + q.arrow(a).name + " is not a summand of rad P");
  }
  Representation rad = restrict_module(radical(projective_at(node.algebra, s.vertex)).module, s.b);
  bool splits = total == rad.dims();
  for (std::size_t j = 0; j < s.summands.size(); ++j) splits &= arrows_of[j].size() == s.summands[j].multiplicity;
  if (!splits) throw UnsupportedBaseCase("rad P_" + s.vertex_name + " does not split along the arrows into it");

  std::vector<bool> tree_used(s.components.size(), false);
  for (std::size_t j = 0; j < s.summands.size(); ++j) {
    const PeelSummand& sm = s.summands[j];
    long long sheet = 0;
    if (!as.dry_run) {
      const RecursionNode& child = node.children[sm.component];
      CoverBuild cc = weighted_cover(child.algebra, weights_for(child.algebra, as), as.q.modulus);
      Representation x = restrict_module(sm.module, child.algebra);
      FirstKindResult fk = is_first_kind(cc.functor, x);
      if (!fk.lift) throw UnsupportedBaseCase("no lift found for summand " + x.dim_vector_string());
      auto top = top_dims(*fk.lift);
      std::size_t tv = static_cast<std::size_t>(std::find_if(top.begin(), top.end(), [](std::size_t d) { return d; }) -
                                                top.begin());
      sheet = static_cast<long long>(tv / child.algebra->num_vertices());
    }
    for (std::size_t k = 0; k < arrows_of[j].size(); ++k) {
      long long t = 0;
      if (k == 0 && !tree_used[sm.component]) tree_used[sm.component] = true;
      else
        t = as.take("edge " + node.graph.vertices[node.summand_orbit[j]] + " - " +
                    node.graph.vertices[node.peel_orbit] + " #" + std::to_string(k + 1));
      as.weight[q.arrow(arrows_of[j][k]).name] = -(sheet + t);
    }
  }
}

}  // namespace

std::vector<std::string> pi1_generators(const RecursionNode& node) {
  QuotientSpec none;
  Assigner as(none);
  as.dry_run = true;
  assign(node, as);
  return as.labels;
}

CoverBuild build_A_tilde(const RecursionNode& node, const QuotientSpec& q) {
  if (q.modulus == 0) throw std::invalid_argument("quotient modulus must be positive");
  std::vector<std::string> gens = pi1_generators(node);
  if (!(q.modulus == 1 && q.images.empty()) && q.images.size() != gens.size())
    throw std::invalid_argument("quotient lists " + std::to_string(q.images.size()) + " generator images but pi1 has rank " +
                                std::to_string(gens.size()));
  Assigner as(q);
  assign(node, as);
  CoverBuild out = weighted_cover(node.algebra, weights_for(node.algebra, as), q.modulus);
  out.generators = std::move(gens);
  return out;
}

CoverBuild build_A_tilde(const AlgebraPtr& alg, const QuotientSpec& q, const KnitOptions& opts) {
  return build_A_tilde(recursion_tree(alg, opts), q);
}

bool quiver_isomorphic(const Quiver& a, const Quiver& b) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  auto counts = [n](const Quiver& q) {
    std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
    for (const auto& ar : q.arrows()) ++c[ar.source][ar.target];
    return c;
  };
  auto ca = counts(a), cb = counts(b);
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || a.arrows_out(i).size() != b.arrows_out(j).size() || a.arrows_in(i).size() != b.arrows_in(j).size())
        continue;
      map[i] = j;
      bool ok = ca[i][i] == cb[j][j];
      for (std::size_t k = 0; k < i && ok; ++k) ok = ca[i][k] == cb[j][map[k]] && ca[k][i] == cb[map[k]][j];
      if (!ok) continue;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace qc
