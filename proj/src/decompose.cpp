#include "quivercover/decompose.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace qc {

ModuleMap inverse_map(const ModuleMap& f) {
  ModuleMap g;
  for (const auto& c : f.components) {
    auto inv = inverse(c);
    if (!inv) throw std::invalid_argument("inverse_map: map is not invertible");
    g.components.push_back(std::move(*inv));
  }
  return g;
}

namespace {

Rational trace(const ModuleMap& f) {
  Rational t = 0;
  for (const auto& c : f.components)
    for (std::size_t i = 0; i < c.rows(); ++i) t += c(i, i);
  return t;
}

std::size_t residue_dim(const std::vector<ModuleMap>& basis) {
  const std::size_t d = basis.size();
  if (d <= 1) return d;
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational t = trace(compose(basis[i], basis[j]));
      g(i, j) = t;
      g(j, i) = t;
    }
  return rank(g);
}

Matrix power(const Matrix& m, std::size_t k) {
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

struct Piece {
  Representation module;
  ModuleMap inclusion, projection;  // relative to the original module
};

// Fitting split of m along f - lambda, if both parts are nonzero.
std::optional<std::pair<Piece, Piece>> try_split(const Piece& p, const ModuleMap& f) {
  const Representation& m = p.module;
  const std::size_t nv = m.dims().size();
  std::size_t n = 0;
  for (auto d : m.dims()) n = std::max(n, d);
  std::vector<Rational> candidates;
  for (std::size_t v = 0; v < nv; ++v) {
    if (m.dim(v) == 0) continue;
    for (auto& r : rational_roots(charpoly(f.components[v])))
      if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& lambda : candidates) {
    std::vector<Matrix> ker(nv), img(nv);
    std::size_t kdim = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix g = f.components[v];
      for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= lambda;
      Matrix gn = power(g, n);
      ker[v] = nullspace_matrix(gn);
      img[v] = gn;
      kdim += ker[v].cols();
    }
    if (kdim == 0 || kdim == m.total_dim()) continue;
    SubModule k = submodule(m, ker);
    SubModule i = submodule(m, img);
    // Projections along the complementary summand.
    ModuleMap pk, pi;
    for (std::size_t v = 0; v < nv; ++v) {
      const Matrix& bk = k.inclusion.components[v];
      const Matrix& bi = i.inclusion.components[v];
      Matrix inv = *inverse(hstack(bk, bi));
      std::vector<std::size_t> rk, ri;
      for (std::size_t r = 0; r < bk.cols(); ++r) rk.push_back(r);
      for (std::size_t r = 0; r < bi.cols(); ++r) ri.push_back(bk.cols() + r);
      pk.components.push_back(inv.select_rows(rk));
      pi.components.push_back(inv.select_rows(ri));
    }
    Piece a{k.module, compose(p.inclusion, k.inclusion), compose(pk, p.projection)};
    Piece b{i.module, compose(p.inclusion, i.inclusion), compose(pi, p.projection)};
    return std::make_pair(std::move(a), std::move(b));
  }
  return std::nullopt;
}

void split_recursive(const Piece& p, const DecomposeOptions& opts, std::vector<Piece>& out,
                     std::vector<Representation>& done_so_far) {
  const Representation& m = p.module;
  if (m.total_dim() <= 1) {
    out.push_back(p);
    done_so_far.push_back(m);
    return;
  }
  HomSpace e = hom_space(m, m);
  if (e.dim() == 1 || residue_dim(e.basis) == 1) {
    out.push_back(p);
    done_so_far.push_back(m);
    return;
  }
  const std::size_t d = e.dim();
  std::size_t tries = 0;
  auto attempt = [&](const ModuleMap& f) -> bool {
    ++tries;
    auto s = try_split(p, f);
    if (!s) return false;
    split_recursive(s->first, opts, out, done_so_far);
    split_recursive(s->second, opts, out, done_so_far);
    return true;
  };
  for (std::size_t i = 0; i < d && tries < opts.budget; ++i)
    if (attempt(e.basis[i])) return;
  for (std::size_t i = 0; i < d && tries < opts.budget; ++i)
    for (std::size_t j = i + 1; j < d && tries < opts.budget; ++j)
      if (attempt(add_maps(e.basis[i], e.basis[j]))) return;
  std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ull * (m.total_dim() + 1)));
  while (tries < opts.budget) {
    Vector c(d);
    for (auto& x : c) x = static_cast<long>(rng() % 15) - 7;
    if (attempt(combine(e.basis, c))) return;
  }
  std::vector<Representation> partial = done_so_far;
  partial.push_back(m);
  throw DecompositionError("decomposition budget exhausted on a summand of dimension vector " +
                               m.dim_vector_string() + " whose endomorphism ring is not local over Q",
                           std::move(partial));
}

}  // namespace

std::size_t endomorphism_residue_dim(const Representation& m) {
  if (m.is_zero()) return 0;
  return residue_dim(hom_space(m, m).basis);
}

std::vector<Summand> indecompose(const Representation& m, const DecomposeOptions& opts) {
  if (m.is_zero()) return {};
  std::vector<Piece> pieces;
  std::vector<Representation> done;
  split_recursive(Piece{m, identity_map(m), identity_map(m)}, opts, pieces, done);
  std::vector<Summand> out;
  for (auto& p : pieces) {
    bool placed = false;
    for (auto& s : out) {
      if (s.module.dims() != p.module.dims()) continue;
      auto iso = find_isomorphism(s.module, p.module, opts.seed);  // rep -> piece
      if (!iso) continue;
      s.inclusions.push_back(compose(p.inclusion, *iso));
      s.projections.push_back(compose(inverse_map(*iso), p.projection));
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) out.push_back(Summand{p.module, 1, {p.inclusion}, {p.projection}});
  }
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    if (a.module.total_dim() != b.module.total_dim()) return a.module.total_dim() < b.module.total_dim();
    return a.module.dims() < b.module.dims();
  });
  return out;
}

bool is_indecomposable(const Representation& m, const DecomposeOptions& opts) {
  if (m.is_zero()) return false;
  auto s = indecompose(m, opts);
  return s.size() == 1 && s[0].multiplicity == 1;
}

}  // namespace qc
