#include "quivercover/repr.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace qc {

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, bool check)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (check) validate();
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> maps(q.num_arrows());
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  return Representation(std::move(alg), std::move(dims), std::move(maps), false);
}

std::size_t Representation::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

Matrix Representation::path_matrix(std::size_t source, const std::vector<std::size_t>& arrows) const {
  if (arrows.empty()) return Matrix::identity(dims_[source]);
  Matrix m = maps_[arrows[0]];
  for (std::size_t k = 1; k < arrows.size(); ++k) m = m * maps_[arrows[k]];
  return m;
}

Matrix Representation::basis_matrix(std::size_t i) const {
  const Path& p = alg_->basis(i);
  return path_matrix(p.source, p.arrows);
}

Matrix Representation::element_matrix(const Element& e, std::size_t x, std::size_t y) const {
  Matrix m(dims_[x], dims_[y]);
  for (const auto& [i, c] : e) {
    const Path& p = alg_->basis(i);
    if (p.source != x || p.target != y) throw std::invalid_argument("element_matrix: element not supported on x -> y");
    m += c * basis_matrix(i);
  }
  return m;
}

std::string Representation::dim_vector_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < dims_.size(); ++v) os << (v ? "," : "") << dims_[v];
  os << ')';
  return os.str();
}

void Representation::validate() const {
  if (!alg_) throw std::invalid_argument("representation without algebra");
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.num_vertices() || maps_.size() != q.num_arrows())
    throw std::invalid_argument("representation size does not match quiver");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.source] || maps_[a].cols() != dims_[ar.target])
      throw std::invalid_argument("matrix for arrow " + ar.name + " has wrong shape");
  }
  for (const auto& r : alg_->presentation().relations()) {
    Matrix acc(dims_[r.source], dims_[r.target]);
    for (const auto& t : r.terms) acc += t.coeff * path_matrix(r.source, t.arrows);
    if (!acc.is_zero())
      throw std::invalid_argument("relation " + relation_to_string(q, r) + " does not vanish on the representation");
  }
}

bool same_algebra(const Representation& m, const Representation& n) {
  return m.algebra() == n.algebra() ||
         (m.algebra() && n.algebra() && m.algebra()->presentation() == n.algebra()->presentation());
}

namespace {

void require_same(const Representation& m, const Representation& n) {
  if (!same_algebra(m, n)) throw std::invalid_argument("modules over different presentations");
}

}  // namespace

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  h.components.reserve(f.components.size());
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (auto d : m.dims()) f.components.push_back(Matrix::identity(d));
  return f;
}

ModuleMap zero_map(const Representation& m, const Representation& n) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) f.components.emplace_back(n.dim(v), m.dim(v));
  return f;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (std::size_t v = 0; v < h.components.size(); ++v) h.components[v] += g.components[v];
  return h;
}

ModuleMap scale_map(const ModuleMap& f, const Rational& s) {
  ModuleMap h = f;
  for (auto& c : h.components) c *= s;
  return h;
}

ModuleMap combine(const std::vector<ModuleMap>& basis, const Vector& coeffs) {
  if (basis.empty()) throw std::invalid_argument("combine: empty basis");
  ModuleMap h = scale_map(basis[0], coeffs[0]);
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (sgn(coeffs[i]) != 0) h = add_maps(h, scale_map(basis[i], coeffs[i]));
  return h;
}

bool is_homomorphism(const ModuleMap& f, const Representation& m, const Representation& n) {
  const Quiver& q = m.algebra()->quiver();
  if (f.components.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (f.components[v].rows() != n.dim(v) || f.components[v].cols() != m.dim(v)) return false;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(f.components[ar.source] * m.map(a) == n.map(a) * f.components[ar.target])) return false;
  }
  return true;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& c : f.components)
    if (!c.is_zero()) return false;
  return true;
}

Vector flatten(const ModuleMap& f) {
  Vector out;
  for (const auto& c : f.components)
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) out.push_back(c(i, j));
  return out;
}

Representation projective_at(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.num_vertices()) throw std::out_of_range("unknown vertex");
  std::vector<std::size_t> dims(q.num_vertices());
  for (std::size_t x = 0; x < q.num_vertices(); ++x) dims[x] = alg->basis_between(x, v).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.source], dims[ar.target]);
    const auto& cols = alg->basis_between(ar.target, v);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, c] : alg->product(alg->arrow_element(a), cols[j])) m(alg->local_index(k), j) = c;
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps), false);
}

Representation injective_at(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.num_vertices()) throw std::out_of_range("unknown vertex");
  std::vector<std::size_t> dims(q.num_vertices());
  for (std::size_t x = 0; x < q.num_vertices(); ++x) dims[x] = alg->basis_between(v, x).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    // Right multiplication by a sends paths v -> x to paths v -> y; the module map is its transpose.
    Matrix m(dims[ar.source], dims[ar.target]);
    const auto& rows = alg->basis_between(v, ar.source);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [k, c] : alg->product(rows[i], alg->arrow_element(a))) m(i, alg->local_index(k)) = c;
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps), false);
}

Representation simple_at(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.num_vertices()) throw std::out_of_range("unknown vertex");
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.source], dims[ar.target]);
  return Representation(alg, std::move(dims), std::move(maps), false);
}

DirectSum direct_sum_with_maps(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const AlgebraPtr& alg = parts[0].algebra();
  for (const auto& p : parts) require_same(parts[0], p);
  const Quiver& q = alg->quiver();
  const std::size_t n = q.num_vertices();
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) {
      offset[i][v] = dims[v];
      dims[v] += parts[i].dim(v);
    }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.source], dims[ar.target]);
    for (std::size_t i = 0; i < parts.size(); ++i) m.set_block(offset[i][ar.source], offset[i][ar.target], parts[i].map(a));
    maps.push_back(std::move(m));
  }
  DirectSum out{Representation(alg, dims, std::move(maps), false), {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ModuleMap inc, proj;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix in(dims[v], parts[i].dim(v)), pr(parts[i].dim(v), dims[v]);
      for (std::size_t k = 0; k < parts[i].dim(v); ++k) {
        in(offset[i][v] + k, k) = 1;
        pr(k, offset[i][v] + k) = 1;
      }
      inc.components.push_back(std::move(in));
      proj.components.push_back(std::move(pr));
    }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

Representation direct_sum(const std::vector<Representation>& parts) { return direct_sum_with_maps(parts).module; }

Representation dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Representation(m.algebra()->opposite(), m.dims(), std::move(maps), false);
}

ModuleMap dual_map(const ModuleMap& f) {
  ModuleMap g;
  for (const auto& c : f.components) g.components.push_back(c.transpose());
  return g;
}

SubModule submodule(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.algebra()->quiver();
  const std::size_t n = q.num_vertices();
  std::vector<Matrix> basis(n), linv(n);
  std::vector<std::size_t> dims(n);
  for (std::size_t v = 0; v < n; ++v) {
    basis[v] = spans[v].cols() == 0 ? Matrix(m.dim(v), 0) : column_basis(spans[v]);
    dims[v] = basis[v].cols();
    linv[v] = dims[v] == 0 ? Matrix(0, m.dim(v)) : left_inverse(basis[v]);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix image = m.map(a) * basis[ar.target];
    Matrix sub = linv[ar.source] * image;
    if (!(basis[ar.source] * sub == image)) throw std::invalid_argument("submodule: subspaces are not closed under " + ar.name);
    maps.push_back(std::move(sub));
  }
  return {Representation(m.algebra(), dims, std::move(maps), false), ModuleMap{basis}};
}

QuotientModule quotient(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.algebra()->quiver();
  const std::size_t n = q.num_vertices();
  std::vector<Matrix> proj(n), sect(n);
  std::vector<std::size_t> dims(n);
  for (std::size_t v = 0; v < n; ++v) {
    Matrix b = spans[v].cols() == 0 ? Matrix(m.dim(v), 0) : column_basis(spans[v]);
    Matrix c = complement_columns(b, m.dim(v));
    dims[v] = c.cols();
    Matrix full = hstack(b, c);
    Matrix inv = *inverse(full);
    std::vector<std::size_t> rows;
    for (std::size_t k = b.cols(); k < m.dim(v); ++k) rows.push_back(k);
    proj[v] = inv.select_rows(rows);
    sect[v] = std::move(c);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(proj[ar.source] * m.map(a) * sect[ar.target]);
  }
  return {Representation(m.algebra(), dims, std::move(maps), false), ModuleMap{proj}, sect};
}

SubModule kernel(const ModuleMap& f, const Representation& m) {
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    if (f.components[v].rows() == 0) spans.push_back(Matrix::identity(m.dim(v)));
    else spans.push_back(nullspace_matrix(f.components[v]));
  }
  return submodule(m, spans);
}

SubModule image(const ModuleMap& f, const Representation& n) { return submodule(n, f.components); }

QuotientModule cokernel(const ModuleMap& f, const Representation& n) { return quotient(n, f.components); }

namespace {

std::vector<Matrix> radical_spans(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Matrix s(m.dim(v), 0);
    for (std::size_t a : q.arrows_out(v)) s = hstack(s, m.map(a));
    spans.push_back(std::move(s));
  }
  return spans;
}

}  // namespace

SubModule radical(const Representation& m) { return submodule(m, radical_spans(m)); }

SubModule socle(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Matrix s(0, m.dim(v));
    for (std::size_t a : q.arrows_in(v)) s = vstack(s, m.map(a));
    spans.push_back(s.rows() == 0 ? Matrix::identity(m.dim(v)) : nullspace_matrix(s));
  }
  return submodule(m, spans);
}

std::vector<std::size_t> top_dims(const Representation& m) {
  auto spans = radical_spans(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < spans.size(); ++v) out.push_back(m.dim(v) - (spans[v].cols() ? rank(spans[v]) : 0));
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  const std::size_t n = alg->num_vertices();
  auto spans = radical_spans(m);
  ProjectiveCover pc;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix b = spans[v].cols() == 0 ? Matrix(m.dim(v), 0) : column_basis(spans[v]);
    Matrix c = complement_columns(b, m.dim(v));
    for (std::size_t k = 0; k < c.cols(); ++k) {
      pc.vertices.push_back(v);
      pc.generators.push_back(c.column(k));
    }
  }
  std::vector<Representation> parts;
  for (auto v : pc.vertices) parts.push_back(projective_at(alg, v));
  pc.cover = parts.empty() ? Representation::zero(alg) : direct_sum(parts);
  // pi at x sends the basis path q (x -> v_i) of the i-th summand to M(q) t_i.
  for (std::size_t x = 0; x < n; ++x) {
    Matrix px(m.dim(x), pc.cover.dim(x));
    std::size_t col = 0;
    for (std::size_t i = 0; i < pc.vertices.size(); ++i)
      for (std::size_t b : alg->basis_between(x, pc.vertices[i])) {
        Vector img = m.basis_matrix(b).apply(pc.generators[i]);
        for (std::size_t r = 0; r < img.size(); ++r) px(r, col) = img[r];
        ++col;
      }
    pc.pi.components.push_back(std::move(px));
  }
  return pc;
}

MinimalPresentation minimal_presentation(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  MinimalPresentation mp;
  mp.top = projective_cover(m);
  mp.omega = kernel(mp.top.pi, mp.top.cover);
  ProjectiveCover inner = projective_cover(mp.omega.module);
  mp.p1 = inner.vertices;
  for (std::size_t j = 0; j < inner.vertices.size(); ++j) {
    std::size_t w = inner.vertices[j];
    Vector g = mp.omega.inclusion.components[w].apply(inner.generators[j]);
    std::vector<Element> row;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < mp.top.vertices.size(); ++i) {
      Element e;
      for (std::size_t b : alg->basis_between(w, mp.top.vertices[i])) {
        if (sgn(g[pos]) != 0) e.emplace_back(b, g[pos]);
        ++pos;
      }
      row.push_back(std::move(e));
    }
    mp.relation.push_back(std::move(row));
  }
  return mp;
}

SubModule syzygy(const Representation& m) {
  ProjectiveCover pc = projective_cover(m);
  return kernel(pc.pi, pc.cover);
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  require_same(m, n);
  const AlgebraPtr& alg = m.algebra();
  const std::size_t nv = alg->num_vertices();
  HomSpace hs{m, n, {}};
  if (m.is_zero() || n.is_zero()) return hs;
  MinimalPresentation mp = minimal_presentation(m);
  const auto& v0 = mp.top.vertices;
  std::vector<std::size_t> off(v0.size() + 1, 0);
  for (std::size_t i = 0; i < v0.size(); ++i) off[i + 1] = off[i] + n.dim(v0[i]);
  std::size_t rows = 0;
  for (auto w : mp.p1) rows += n.dim(w);
  Matrix sys(rows, off.back());
  std::size_t r0 = 0;
  for (std::size_t j = 0; j < mp.p1.size(); ++j) {
    for (std::size_t i = 0; i < v0.size(); ++i)
      if (!mp.relation[j][i].empty()) sys.set_block(r0, off[i], n.element_matrix(mp.relation[j][i], mp.p1[j], v0[i]));
    r0 += n.dim(mp.p1[j]);
  }
  auto sols = nullspace_basis(sys);
  if (sols.empty()) return hs;

  // f_x = Y_x * s_x where Y_x maps the basis paths of P0(x) into N(x) and s_x is a section of pi_x.
  std::vector<Matrix> section(nv);
  for (std::size_t x = 0; x < nv; ++x)
    section[x] = m.dim(x) == 0 ? Matrix(mp.top.cover.dim(x), 0) : right_inverse(mp.top.pi.components[x]);
  std::vector<std::vector<std::pair<std::size_t, Matrix>>> paths(nv);  // (summand, N(q))
  for (std::size_t x = 0; x < nv; ++x) {
    if (m.dim(x) == 0) continue;
    for (std::size_t i = 0; i < v0.size(); ++i)
      for (std::size_t b : alg->basis_between(x, v0[i])) paths[x].emplace_back(i, n.basis_matrix(b));
  }
  for (const auto& y : sols) {
    ModuleMap f;
    for (std::size_t x = 0; x < nv; ++x) {
      Matrix yx(n.dim(x), paths[x].size());
      for (std::size_t c = 0; c < paths[x].size(); ++c) {
        const auto& [i, nq] = paths[x][c];
        for (std::size_t r = 0; r < n.dim(x); ++r) {
          Rational s = 0;
          for (std::size_t k = 0; k < nq.cols(); ++k) s += nq(r, k) * y[off[i] + k];
          yx(r, c) = s;
        }
      }
      f.components.push_back(m.dim(x) == 0 ? Matrix(n.dim(x), 0) : yx * section[x]);
    }
    hs.basis.push_back(std::move(f));
  }
  return hs;
}

HomSpace hom_space_direct(const Representation& m, const Representation& n) {
  require_same(m, n);
  const Quiver& q = m.algebra()->quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  std::size_t rows = 0;
  for (const auto& ar : q.arrows()) rows += n.dim(ar.source) * m.dim(ar.target);
  Matrix sys(rows, off.back());
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t x = ar.source, y = ar.target;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    // (f_x M_a - N_a f_y)(r, c) = 0
    for (std::size_t r = 0; r < n.dim(x); ++r)
      for (std::size_t c = 0; c < m.dim(y); ++c) {
        std::size_t row = r0 + r * m.dim(y) + c;
        for (std::size_t k = 0; k < m.dim(x); ++k)
          if (sgn(ma(k, c)) != 0) sys(row, off[x] + r * m.dim(x) + k) += ma(k, c);
        for (std::size_t k = 0; k < n.dim(y); ++k)
          if (sgn(na(r, k)) != 0) sys(row, off[y] + k * m.dim(y) + c) -= na(r, k);
      }
    r0 += n.dim(x) * m.dim(y);
  }
  HomSpace hs{m, n, {}};
  for (const auto& s : nullspace_basis(sys)) {
    ModuleMap f;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix c(n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t k = 0; k < m.dim(v); ++k) c(r, k) = s[off[v] + r * m.dim(v) + k];
      f.components.push_back(std::move(c));
    }
    hs.basis.push_back(std::move(f));
  }
  return hs;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).dim(); }

bool is_projective(const Representation& m) {
  auto top = top_dims(m);
  std::size_t cover = 0;
  for (std::size_t v = 0; v < top.size(); ++v)
    if (top[v]) {
      std::size_t pv = 0;
      for (std::size_t x = 0; x < top.size(); ++x) pv += m.algebra()->basis_between(x, v).size();
      cover += top[v] * pv;
    }
  return cover == m.total_dim();
}

bool is_injective(const Representation& m) { return is_projective(dual(m)); }

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (!same_algebra(m, n) || m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return identity_map(m);
  HomSpace hs = hom_space(m, n);
  if (hs.basis.empty()) return std::nullopt;
  auto invertible = [&](const ModuleMap& f) {
    for (std::size_t v = 0; v < f.components.size(); ++v)
      if (rank(f.components[v]) != m.dim(v)) return false;
    return true;
  };
  for (const auto& f : hs.basis)
    if (invertible(f)) return f;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-7, 7);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vector c(hs.basis.size());
    for (auto& x : c) x = coeff(rng);
    ModuleMap f = combine(hs.basis, c);
    if (invertible(f)) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

Representation tau(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  MinimalPresentation mp = minimal_presentation(m);
  if (mp.p1.empty()) return Representation::zero(alg);
  std::vector<Representation> src, dst;
  for (auto w : mp.p1) src.push_back(injective_at(alg, w));
  for (auto v : mp.top.vertices) dst.push_back(injective_at(alg, v));
  Representation i1 = direct_sum(src);
  Representation i0 = dst.empty() ? Representation::zero(alg) : direct_sum(dst);
  const std::size_t nv = alg->num_vertices();
  ModuleMap nu;
  for (std::size_t x = 0; x < nv; ++x) {
    Matrix c(i0.dim(x), i1.dim(x));
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < mp.top.vertices.size(); ++i) {
      const auto& rbasis = alg->basis_between(mp.top.vertices[i], x);
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < mp.p1.size(); ++j) {
        const auto& cbasis = alg->basis_between(mp.p1[j], x);
        // Left multiplication by the relation entry, paths v_i -> x into paths w_j -> x, transposed.
        if (!mp.relation[j][i].empty())
          for (std::size_t k = 0; k < rbasis.size(); ++k)
            for (const auto& [b, coef] : alg->multiply(mp.relation[j][i], {{rbasis[k], Rational(1)}}))
              c(r0 + k, c0 + alg->local_index(b)) += coef;
        c0 += cbasis.size();
      }
      r0 += rbasis.size();
    }
    nu.components.push_back(std::move(c));
  }
  return kernel(nu, i1).module;
}

Representation tau_inv(const Representation& m) {
  Representation t = tau(dual(m));
  return dual(t);
}

std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t bound) {
  Representation x = m;
  for (std::size_t k = 0;; ++k) {
    if (is_projective(x)) return k;
    if (k == bound) return std::nullopt;
    x = syzygy(x).module;
  }
}

std::optional<std::size_t> injective_dimension(const Representation& m, std::size_t bound) {
  return projective_dimension(dual(m), bound);
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  require_same(m, n);
  MinimalPresentation mp = minimal_presentation(m);
  std::size_t p0 = 0;
  for (auto v : mp.top.vertices) p0 += n.dim(v);
  return hom_dim(mp.omega.module, n) + hom_dim(m, n) - p0;
}

Representation restrict_module(const Representation& m, const AlgebraPtr& sub) {
  const Quiver& big = m.algebra()->quiver();
  const Quiver& q = sub->quiver();
  std::vector<std::size_t> dims;
  for (const auto& name : q.vertex_names()) dims.push_back(m.dim(big.vertex_index(name)));
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.push_back(m.map(big.arrow_index(ar.name)));
  return Representation(sub, std::move(dims), std::move(maps));
}

Representation extend_module(const Representation& m, const AlgebraPtr& big) {
  const Quiver& small = m.algebra()->quiver();
  const Quiver& q = big->quiver();
  std::vector<std::size_t> dims;
  for (const auto& name : q.vertex_names()) {
    auto v = small.find_vertex(name);
    dims.push_back(v ? m.dim(*v) : 0);
  }
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) {
    auto a = small.find_arrow(ar.name);
    maps.push_back(a ? m.map(*a) : Matrix(dims[ar.source], dims[ar.target]));
  }
  return Representation(big, std::move(dims), std::move(maps));
}

}  // namespace qc
