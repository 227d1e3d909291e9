#include "quivercover/hochschild.hpp"

#include <algorithm>

namespace qc {

namespace {

struct Unknown {
  std::size_t arrow, basis;
};

std::vector<Unknown> derivation_unknowns(const Algebra& alg) {
  std::vector<Unknown> out;
  const Quiver& q = alg.quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    for (std::size_t b : alg.basis_between(q.arrow(a).source, q.arrow(a).target)) out.push_back({a, b});
  return out;
}

Vector coords(const Algebra& alg, const Element& e, std::size_t x, std::size_t y) {
  Vector v(alg.basis_between(x, y).size());
  for (const auto& [i, c] : e) v[alg.local_index(i)] = c;
  return v;
}

Derivation unit_derivation(const Algebra& alg, const Unknown& u) {
  Derivation d;
  d.images.assign(alg.quiver().num_arrows(), {});
  d.images[u.arrow] = {{u.basis, Rational(1)}};
  return d;
}

// Column j: the values on all relations of the j-th unit derivation.
Matrix relation_system(const Algebra& alg, const std::vector<Unknown>& unknowns) {
  const auto& rels = alg.presentation().relations();
  std::vector<std::size_t> offset;
  std::size_t rows = 0;
  for (const auto& r : rels) {
    offset.push_back(rows);
    rows += alg.basis_between(r.source, r.target).size();
  }
  Matrix m(rows, unknowns.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(unknowns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    Derivation d = unit_derivation(alg, unknowns[static_cast<std::size_t>(j)]);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const Relation& r = rels[k];
      Element value;
      for (const auto& t : r.terms) value = add(value, scale(apply_derivation(alg, d, r.source, t.arrows), t.coeff));
      Vector v = coords(alg, value, r.source, r.target);
      for (std::size_t i = 0; i < v.size(); ++i) m(offset[k] + i, static_cast<std::size_t>(j)) = v[i];
    }
  }
  return m;
}

std::vector<std::size_t> loop_basis(const Algebra& alg) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < alg.num_vertices(); ++v)
    for (std::size_t b : alg.basis_between(v, v)) out.push_back(b);
  return out;
}

Derivation inner(const Algebra& alg, std::size_t x) {
  const Quiver& q = alg.quiver();
  Derivation d;
  Element ex{{x, Rational(1)}};
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    Element ea{{alg.arrow_element(a), Rational(1)}};
    d.images.push_back(add(alg.multiply(ex, ea), scale(alg.multiply(ea, ex), Rational(-1))));
  }
  return d;
}

Vector flatten_derivation(const Algebra& alg, const Derivation& d) {
  const Quiver& q = alg.quiver();
  Vector out;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    Vector v = coords(alg, d.images[a], q.arrow(a).source, q.arrow(a).target);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::size_t inner_rank(const Algebra& alg, std::vector<Derivation>* keep) {
  std::vector<Vector> cols;
  std::size_t len = derivation_unknowns(alg).size();
  for (std::size_t x : loop_basis(alg)) {
    Derivation d = inner(alg, x);
    cols.push_back(flatten_derivation(alg, d));
    if (keep) keep->push_back(std::move(d));
  }
  if (cols.empty() || len == 0) return 0;
  return rank(Matrix::from_columns(cols, len));
}

}  // namespace

Element apply_derivation(const Algebra& alg, const Derivation& d, std::size_t source,
                         const std::vector<std::size_t>& arrows) {
  const Quiver& q = alg.quiver();
  Element out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (d.images[arrows[i]].empty()) continue;
    Element left = alg.reduce(source, {arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(i)});
    Element right = alg.reduce(q.arrow(arrows[i]).target,
                               {arrows.begin() + static_cast<std::ptrdiff_t>(i) + 1, arrows.end()});
    out = add(out, alg.multiply(alg.multiply(left, d.images[arrows[i]]), right));
  }
  return out;
}

DerivationSpace derivation_space(const Algebra& alg) {
  DerivationSpace s;
  auto unknowns = derivation_unknowns(alg);
  Matrix sys = relation_system(alg, unknowns);
  std::vector<Vector> null;
  if (sys.rows() == 0) {
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      Vector v(unknowns.size());
      v[j] = 1;
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace_basis(sys);
  }
  for (const auto& v : null) {
    Derivation d;
    d.images.assign(alg.quiver().num_arrows(), {});
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (!is_zero(v[j])) d.images[unknowns[j].arrow] = add(d.images[unknowns[j].arrow], {{unknowns[j].basis, v[j]}});
    s.basis.push_back(std::move(d));
  }
  s.inner_dim = inner_rank(alg, &s.inner);
  return s;
}

std::size_t hh0_dim(const Algebra& alg) {
  // Center elements commute with the idempotents, so they live in the sum of the e_v A e_v.
  auto loops = loop_basis(alg);
  return loops.size() - inner_rank(alg, nullptr);
}

std::size_t hh1_dim(const Algebra& alg) {
  auto unknowns = derivation_unknowns(alg);
  Matrix sys = relation_system(alg, unknowns);
  std::size_t der = unknowns.size() - (sys.rows() ? rank(sys) : 0);
  return der - inner_rank(alg, nullptr);
}

std::size_t hh0_dim(const Presentation& p) { return hh0_dim(*Algebra::create(p)); }
std::size_t hh1_dim(const Presentation& p) { return hh1_dim(*Algebra::create(p)); }

SeparatingConsistency hh1_separating_consistency(std::size_t hh1_a, const std::vector<std::size_t>& hh1_b_components,
                                                 bool separating) {
  SeparatingConsistency c;
  c.hh1_a_zero = hh1_a == 0;
  c.hh1_b_zero = std::all_of(hh1_b_components.begin(), hh1_b_components.end(), [](std::size_t h) { return h == 0; });
  c.separating = separating;
  return c;
}

}  // namespace qc
