#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivercover/algebra.hpp"
#include "quivercover/linalg.hpp"

namespace qc {

// A right module as a contravariant representation of the bound quiver.
//
// For an arrow a: x -> y the stored matrix is the map M(y) -> M(x), of shape dim M(x) x dim M(y),
// so that M(a.b) = M(a) * M(b). With this convention the projective P_v has basis the paths
// ending at v: in the algebra with arrows 5 -> 6 tripled, rad P_6 is S_5^3.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps, bool validate = true);
  static Representation zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  bool is_zero() const { return total_dim() == 0; }

  // Action of an arrow word starting at `source`: shape dim M(source) x dim M(target).
  Matrix path_matrix(std::size_t source, const std::vector<std::size_t>& arrows) const;
  Matrix basis_matrix(std::size_t basis_index) const;
  // Element supported on paths x -> y.
  Matrix element_matrix(const Element& e, std::size_t x, std::size_t y) const;

  std::string dim_vector_string() const;
  // Throws std::invalid_argument on a shape error or a relation that does not vanish.
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

// A morphism f: M -> N, one matrix dim N(v) x dim M(v) per vertex.
struct ModuleMap {
  std::vector<Matrix> components;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const Representation& m);
ModuleMap zero_map(const Representation& m, const Representation& n);
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const ModuleMap& f, const Rational& s);
ModuleMap combine(const std::vector<ModuleMap>& basis, const Vector& coeffs);
bool is_homomorphism(const ModuleMap& f, const Representation& m, const Representation& n);
bool is_zero_map(const ModuleMap& f);
// Flattened coordinates of a map (vertex blocks row-major), for linear-algebra on Hom spaces.
Vector flatten(const ModuleMap& f);

struct HomSpace {
  Representation source, target;
  std::vector<ModuleMap> basis;
  std::size_t dim() const { return basis.size(); }
};

Representation projective_at(const AlgebraPtr& alg, std::size_t v);
Representation injective_at(const AlgebraPtr& alg, std::size_t v);
Representation simple_at(const AlgebraPtr& alg, std::size_t v);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> inclusions, projections;
};
DirectSum direct_sum_with_maps(const std::vector<Representation>& parts);
Representation direct_sum(const std::vector<Representation>& parts);

// D M over the opposite algebra (all matrices transposed).
Representation dual(const Representation& m);
ModuleMap dual_map(const ModuleMap& f);

struct SubModule {
  Representation module;
  ModuleMap inclusion;
};
struct QuotientModule {
  Representation module;
  ModuleMap projection;
  std::vector<Matrix> sections;  // per vertex, right inverse of the projection
};

// Columns of spans[v] span a subspace U(v); the family must be closed under the arrow maps.
SubModule submodule(const Representation& m, const std::vector<Matrix>& spans);
QuotientModule quotient(const Representation& m, const std::vector<Matrix>& spans);
SubModule kernel(const ModuleMap& f, const Representation& m);
SubModule image(const ModuleMap& f, const Representation& n);
QuotientModule cokernel(const ModuleMap& f, const Representation& n);
SubModule radical(const Representation& m);
SubModule socle(const Representation& m);
std::vector<std::size_t> top_dims(const Representation& m);

struct ProjectiveCover {
  std::vector<std::size_t> vertices;  // P0 = sum of P_{vertices[i]}
  std::vector<Vector> generators;     // generator i lies in M(vertices[i])
  Representation cover;
  ModuleMap pi;
};
ProjectiveCover projective_cover(const Representation& m);

// P1 -> P0 -> M -> 0 with P0 the projective cover of M and P1 the projective cover of the kernel.
// relation[j][i] is the path combination from p1[j] to p0[i] giving the j-th kernel generator.
struct MinimalPresentation {
  ProjectiveCover top;
  SubModule omega;  // kernel of top.pi, included in top.cover
  std::vector<std::size_t> p1;
  std::vector<std::vector<Element>> relation;
};
MinimalPresentation minimal_presentation(const Representation& m);
SubModule syzygy(const Representation& m);

// Hom through a minimal presentation of the source.
HomSpace hom_space(const Representation& m, const Representation& n);
// Hom as the nullspace of the full commutation system; independent reference route.
HomSpace hom_space_direct(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n, std::uint64_t seed = 0);
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0);

// tau = D Tr; zero for projective input. Additive on direct sums.
Representation tau(const Representation& m);
Representation tau_inv(const Representation& m);

// nullopt when the dimension exceeds `bound`.
std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t bound);
std::optional<std::size_t> injective_dimension(const Representation& m, std::size_t bound);
std::size_t ext1_dim(const Representation& m, const Representation& n);

// Modules over full subcategories matched by vertex and arrow names.
Representation restrict_module(const Representation& m, const AlgebraPtr& sub);
Representation extend_module(const Representation& m, const AlgebraPtr& big);

bool same_algebra(const Representation& m, const Representation& n);

}  // namespace qc
