#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivercover/decompose.hpp"
#include "quivercover/group.hpp"
#include "quivercover/repr.hpp"
#include "quivercover/trans_quiver.hpp"

namespace qc {

// A finite group acting on a bound quiver by vertex and arrow permutations.
// Each group element is stored as one permutation of size n_vertices + n_arrows.
struct GroupAction {
  AlgebraPtr algebra;
  PermutationGroup group;

  std::size_t order() const { return group.elements.size(); }
  std::size_t vertex(std::size_t g, std::size_t v) const { return group.elements[g][v]; }
  std::size_t arrow(std::size_t g, std::size_t a) const;
  std::size_t inverse(std::size_t g) const { return group.group.inv(g); }
  // Vertex part of every element, in group order.
  std::vector<Permutation> vertex_permutations() const;
};

// Throws std::invalid_argument when an arrow permutation does not follow its vertex permutation.
GroupAction make_action(const AlgebraPtr& alg, const std::vector<std::pair<Permutation, Permutation>>& generators);
GroupAction trivial_action(const AlgebraPtr& alg);

// F: E -> B given on objects and on arrows (each arrow goes to an element of B(Fx, Fy)).
struct CoveringFunctor {
  AlgebraPtr total, base;
  std::vector<std::size_t> object_map;
  std::vector<Element> arrow_images;

  // Image of a basis element of E.
  Element apply(std::size_t basis_index) const;
  std::vector<std::size_t> fibre(std::size_t base_vertex) const;
};

// Arrow images given as arrows of B. Throws std::invalid_argument on mismatched endpoints.
CoveringFunctor functor_from_arrow_map(const AlgebraPtr& total, const AlgebraPtr& base,
                                       const std::vector<std::size_t>& object_map,
                                       const std::vector<std::size_t>& arrow_map);
CoveringFunctor identity_functor(const AlgebraPtr& alg);
CoveringFunctor opposite_functor(const CoveringFunctor& f);

Diagnostics check_covering_functor(const CoveringFunctor& f);
Diagnostics check_galois(const CoveringFunctor& f, const GroupAction& act);

Representation push_down(const CoveringFunctor& f, const Representation& m);
ModuleMap push_down(const CoveringFunctor& f, const ModuleMap& map);
Representation pull_up(const CoveringFunctor& f, const Representation& x);

// ^gM = M o g^-1
Representation twist(const GroupAction& act, std::size_t g, const Representation& m);
std::vector<std::size_t> stabilizer(const GroupAction& act, const Representation& m);

enum class FirstKind { yes, no, unknown };
std::string to_string(FirstKind k);

struct FirstKindResult {
  FirstKind verdict = FirstKind::unknown;
  std::optional<Representation> lift;
  std::string detail;
};
FirstKindResult is_first_kind(const CoveringFunctor& f, const Representation& x, const DecomposeOptions& opts = {});

bool is_section(const ModuleMap& f, const Representation& m, const Representation& n);
bool is_retraction(const ModuleMap& f, const Representation& m, const Representation& n);

struct SectionReport {
  bool section = false, retraction = false;
  bool pushed_section = false, pushed_retraction = false;
  bool agree() const { return section == pushed_section && retraction == pushed_retraction; }
};
SectionReport check_section_retraction_reflection(const CoveringFunctor& f, const ModuleMap& map,
                                                  const Representation& m, const Representation& n);

struct TauReport {
  bool hypotheses = true;  // X indecomposable non-projective with indecomposable push-down
  std::string note;
  Representation lhs, rhs;  // F_lambda tau X and tau F_lambda X
  bool agree = false;
};
TauReport check_tau_commutation(const CoveringFunctor& f, const Representation& x);

struct CoveringPropertyCheck {
  std::size_t hom_base = 0;   // dim Hom_B(F M, F N)
  std::size_t hom_total = 0;  // sum over g of dim Hom_E(^gM, N)
  bool holds() const { return hom_base == hom_total; }
};
CoveringPropertyCheck covering_property(const CoveringFunctor& f, const GroupAction& act, const Representation& m,
                                        const Representation& n);

struct QuotientCategory {
  AlgebraPtr base;
  CoveringFunctor functor;
};
// E/G for a free action; vertices and arrows are named after the least member of their orbit.
QuotientCategory quotient_presentation(const GroupAction& act);

// Labels a translation quiver of push-downs: for each module of `total_modules`, the index of the
// isomorphic module in `base_modules`, or nullopt.
std::vector<std::optional<std::size_t>> label_push_downs(const CoveringFunctor& f,
                                                         const std::vector<Representation>& total_modules,
                                                         const std::vector<Representation>& base_modules);

}  // namespace qc
