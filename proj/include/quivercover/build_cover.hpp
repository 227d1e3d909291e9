#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quivercover/covering.hpp"
#include "quivercover/group.hpp"
#include "quivercover/weakly_shod.hpp"

namespace qc {

// A Galois covering with group Z/modulus built from arrow weights.
struct CoverBuild {
  AlgebraPtr total;
  CoveringFunctor functor;
  GroupAction action;
  std::size_t modulus = 1;
  std::vector<long long> weights;       // per arrow of the base, in [0, modulus)
  std::vector<std::string> generators;  // free generators of pi1 of the orbit graph, in quotient order
  bool connected = false;
};

// Sheets (h, v) for h in Z/n; arrow a at sheet h goes from (h, s) to (h + w(a), t).
// Throws std::invalid_argument when a relation is not homogeneous.
CoverBuild weighted_cover(const AlgebraPtr& alg, const std::vector<long long>& weights, std::size_t modulus);

// Free generators of pi1 in the order consumed by build_A_tilde.
std::vector<std::string> pi1_generators(const RecursionNode& node);

// Finite quotient of the covering attached to the orbit graph recursion. The quotient images are
// assigned to the generators listed by pi1_generators. Throws UnsupportedBaseCase when a summand of
// some rad P_m has no lift or the radical does not split along the arrows into the peel vertex.
CoverBuild build_A_tilde(const RecursionNode& node, const QuotientSpec& q);
CoverBuild build_A_tilde(const AlgebraPtr& alg, const QuotientSpec& q,
                         const KnitOptions& opts = recursion_knit_options());

// Directed multigraph isomorphism of the underlying quivers.
bool quiver_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace qc
