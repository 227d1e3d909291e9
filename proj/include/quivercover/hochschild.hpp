#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quivercover/algebra.hpp"

namespace qc {

// Normalized derivations (zero on idempotents). A derivation is stored by its arrow images:
// images[a] is an element supported on the paths parallel to arrow a.
struct Derivation {
  std::vector<Element> images;
};

struct DerivationSpace {
  std::vector<Derivation> basis;
  std::vector<Derivation> inner;  // spans the inner normalized derivations (may be redundant)
  std::size_t inner_dim = 0;
};

DerivationSpace derivation_space(const Algebra& alg);

// Leibniz extension of a derivation to an arrow word starting at `source`.
Element apply_derivation(const Algebra& alg, const Derivation& d, std::size_t source,
                         const std::vector<std::size_t>& arrows);

std::size_t hh0_dim(const Algebra& alg);
std::size_t hh1_dim(const Algebra& alg);
std::size_t hh0_dim(const Presentation& p);
std::size_t hh1_dim(const Presentation& p);

struct SeparatingConsistency {
  bool hh1_a_zero = false;
  bool hh1_b_zero = false;
  bool separating = false;
  bool holds() const { return hh1_a_zero == (hh1_b_zero && separating); }
};
SeparatingConsistency hh1_separating_consistency(std::size_t hh1_a, const std::vector<std::size_t>& hh1_b_components,
                                                 bool separating);

}  // namespace qc
