#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quivercover/repr.hpp"

namespace qc {

// One isomorphism class of summands. inclusions[k] and projections[k] embed the k-th copy of
// `module` into the decomposed module and project onto it.
struct Summand {
  Representation module;
  std::size_t multiplicity = 0;
  std::vector<ModuleMap> inclusions, projections;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 400;  // endomorphisms tried per module before giving up
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& msg, std::vector<Representation> partial)
      : std::runtime_error(msg), partial_(std::move(partial)) {}
  const std::vector<Representation>& partial() const { return partial_; }

 private:
  std::vector<Representation> partial_;
};

// Splits by Fitting decomposition of endomorphisms with rational eigenvalues. Every returned summand
// carries a locality certificate (End modulo its trace radical is one dimensional). Summands are
// sorted by total dimension, then dimension vector.
std::vector<Summand> indecompose(const Representation& m, const DecomposeOptions& opts = {});

// Codimension of the radical of the trace form on End(M); 1 iff End(M) is local with residue field Q.
std::size_t endomorphism_residue_dim(const Representation& m);
bool is_indecomposable(const Representation& m, const DecomposeOptions& opts = {});

ModuleMap inverse_map(const ModuleMap& f);

}  // namespace qc
