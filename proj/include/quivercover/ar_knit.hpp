#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivercover/decompose.hpp"
#include "quivercover/repr.hpp"
#include "quivercover/trans_quiver.hpp"

namespace qc {

struct AlmostSplitSequence {
  Representation start;   // tau X
  Representation middle;  // E
  Representation end;     // X
  ModuleMap phi;          // start -> middle
  ModuleMap theta;        // middle -> end
  std::vector<Summand> middle_summands;
};

struct SequenceCheck {
  bool exact = false;
  bool non_split = false;
  bool factorization = false;  // every non-retraction from a tested module factors through theta
  std::size_t tested_modules = 0;
  std::string failure;
  bool ok() const { return exact && non_split && factorization; }
};

// Pushout of the minimal presentation along a socle element of Ext^1(X, tau X).
AlmostSplitSequence almost_split_ending_at(const Representation& x, const DecomposeOptions& opts = {});
SequenceCheck verify_almost_split(const AlmostSplitSequence& s, const std::vector<Representation>& test_modules);

struct ARVertex {
  Representation module;
  std::string name;
  bool projective = false;
  bool injective = false;
  std::optional<std::size_t> tau, tau_inv;
  bool preds_known = false;
  bool succs_known = false;
  std::size_t orbit = 0;
};

struct ARArrow {
  std::size_t source = 0, target = 0, multiplicity = 1;
};

struct Mesh {
  std::size_t start = 0, end = 0;
  std::vector<std::pair<std::size_t, std::size_t>> middle;  // (vertex, multiplicity)
  SequenceCheck check;
};

struct KnitOptions {
  std::size_t steps = 64;  // completed meshes
  bool stop_when_stabilized = false;
  std::size_t max_module_dim = 0;  // 0: unlimited
  bool verify_meshes = true;
  std::uint64_t seed = 0;
};

struct ARFragment {
  AlgebraPtr algebra;
  std::vector<ARVertex> vertices;
  std::vector<ARArrow> arrows;
  std::vector<Mesh> meshes;
  bool complete = false;           // every vertex has known predecessors and successors
  bool budget_exhausted = false;
  bool stabilized = false;         // stopped by the orbit heuristic
  bool dimension_capped = false;

  std::optional<std::size_t> find(const Representation& m, std::uint64_t seed = 0) const;
  std::size_t multiplicity(std::size_t source, std::size_t target) const;
  bool contains_projective() const;
  bool contains_injective() const;
  std::vector<Representation> modules() const;
  TranslationQuiver translation_quiver() const;
};

ARFragment knit_component(const AlgebraPtr& alg, const std::vector<Representation>& seeds,
                          const KnitOptions& opts = {});

struct ConnectingReport {
  std::vector<ARFragment> components;  // one, or the postprojective and preinjective pieces
  bool concealed = false;
  std::vector<std::size_t> projectives, injectives;  // vertices of the algebra whose P / I lie in the reported pieces
};

// Throws std::runtime_error if no component containing both a projective and an injective is found
// and the projectives and injectives do not split into two components.
ConnectingReport connecting_component(const AlgebraPtr& alg, const KnitOptions& opts = {});

struct WeaklyShodCertificate {
  std::size_t bound = 0;  // longest injective-to-projective path, in arrows
  std::vector<std::size_t> witness;
};
// Throws std::runtime_error("oriented cycle ...") if the fragment has a directed cycle.
WeaklyShodCertificate certify_weakly_shod(const ARFragment& f);
bool has_oriented_cycle(const ARFragment& f);

// Left part: vertices all of whose predecessors (including themselves) have pd <= 1.
// Requires a complete fragment of a representation-finite algebra.
std::vector<std::size_t> left_part(const ARFragment& f);
std::vector<std::size_t> right_part(const ARFragment& f);
bool is_quasi_tilted_by_left_part(const ARFragment& f);

std::string to_dot(const ARFragment& f, const std::string& name = "Gamma");
std::string fragment_json(const ARFragment& f);

}  // namespace qc
