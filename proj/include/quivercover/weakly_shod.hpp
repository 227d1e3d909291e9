#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivercover/ar_knit.hpp"
#include "quivercover/repr.hpp"
#include "quivercover/trans_quiver.hpp"

namespace qc {

class UnsupportedBaseCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingPrerequisite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Knitting with the orbit stabilization stop and without mesh verification; default below.
KnitOptions recursion_knit_options();

// Projectives that are successors of injectives in the connecting component.
struct PfReport {
  std::vector<std::size_t> projectives;     // algebra vertices, ascending
  std::vector<std::vector<bool>> below;     // below[i][j]: projectives[i] is a strict predecessor of projectives[j]
  std::vector<std::size_t> maximal;         // algebra vertices
  bool fragment_incomplete = false;
  bool concealed = false;
  bool quasi_tilted_branch() const { return projectives.empty(); }
};

PfReport compute_pf(const ARFragment& f);
PfReport compute_pf(const ConnectingReport& r);
PfReport compute_pf(const AlgebraPtr& alg, const KnitOptions& opts);

// Maximal element of P^f with the least vertex name.
std::optional<std::size_t> choose_peel_vertex(const AlgebraPtr& alg, const PfReport& pf);

struct PeelSummand {
  Representation module;  // over the whole of B
  std::size_t multiplicity = 1;
  std::size_t component = 0;
};

struct PeelStep {
  std::size_t vertex = 0;  // x0 in A
  std::string vertex_name;
  AlgebraPtr a, b;  // b is null when A has a single vertex
  std::vector<std::vector<std::size_t>> components;  // vertex lists of B
  std::vector<PeelSummand> summands;                // rad P_m over B
  bool separating = false;
};

// Throws std::invalid_argument unless x0 is a sink without loops.
PeelStep peel(const AlgebraPtr& a, std::size_t vertex);
// Also re-checks that P_vertex is maximal in P^f.
PeelStep peel(const AlgebraPtr& a, std::size_t vertex, const PfReport& pf);

// Component of B as an algebra of its own.
AlgebraPtr component_algebra(const PeelStep& s, std::size_t component);

struct RecursionNode {
  enum class Kind { hereditary_base, peel };
  AlgebraPtr algebra;
  Kind kind = Kind::hereditary_base;
  std::optional<PeelStep> step;
  std::vector<RecursionNode> children;  // one per component of B
  Multigraph graph;
  std::vector<std::vector<Representation>> representatives;  // per graph vertex, modules over `algebra`
  std::vector<std::size_t> summand_orbit;                    // graph vertex of each summand of rad P_m
  std::size_t peel_orbit = 0;
};

RecursionNode recursion_tree(const AlgebraPtr& alg, const KnitOptions& opts = recursion_knit_options());

struct OrbitGraphReport {
  Multigraph graph;
  std::size_t pi1_rank = 0;
  bool is_tree = false;
  std::string provenance;  // knitted, recursive, both-agree, disagree
  std::vector<PeelStep> peels;
  std::vector<std::string> warnings;
};

OrbitGraphReport orbit_graph_recursive(const AlgebraPtr& alg, const KnitOptions& opts = recursion_knit_options());
OrbitGraphReport orbit_graph_knitted(const AlgebraPtr& alg, const KnitOptions& opts = recursion_knit_options());
OrbitGraphReport orbit_graph_both(const AlgebraPtr& alg, const KnitOptions& opts = recursion_knit_options());

struct SimplyConnectedReport {
  bool tree = false;
  std::size_t pi1_rank = 0;
  std::size_t hh1 = 0;
  bool simply_connected = false;
  bool consistent = false;  // tree iff hh1 == 0
};
// Requires the flags weakly_shod=true and canonical_type=false; throws MissingPrerequisite.
SimplyConnectedReport simply_connected_verdict(const AlgebraPtr& alg, const KnitOptions& opts = recursion_knit_options());

struct LemmaReport {
  PeelStep step;
  std::size_t hh1_a = 0;
  std::vector<std::size_t> hh1_b;
  bool tree_a = false;
  std::vector<bool> tree_b;
  bool separating = false;
  bool simply_connected_equivalence = false;  // A s.c. iff (B s.c. and separating)
  bool hh1_equivalence = false;               // HH1(A) = 0 iff (HH1(B) = 0 and separating)
  bool holds() const { return simply_connected_equivalence && hh1_equivalence; }
};
// Peels at `vertex`, or at the chosen maximal element of P^f when none is given.
LemmaReport check_lemmas(const AlgebraPtr& alg, std::optional<std::size_t> vertex = std::nullopt,
                         const KnitOptions& opts = recursion_knit_options());

// Strict predecessors of P_m in the fragment vanish at x0.
bool predecessors_are_b_modules(const ARFragment& f, std::size_t pm_fragment_vertex, std::size_t x0);

std::string peel_trace_json(const std::vector<PeelStep>& peels);

}  // namespace qc
