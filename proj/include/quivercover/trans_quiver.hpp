#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivercover/group.hpp"

namespace qc {

struct TQVertex {
  std::string name;
  bool projective = false;
  bool injective = false;
  bool frontier = false;  // neighbourhood not known completely (truncated fragment)
};

// A valued arrow standing for `multiplicity` parallel arrows.
struct TQArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t multiplicity = 1;
};

class TranslationQuiver {
 public:
  std::size_t add_vertex(std::string name, bool projective = false, bool injective = false, bool frontier = false);
  // Adds to the multiplicity of an existing arrow between the same vertices.
  std::size_t add_arrow(std::size_t source, std::size_t target, std::size_t multiplicity = 1);
  void set_tau(std::size_t y, std::size_t x);
  // Explicit polarisation; arrows without an explicit entry use the induced one.
  void set_sigma(std::size_t arrow, std::size_t image);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const TQVertex& vertex(std::size_t v) const { return vertices_.at(v); }
  TQVertex& vertex(std::size_t v) { return vertices_.at(v); }
  const TQArrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<TQArrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> tau(std::size_t v) const { return tau_.at(v); }
  std::optional<std::size_t> tau_inv(std::size_t v) const;
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(std::size_t source, std::size_t target) const;
  // sigma(x -> y) = (tau y -> x) when tau y is defined.
  std::optional<std::size_t> sigma(std::size_t arrow) const;

  // Throws std::invalid_argument when tau is defined on a projective or hits an injective.
  void validate() const;

 private:
  std::vector<TQVertex> vertices_;
  std::vector<TQArrow> arrows_;
  std::vector<std::optional<std::size_t>> tau_;
  std::vector<std::optional<std::size_t>> sigma_;
};

struct MultiEdge {
  std::size_t u = 0, v = 0;
};

// Undirected multigraph; loops and parallel edges allowed.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<MultiEdge> edges;

  std::size_t add_vertex(std::string name) {
    vertices.push_back(std::move(name));
    return vertices.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v) { edges.push_back({u, v}); }
};

std::vector<std::vector<std::size_t>> graph_components(const Multigraph& g);

struct Pi1Report {
  std::size_t rank = 0;  // sum over components
  bool connected = true;
  std::vector<std::size_t> component_ranks;
};
Pi1Report pi1(const Multigraph& g);
// E - V + 1 for a connected graph; throws std::invalid_argument if disconnected.
std::size_t pi1_rank(const Multigraph& g);
bool is_tree(const Multigraph& g);
bool isomorphic(const Multigraph& a, const Multigraph& b);

class PeriodicOrbitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrbitGraphOptions {
  // Reject periodic tau-orbits outright instead of counting one loop per periodic orbit.
  bool strict = false;
};

struct OrbitGraph {
  Multigraph graph;
  std::vector<std::size_t> orbit_of;                 // per translation-quiver vertex
  std::vector<std::vector<std::size_t>> orbit_members;
  std::vector<std::vector<std::size_t>> edge_arrows;  // sigma-chain of each edge (empty for periodic loops)
  std::vector<std::size_t> periodic_orbits;
};

// Vertices are tau-orbits named after their earliest vertex; one edge per sigma-orbit of arrows,
// counted with multiplicity. A periodic orbit whose sigma-chains terminate contributes one loop.
OrbitGraph orbit_graph(const TranslationQuiver& tq, const OrbitGraphOptions& opts = {});

struct Check {
  std::string condition;
  bool passed = true;
  std::string witness;
};

struct Diagnostics {
  std::vector<Check> checks;
  bool ok() const;
  void add(std::string condition, bool passed, std::string witness = {});
  std::string summary() const;
};

// Conditions (a)-(c): local bijectivity on stars, projective/injective marks, commuting with tau.
// Stars of frontier vertices are not compared.
Diagnostics check_tq_covering(const TranslationQuiver& total, const TranslationQuiver& base,
                              const std::vector<std::size_t>& vertex_map);
// Adds (d)-(g): free action, p g = p, the induced quotient map is an isomorphism, total is connected.
// `action` holds the vertex permutation of every group element, the identity first.
Diagnostics check_tq_galois(const TranslationQuiver& total, const TranslationQuiver& base,
                            const std::vector<std::size_t>& vertex_map, const std::vector<Permutation>& action);

struct TQQuotient {
  TranslationQuiver quiver;
  std::vector<std::size_t> projection;
};
// Throws std::invalid_argument for a non-free or non-equivariant action.
TQQuotient quotient_tq(const TranslationQuiver& tq, const std::vector<Permutation>& action);

struct GraphCovering {
  Multigraph total, base;
  std::vector<std::size_t> vertex_map, edge_map;
  std::vector<bool> boundary;  // total vertices whose stars are only required to map injectively
};
Diagnostics check_graph_covering(const GraphCovering& cov);

// Ball of the given radius around `base` in the universal cover; vertices are reduced edge words.
GraphCovering universal_cover_graph(const Multigraph& g, std::size_t base, std::size_t radius);
bool has_cycle(const Multigraph& g);

std::string to_dot(const Multigraph& g, const std::string& name = "G");
std::string to_dot(const TranslationQuiver& tq, const std::string& name = "Gamma");

}  // namespace qc
