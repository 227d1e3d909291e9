#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/trans_quiver.hpp"

using namespace qc;

namespace {

// Reduced edge words of length <= r from `base`, counted by walking darts without backtracking.
std::size_t reduced_words(const Multigraph& g, std::size_t base, std::size_t r) {
  struct Dart {
    std::size_t from, to, edge;
    bool forward;
  };
  std::vector<Dart> darts;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    darts.push_back({g.edges[e].u, g.edges[e].v, e, true});
    darts.push_back({g.edges[e].v, g.edges[e].u, e, false});
  }
  std::size_t total = 1;
  std::vector<std::pair<std::size_t, long>> frontier{{base, -1}};  // (vertex, last dart)
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::pair<std::size_t, long>> next;
    for (auto [v, last] : frontier)
      for (std::size_t d = 0; d < darts.size(); ++d) {
        if (darts[d].from != v) continue;
        if (last >= 0 && darts[d].edge == darts[last].edge && darts[d].forward != darts[last].forward) continue;
        next.emplace_back(darts[d].to, static_cast<long>(d));
      }
    total += next.size();
    frontier = std::move(next);
  }
  return total;
}

Multigraph random_connected(std::mt19937& rng) {
  Multigraph g;
  std::size_t n = 1 + rng() % 6;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(rng() % i, i);
  std::size_t extra = rng() % 4;
  for (std::size_t k = 0; k < extra; ++k) g.add_edge(rng() % n, rng() % n);
  return g;
}

// AR quiver of A2: P1 -> P2 -> S2 with tau S2 = P1, copied `sheets` times.
TranslationQuiver a2_component(std::size_t sheets) {
  TranslationQuiver tq;
  for (std::size_t s = 0; s < sheets; ++s) {
    std::string suf = s ? std::string(s, '\'') : "";
    std::size_t p1 = tq.add_vertex("P1" + suf, true, false);
    std::size_t p2 = tq.add_vertex("P2" + suf, true, true);
    std::size_t s2 = tq.add_vertex("S2" + suf, false, true);
    tq.add_arrow(p1, p2);
    tq.add_arrow(p2, s2);
    tq.set_tau(s2, p1);
  }
  return tq;
}

}  // namespace

TEST_SUITE("trans_quiver") {
  TEST_CASE("pi1 ranks") {
    Multigraph loop;
    loop.add_vertex("x");
    loop.add_edge(0, 0);
    CHECK(pi1_rank(loop) == 1);
    Multigraph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_edge(0, 1);
    CHECK(pi1_rank(path) == 0);
    CHECK(is_tree(path));
    path.add_vertex("c");
    CHECK_THROWS_AS(pi1_rank(path), std::invalid_argument);
    CHECK_FALSE(pi1(path).connected);
  }

  TEST_CASE("pi1 rank is invariant under subdivision") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
      Multigraph g = random_connected(rng);
      Multigraph s;
      s.vertices = g.vertices;
      for (const auto& e : g.edges) {
        std::size_t m = s.add_vertex("mid" + std::to_string(s.vertices.size()));
        s.add_edge(e.u, m);
        s.add_edge(m, e.v);
      }
      CHECK(pi1_rank(s) == pi1_rank(g));
    }
  }

  TEST_CASE("hand coded non semi-regular component") {
    TranslationQuiver tq = load_translation_quiver(fixture("ex3_10.tq"));
    OrbitGraph og = orbit_graph(tq);
    CHECK(og.graph.vertices.size() == 6);
    CHECK(og.graph.edges.size() == 8);
    CHECK(pi1_rank(og.graph) == 3);
    std::size_t loops = 0;
    for (const auto& e : og.graph.edges)
      if (e.u == e.v) {
        ++loops;
        CHECK(og.graph.vertices[e.u] == "(S3)");
      }
    CHECK(loops == 1);
    OrbitGraphOptions strict;
    strict.strict = true;
    CHECK_THROWS_AS(orbit_graph(tq, strict), PeriodicOrbitError);
  }

  TEST_CASE("translation quiver validation") {
    CHECK_THROWS(load_translation_quiver(fixture("malformed/tau_on_projective.tq")));
  }

  TEST_CASE("universal cover balls") {
    Multigraph loop = load_graph(fixture("loop.graph"));
    GraphCovering c = universal_cover_graph(loop, 0, 2);
    CHECK(c.total.vertices.size() == 5);
    CHECK_FALSE(has_cycle(c.total));
    CHECK(check_graph_covering(c).ok());

    Multigraph ex = load_graph(fixture("ex3_9_orbit.graph"));
    for (std::size_t r = 0; r <= 3; ++r) {
      GraphCovering b = universal_cover_graph(ex, 0, r);
      CHECK(b.total.vertices.size() == reduced_words(ex, 0, r));
      CHECK_FALSE(has_cycle(b.total));
    }

    Multigraph tree = load_graph(fixture("ex3_9_orbit.graph"));
    tree.edges.resize(5);
    CHECK(isomorphic(universal_cover_graph(tree, 0, 4).total, tree));
  }

  TEST_CASE("universal cover of random multigraphs") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
      Multigraph g = random_connected(rng);
      std::size_t r = rng() % 4;
      GraphCovering c = universal_cover_graph(g, 0, r);
      CHECK_FALSE(has_cycle(c.total));
      CHECK(c.total.vertices.size() == reduced_words(g, 0, r));
      CHECK(check_graph_covering(c).ok());
    }
  }

  TEST_CASE("Galois covering of translation quivers") {
    TranslationQuiver base = a2_component(1), total = a2_component(2);
    std::vector<std::size_t> proj{0, 1, 2, 0, 1, 2};
    std::vector<Permutation> z2{{0, 1, 2, 3, 4, 5}, {3, 4, 5, 0, 1, 2}};
    Diagnostics d = check_tq_galois(total, base, proj, z2);
    // the total space has two components, so only connectedness fails
    for (const auto& c : d.checks)
      if (c.condition.find("connected") == std::string::npos) CHECK_MESSAGE(c.passed, c.condition);
    CHECK(check_tq_covering(total, base, proj).ok());

    std::vector<Permutation> not_free{{0, 1, 2}, {0, 1, 2}};
    Diagnostics bad = check_tq_galois(base, base, {0, 1, 2}, not_free);
    CHECK_FALSE(bad.ok());

    TQQuotient q = quotient_tq(total, z2);
    CHECK(q.quiver.num_vertices() == 3);
    CHECK(isomorphic(orbit_graph(q.quiver).graph, orbit_graph(base).graph));
    CHECK_THROWS(quotient_tq(base, not_free));
  }

  TEST_CASE("dot export") {
    Multigraph g = load_graph(fixture("loop.graph"));
    CHECK(to_dot(g).find("graph") != std::string::npos);
    CHECK(to_dot(a2_component(1)).find("digraph") != std::string::npos);
  }
}
