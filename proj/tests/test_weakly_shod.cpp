#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "quivercover/build_cover.hpp"
#include "quivercover/hochschild.hpp"
#include "quivercover/weakly_shod.hpp"

using namespace qc;

namespace {

// Edge multiplicities between distinct vertices, sorted.
std::vector<std::size_t> edge_multiplicities(const Multigraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m;
  for (const auto& e : g.edges) ++m[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  std::vector<std::size_t> out;
  for (const auto& [k, c] : m) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("weakly_shod") {
  TEST_CASE("orbit graph of the radical square zero example") {
    auto a = fixture_algebra("ex3_9.qp");
    OrbitGraphReport r = orbit_graph_recursive(a);
    CHECK(r.graph.vertices.size() == 6);
    CHECK(r.graph.edges.size() == 7);
    CHECK(r.pi1_rank == 2);
    CHECK(edge_multiplicities(r.graph) == std::vector<std::size_t>{1, 1, 1, 1, 3});
    CHECK_FALSE(r.peels.empty());
    CHECK(r.peels.front().vertex_name == "6");
  }

  TEST_CASE("peel vertex is a maximal sink") {
    auto a = fixture_algebra("ex3_9.qp");
    PfReport pf = compute_pf(a, recursion_knit_options());
    REQUIRE_FALSE(pf.projectives.empty());
    auto v = choose_peel_vertex(a, pf);
    REQUIRE(v);
    CHECK(a->quiver().arrows_out(*v).empty());
    CHECK(std::find(pf.maximal.begin(), pf.maximal.end(), *v) != pf.maximal.end());
  }

  TEST_CASE("concealed and hereditary cases have empty P^f") {
    CHECK(compute_pf(fixture_algebra("kronecker.qp"), recursion_knit_options()).quasi_tilted_branch());
    CHECK(compute_pf(fixture_algebra("a3_sink.qp"), recursion_knit_options()).quasi_tilted_branch());
    // the projective-injective P_3 of linear A3 lies after an injective
    PfReport a3 = compute_pf(fixture_algebra("a3.qp"), recursion_knit_options());
    CHECK(a3.projectives == std::vector<std::size_t>{2});
  }

  TEST_CASE("peels") {
    auto sink = fixture_algebra("a3_sink.qp");
    PeelStep s = peel(sink, 2);
    CHECK(s.components.size() == 2);
    CHECK(s.summands.size() == 2);
    CHECK(s.separating);

    auto k = fixture_algebra("kronecker.qp");
    PeelStep t = peel(k, 1);
    REQUIRE(t.summands.size() == 1);
    CHECK(t.summands[0].multiplicity == 2);
    CHECK_FALSE(t.separating);

    CHECK_THROWS_AS(peel(k, 0), std::invalid_argument);
    CHECK(component_algebra(s, 0)->num_vertices() == 1);
  }

  TEST_CASE("knitted and recursive orbit graphs agree") {
    for (const char* f : {"a2.qp", "a4.qp", "d4.qp", "kronecker.qp", "a3_rad2.qp", "a3_sink.qp", "kronecker_ext.qp",
                          "b5.qp", "ex3_9.qp"}) {
      CAPTURE(f);
      OrbitGraphReport r = orbit_graph_both(fixture_algebra(f));
      CHECK(r.provenance == "both-agree");
    }
  }

  TEST_CASE("tree iff HH1 vanishes") {
    for (const char* f : {"a2.qp", "a3.qp", "a4.qp", "a5.qp", "kronecker.qp", "a3_rad2.qp", "kronecker_ext.qp",
                          "b5.qp", "ex3_9.qp"}) {
      CAPTURE(f);
      auto a = fixture_algebra(f);
      CHECK(orbit_graph_recursive(a).is_tree == (hh1_dim(*a) == 0));
    }
  }

  TEST_CASE("simply connected verdict") {
    SimplyConnectedReport r = simply_connected_verdict(fixture_algebra("a2.qp"));
    CHECK(r.simply_connected);
    CHECK(r.consistent);
    SimplyConnectedReport e = simply_connected_verdict(fixture_algebra("ex3_9.qp"));
    CHECK_FALSE(e.simply_connected);
    CHECK(e.pi1_rank == 2);
    CHECK_THROWS_AS(simply_connected_verdict(fixture_algebra("kronecker.qp")), MissingPrerequisite);
    CHECK_THROWS_AS(simply_connected_verdict(fixture_algebra("dual_numbers.qp")), MissingPrerequisite);
  }

  TEST_CASE("peel lemmas") {
    LemmaReport ex = check_lemmas(fixture_algebra("ex3_9.qp"));
    CHECK(ex.holds());
    CHECK_FALSE(ex.separating);
    LemmaReport sink = check_lemmas(fixture_algebra("a3_sink.qp"), 2);
    CHECK(sink.separating);
    CHECK(sink.holds());
    CHECK(sink.hh1_a == 0);
    LemmaReport kr = check_lemmas(fixture_algebra("kronecker_ext.qp"), 3);
    CHECK(kr.holds());
    CHECK(kr.hh1_a != 0);
  }

  TEST_CASE("predecessors of the peeled projective live over B") {
    auto a = fixture_algebra("ex3_9.qp");
    ConnectingReport c = connecting_component(a, recursion_knit_options());
    const ARFragment& f = c.components.at(0);
    auto pm = f.find(projective_at(a, 5));
    REQUIRE(pm);
    CHECK(predecessors_are_b_modules(f, *pm, 5));
  }

  TEST_CASE("peel trace") {
    OrbitGraphReport r = orbit_graph_recursive(fixture_algebra("ex3_9.qp"));
    auto j = nlohmann::json::parse(peel_trace_json(r.peels));
    REQUIRE(j.is_array());
    CHECK(j.size() == r.peels.size());
    CHECK(j[0]["vertex"] == "6");
  }

  TEST_CASE("weighted covers") {
    auto sq = fixture_algebra("commutative_square.qp");
    CHECK_THROWS_AS(weighted_cover(sq, {1, 0, 0, 0}, 2), std::invalid_argument);
    CoverBuild c = weighted_cover(sq, {1, 0, 0, 1}, 2);
    CHECK(c.total->num_vertices() == 8);
    CHECK(check_galois(c.functor, c.action).ok());
    // the commutativity relation kills the only cycle, so the cover splits
    CHECK_FALSE(c.connected);
  }

  TEST_CASE("finite quotient of the covering for the Kronecker algebra") {
    auto k = fixture_algebra("kronecker.qp");
    CoverBuild c = build_A_tilde(k, parse_quotient("Z/2: 1"));
    CHECK(c.generators.size() == 1);
    CHECK(c.connected);
    CHECK(check_galois(c.functor, c.action).ok());
    CoveringFixture ref = load_covering(fixture("a3_tilde.cov"));
    CHECK(quiver_isomorphic(c.total->quiver(), ref.functor.total->quiver()));
    CHECK_THROWS_AS(build_A_tilde(k, parse_quotient("Z/2: 1 1")), std::invalid_argument);
    CoverBuild trivial = build_A_tilde(k, parse_quotient("1"));
    CHECK(trivial.total->quiver() == k->quiver());
  }

  TEST_CASE("finite quotient of the covering for the radical square zero example") {
    auto a = fixture_algebra("ex3_9.qp");
    CoverBuild c = build_A_tilde(a, parse_quotient("Z/2: 0 1"));
    REQUIRE(c.generators.size() == 2);
    CHECK(c.connected);
    CHECK(check_galois(c.functor, c.action).ok());
    for (std::size_t v = 0; v < c.total->num_vertices(); ++v)
      CHECK(is_isomorphic(push_down(c.functor, projective_at(c.total, v)), projective_at(a, v % a->num_vertices())));
  }
}
