#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/ar_knit.hpp"

using namespace qc;

namespace {

using Dims = std::vector<std::size_t>;

ARFragment knit_all(const AlgebraPtr& a, const KnitOptions& o = {}) {
  std::vector<Representation> seeds;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) seeds.push_back(projective_at(a, v));
  return knit_component(a, seeds, o);
}

std::set<Dims> dim_vectors(const ARFragment& f) {
  std::set<Dims> out;
  for (const auto& v : f.vertices) out.insert(v.module.dims());
  return out;
}

// Positive roots of A_n: indicator vectors of intervals.
std::set<Dims> intervals(std::size_t n) {
  std::set<Dims> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Dims d(n, 0);
      for (std::size_t k = i; k <= j; ++k) d[k] = 1;
      out.insert(d);
    }
  return out;
}

void check_mesh_additivity(const ARFragment& f) {
  for (const auto& m : f.meshes) {
    Dims lhs = f.vertices[m.start].module.dims(), rhs(lhs.size(), 0);
    const Dims& e = f.vertices[m.end].module.dims();
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += e[i];
    for (const auto& [v, mult] : m.middle)
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += mult * f.vertices[v].module.dim(i);
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_SUITE("ar_knit") {
  TEST_CASE("almost split sequence of A2") {
    auto a = fixture_algebra("a2.qp");
    AlmostSplitSequence s = almost_split_ending_at(simple_at(a, 1));
    CHECK(s.start.dims() == Dims{1, 0});
    CHECK(s.middle.dims() == Dims{1, 1});
    CHECK(verify_almost_split(s, {simple_at(a, 0), simple_at(a, 1), projective_at(a, 1)}).ok());
  }

  TEST_CASE("Dynkin quivers knit to their positive roots") {
    for (std::size_t n = 2; n <= 5; ++n) {
      ARFragment f = knit_all(fixture_algebra("a" + std::to_string(n) + ".qp"));
      CHECK(f.complete);
      CHECK(f.vertices.size() == n * (n + 1) / 2);
      CHECK(dim_vectors(f) == intervals(n));
      check_mesh_additivity(f);
      for (const auto& m : f.meshes) CHECK(m.check.ok());
    }
    ARFragment d4 = knit_all(fixture_algebra("d4.qp"));
    CHECK(d4.complete);
    CHECK(d4.vertices.size() == 12);
    CHECK(dim_vectors(d4).count(Dims{1, 1, 1, 2}) == 1);
  }

  TEST_CASE("radical square zero A5") {
    ARFragment f = knit_all(fixture_algebra("b5.qp"));
    CHECK(f.complete);
    REQUIRE(f.vertices.size() == 9);
    std::set<Dims> expected;
    for (std::size_t i = 0; i < 5; ++i) {
      Dims d(5, 0);
      d[i] = 1;
      expected.insert(d);
      if (i + 1 < 5) {
        d[i + 1] = 1;
        expected.insert(d);
      }
    }
    CHECK(dim_vectors(f) == expected);
    check_mesh_additivity(f);
    for (const auto& m : f.meshes) CHECK(m.check.ok());
    CHECK_FALSE(has_oriented_cycle(f));
  }

  TEST_CASE("Kronecker has no connecting component") {
    KnitOptions o;
    o.stop_when_stabilized = true;
    ConnectingReport r = connecting_component(fixture_algebra("kronecker.qp"), o);
    CHECK(r.concealed);
    CHECK(r.components.size() == 2);
    CHECK(r.components[0].contains_projective());
    CHECK(r.components[1].contains_injective());
  }

  TEST_CASE("weakly shod certificate") {
    KnitOptions o;
    o.stop_when_stabilized = true;
    ConnectingReport r = connecting_component(fixture_algebra("a3_rad2.qp"), o);
    REQUIRE(r.components.size() == 1);
    WeaklyShodCertificate c = certify_weakly_shod(r.components[0]);
    CHECK(c.bound <= r.components[0].vertices.size());
  }

  TEST_CASE("oriented cycle is reported") {
    ARFragment f;
    f.algebra = fixture_algebra("a2.qp");
    f.vertices.resize(2);
    f.vertices[0].name = "X";
    f.vertices[1].name = "Y";
    f.arrows = {{0, 1, 1}, {1, 0, 1}};
    CHECK(has_oriented_cycle(f));
    CHECK_THROWS_WITH_AS(certify_weakly_shod(f), doctest::Contains("oriented cycle"), std::runtime_error);
  }

  TEST_CASE("left part") {
    ARFragment a2 = knit_all(fixture_algebra("a2.qp"));
    CHECK(left_part(a2).size() == 3);
    CHECK(is_quasi_tilted_by_left_part(a2));
    ARFragment z = knit_all(fixture_algebra("a3_rad2.qp"));
    CHECK(is_quasi_tilted_by_left_part(z));
  }

  TEST_CASE("budget flag") {
    KnitOptions o;
    o.steps = 3;
    ARFragment f = knit_all(fixture_algebra("kronecker.qp"), o);
    CHECK(f.budget_exhausted);
    CHECK_FALSE(f.complete);
  }

  TEST_CASE("exports") {
    ARFragment f = knit_all(fixture_algebra("a2.qp"));
    CHECK(to_dot(f).find("digraph") != std::string::npos);
    CHECK(fragment_json(f).find("\"meshes\"") != std::string::npos);
  }
}
