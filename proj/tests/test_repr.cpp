#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/decompose.hpp"
#include "quivercover/repr.hpp"

using namespace qc;

namespace {

using Dims = std::vector<std::size_t>;

Representation kronecker_regular(const AlgebraPtr& k, const Rational& lambda) {
  return Representation(k, {1, 1}, {Matrix::from_rows({{1}}), Matrix::from_rows({{lambda}})});
}

}  // namespace

TEST_SUITE("repr") {
  TEST_CASE("projectives and injectives of the Kronecker algebra") {
    auto k = fixture_algebra("kronecker.qp");
    // Paths ending at v span P_v; paths starting at v span D(I_v).
    CHECK(projective_at(k, 0).dims() == Dims{1, 0});
    CHECK(projective_at(k, 1).dims() == Dims{2, 1});
    CHECK(injective_at(k, 0).dims() == Dims{1, 2});
    CHECK(injective_at(k, 1).dims() == Dims{0, 1});
    CHECK(is_projective(projective_at(k, 1)));
    CHECK_FALSE(is_projective(simple_at(k, 1)));
    CHECK(is_injective(injective_at(k, 0)));
  }

  TEST_CASE("Hom from a projective evaluates at its vertex") {
    for (const char* f : {"kronecker.qp", "a3_rad2.qp", "commutative_square.qp", "ex3_9.qp"}) {
      auto a = fixture_algebra(f);
      std::vector<Representation> ms;
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        ms.push_back(injective_at(a, v));
        ms.push_back(simple_at(a, v));
        ms.push_back(projective_at(a, v));
      }
      for (std::size_t v = 0; v < a->num_vertices(); ++v)
        for (const auto& m : ms) CHECK(hom_dim(projective_at(a, v), m) == m.dim(v));
    }
  }

  TEST_CASE("module validation") {
    auto a = fixture_algebra("a3_rad2.qp");
    Matrix one = Matrix::from_rows({{1}});
    CHECK_THROWS_AS(Representation(a, {1, 1, 1}, {one, one}), std::invalid_argument);
    CHECK_NOTHROW(Representation(a, {1, 1, 0}, {one, Matrix(1, 0)}));
    CHECK_THROWS_AS(Representation(a, {1, 1, 0}, {Matrix(2, 1), Matrix(1, 0)}), std::invalid_argument);
  }

  TEST_CASE("duality") {
    auto a = fixture_algebra("commutative_square.qp");
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      Representation p = projective_at(a, v);
      CHECK(is_isomorphic(dual(dual(p)), p));
      CHECK(is_isomorphic(dual(p), injective_at(a->opposite(), v)));
      CHECK(dual(simple_at(a, v)).dims() == simple_at(a, v).dims());
    }
  }

  TEST_CASE("homological dimensions on A3 with a zero relation") {
    auto a = fixture_algebra("a3_rad2.qp");
    CHECK(projective_dimension(simple_at(a, 0), 5) == std::optional<std::size_t>(0));
    CHECK(projective_dimension(simple_at(a, 1), 5) == std::optional<std::size_t>(1));
    CHECK(projective_dimension(simple_at(a, 2), 5) == std::optional<std::size_t>(2));
    CHECK(injective_dimension(simple_at(a, 0), 5) == std::optional<std::size_t>(2));
    auto a2 = fixture_algebra("a2.qp");
    CHECK(ext1_dim(simple_at(a2, 1), simple_at(a2, 0)) == 1);
    CHECK(ext1_dim(simple_at(a2, 0), simple_at(a2, 1)) == 0);
  }

  TEST_CASE("tau and its inverse on Kronecker preprojectives") {
    auto k = fixture_algebra("kronecker.qp");
    Representation p1 = projective_at(k, 0), p2 = projective_at(k, 1);
    Representation x = tau_inv(p1), y = tau_inv(p2);
    CHECK(x.dims() == Dims{3, 2});
    CHECK(y.dims() == Dims{4, 3});
    CHECK(is_isomorphic(tau(x), p1));
    CHECK(is_isomorphic(tau(y), p2));
    CHECK(tau(p1).is_zero());
    Representation r = kronecker_regular(k, 2);
    CHECK(is_isomorphic(tau(r), r));
  }

  TEST_CASE("decomposition") {
    auto k = fixture_algebra("kronecker.qp");
    Representation m = direct_sum({projective_at(k, 1), kronecker_regular(k, 1), projective_at(k, 1), simple_at(k, 1)});
    auto parts = indecompose(m);
    std::size_t count = 0;
    for (const auto& s : parts) {
      count += s.multiplicity;
      CHECK(is_indecomposable(s.module));
    }
    CHECK(count == 4);
    CHECK(parts.size() == 3);
    CHECK_FALSE(is_isomorphic(kronecker_regular(k, 1), kronecker_regular(k, 2)));
    CHECK(is_indecomposable(kronecker_regular(k, 0)));
  }

  TEST_CASE("radical, socle and top") {
    auto a = fixture_algebra("ex3_9.qp");
    Representation p6 = projective_at(a, 5);
    CHECK(p6.dims() == Dims{0, 0, 0, 0, 3, 1});
    CHECK(radical(p6).module.dims() == Dims{0, 0, 0, 0, 3, 0});
    CHECK(top_dims(p6) == Dims{0, 0, 0, 0, 0, 1});
    CHECK(socle(p6).module.dims() == Dims{0, 0, 0, 0, 3, 0});
  }
}
