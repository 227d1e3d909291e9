#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/hochschild.hpp"

using namespace qc;

namespace {

std::size_t arrows_between(const Quiver& q, std::size_t x, std::size_t y) {
  std::size_t n = 0;
  for (const auto& a : q.arrows()) n += a.source == x && a.target == y;
  return n;
}

// Radical square zero, connected, no oriented cycles: dim HH1 = 1 - |Q0| + |Q1 // Q1|.
std::size_t rad2_formula(const Quiver& q) {
  long s = 1 - static_cast<long>(q.num_vertices());
  for (const auto& a : q.arrows()) s += static_cast<long>(arrows_between(q, a.source, a.target));
  return static_cast<std::size_t>(s);
}

// Connected acyclic quiver without relations: dim HH1 = 1 - |Q0| + sum over arrows of paths parallel to it.
std::size_t hereditary_formula(const Algebra& alg) {
  const Quiver& q = alg.quiver();
  long s = 1 - static_cast<long>(q.num_vertices());
  for (const auto& a : q.arrows()) s += static_cast<long>(alg.basis_between(a.source, a.target).size());
  return static_cast<std::size_t>(s);
}

}  // namespace

TEST_SUITE("hochschild") {
  TEST_CASE("small algebras") {
    auto k = fixture_algebra("k.qp");
    CHECK(hh0_dim(*k) == 1);
    CHECK(hh1_dim(*k) == 0);
    auto d = fixture_algebra("dual_numbers.qp");
    CHECK(hh0_dim(*d) == 2);
    CHECK(hh1_dim(*d) == 1);
    auto sq = fixture_algebra("commutative_square.qp");
    CHECK(hh0_dim(*sq) == 1);
    CHECK(hh1_dim(*sq) == 0);
  }

  TEST_CASE("hereditary algebras match the arrow count") {
    for (const char* f : {"a2.qp", "a3.qp", "a4.qp", "a5.qp", "d4.qp", "kronecker.qp", "wild3.qp"}) {
      CAPTURE(f);
      auto a = fixture_algebra(f);
      CHECK(hh0_dim(*a) == 1);
      CHECK(hh1_dim(*a) == hereditary_formula(*a));
    }
    CHECK(hh1_dim(*fixture_algebra("kronecker.qp")) == 3);
    CHECK(hh1_dim(*fixture_algebra("a4.qp")) == 0);
  }

  TEST_CASE("radical square zero algebras match the parallel arrow count") {
    for (const char* f : {"a3_rad2.qp", "b5.qp", "kronecker_ext.qp", "ex3_9.qp"}) {
      CAPTURE(f);
      auto a = fixture_algebra(f);
      CHECK(hh0_dim(*a) == 1);
      CHECK(hh1_dim(*a) == rad2_formula(a->quiver()));
    }
    CHECK(hh1_dim(*fixture_algebra("ex3_9.qp")) == 8);
  }

  TEST_CASE("centre counts components") {
    Presentation two = disjoint_union({load_presentation(fixture("a2.qp")), parse_presentation("vertex x\n")});
    CHECK(hh0_dim(two) == 2);
  }

  TEST_CASE("derivations satisfy the Leibniz rule") {
    auto a = fixture_algebra("commutative_square.qp");
    DerivationSpace s = derivation_space(*a);
    CHECK(s.basis.size() - s.inner_dim == hh1_dim(*a));
    const Quiver& q = a->quiver();
    for (const auto& d : s.basis)
      for (std::size_t x = 0; x < q.num_arrows(); ++x)
        for (std::size_t y = 0; y < q.num_arrows(); ++y) {
          if (q.arrow(x).target != q.arrow(y).source) continue;
          Element lhs = apply_derivation(*a, d, q.arrow(x).source, {x, y});
          Element ex{{a->arrow_element(x), Rational(1)}}, ey{{a->arrow_element(y), Rational(1)}};
          Element rhs = add(a->multiply(d.images[x], ey), a->multiply(ex, d.images[y]));
          CHECK(add(lhs, scale(rhs, Rational(-1))).empty());
        }
  }

  TEST_CASE("separating consistency") {
    CHECK(hh1_separating_consistency(0, {0, 0}, true).holds());
    CHECK(hh1_separating_consistency(3, {0}, false).holds());
    CHECK_FALSE(hh1_separating_consistency(0, {1}, true).holds());
  }
}
