#include <Eigen/Dense>

#include <random>

#include "doctest.h"
#include "quivercover/linalg.hpp"

using namespace qc;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, double zero_rate) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::bernoulli_distribution z(zero_rate);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) ? 0 : d(rng);
  return m;
}

// Floating point rank of a small integer matrix; reliable for entries this size.
std::size_t eigen_rank(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  }

  TEST_CASE("rank agrees with a floating point oracle") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix m = random_matrix(rng, r, c, -3, 3, 0.4);
      CHECK(rank(m) == eigen_rank(m));
    }
  }

  TEST_CASE("parallel and serial kernels agree") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
      Matrix m = random_matrix(rng, 3 + rng() % 12, 3 + rng() % 12, -5, 5, 0.3);
      CHECK(rank(m) == serial::rank(m));
      Echelon a = rref(m), b = serial::rref(m);
      CHECK(a.pivots == b.pivots);
      CHECK(a.reduced == b.reduced);
    }
  }

  TEST_CASE("rank nullity and nullspace") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
      Matrix m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 8, -2, 2, 0.5);
      auto null = nullspace_basis(m);
      CHECK(rank(m) + null.size() == m.cols());
      for (const auto& v : null) {
        Vector w = m.apply(v);
        for (const auto& x : w) CHECK(is_zero(x));
      }
    }
  }

  TEST_CASE("solve and inverse") {
    Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    auto x = solve(a, {3, 2});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    Matrix s = Matrix::from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(inverse(s));
    CHECK_FALSE(solve(s, {1, 0}));
  }

  TEST_CASE("rref is reduced") {
    Matrix m = Matrix::from_rows({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
    Echelon e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced(0, 0) == 1);
    CHECK(e.reduced(0, 2) == -1);
    CHECK(e.reduced(1, 2) == 2);
    CHECK(e.reduced.row(2) == Vector(3));
  }

  TEST_CASE("empty shapes") {
    CHECK(rank(Matrix(0, 4)) == 0);
    CHECK(nullspace_basis(Matrix(0, 3)).size() == 3);
    CHECK(rank(Matrix(3, 0)) == 0);
  }
}
