#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/presentation.hpp"

using namespace qc;

namespace {

// Paths of length <= 2 counted straight from the quiver; exact for the radical square zero fixtures.
std::size_t rad2_dim(const Quiver& q) { return q.num_vertices() + q.num_arrows(); }

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("round trip on every presentation fixture") {
    for (const auto& entry : std::filesystem::directory_iterator(QC_FIXTURE_DIR)) {
      if (entry.path().extension() != ".qp") continue;
      CAPTURE(entry.path().string());
      Presentation p = load_presentation(entry.path().string());
      std::string printed = print_presentation(p);
      Presentation again = parse_presentation(printed);
      CHECK(again == p);
      CHECK(print_presentation(again) == printed);
    }
  }

  TEST_CASE("relations are normalized") {
    Presentation p = parse_presentation("vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a: 1 -> 2\narrow b: 1 -> 3\n"
                                        "arrow c: 2 -> 4\narrow d: 3 -> 4\nrelation 2*b.d - 2*a.c\n");
    REQUIRE(p.relations().size() == 1);
    CHECK(p.relations()[0].terms.front().coeff == 1);
    CHECK(relation_to_string(p.quiver(), p.relations()[0]) == "b.d - a.c");
  }

  TEST_CASE("parse errors carry positions") {
    try {
      load_presentation(fixture("malformed/undeclared_vertex.qp"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_presentation(fixture("malformed/bad_relation.qp")), ParseError);
    try {
      load_presentation(fixture("malformed/unknown_keyword.qp"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("vertices") != std::string::npos);
    }
    CHECK_THROWS(parse_presentation("vertex 1\nvertex 1\n"));
    CHECK_THROWS(parse_presentation("vertex 1\nflag novalue\n"));
  }

  TEST_CASE("flags") {
    Presentation p = load_presentation(fixture("ex3_9.qp"));
    CHECK(p.flag_is_true("weakly_shod"));
    CHECK(p.flag("canonical_type") == std::optional<std::string>("false"));
    CHECK_FALSE(p.flag("missing"));
  }

  TEST_CASE("algebra dimensions") {
    CHECK(fixture_algebra("k.qp")->dim() == 1);
    CHECK(fixture_algebra("kronecker.qp")->dim() == 4);
    auto ex = fixture_algebra("ex3_9.qp");
    CHECK(ex->dim() == rad2_dim(ex->quiver()));
    CHECK(ex->dim() == 13);
    CHECK(fixture_algebra("b5.qp")->dim() == 9);
    // A_n hereditary: one path per pair i <= j
    for (int n = 2; n <= 5; ++n) CHECK(fixture_algebra("a" + std::to_string(n) + ".qp")->dim() == std::size_t(n * (n + 1) / 2));
    CHECK(fixture_algebra("commutative_square.qp")->dim() == 9);
    CHECK(fixture_algebra("dual_numbers.qp")->dim() == 2);
  }

  TEST_CASE("opposite, restriction, components") {
    Presentation p = load_presentation(fixture("commutative_square.qp"));
    CHECK(opposite(opposite(p)) == p);
    Presentation r = restrict_to_vertices(p, {0, 1});
    CHECK(r.num_vertices() == 2);
    CHECK(r.num_arrows() == 1);
    Presentation u = disjoint_union({load_presentation(fixture("a2.qp")), parse_presentation("vertex x\n")});
    CHECK(connected_components(u.quiver()).size() == 2);
    Presentation rz = radical_square_zero(load_presentation(fixture("a3.qp")).quiver());
    CHECK(rz.relations().size() == 1);
    CHECK(Algebra::create(rz)->dim() == 5);
  }

  TEST_CASE("linear combinations") {
    Presentation p = load_presentation(fixture("kronecker.qp"));
    auto t = parse_linear_combination("a - 1/2*b", p.quiver());
    REQUIRE(t.size() == 2);
    CHECK(t[1].coeff == Rational(-1, 2));
    CHECK_THROWS(parse_linear_combination("z", p.quiver()));
  }

  TEST_CASE("block documents") {
    Document d = parse_document(read_file(fixture("a3_tilde.cov")));
    CHECK(d.names == std::vector<std::string>{"total", "base"});
    CHECK(d.maps.size() == 8);
    CHECK(d.generators.size() == 1);
    CHECK(d.module("regular").module.dims() == std::vector<std::size_t>{1, 1});
    CHECK_THROWS(d.module("nope"));
    try {
      parse_document(read_file(fixture("malformed/bad_shape.mod")));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 9);
    }
    CHECK_THROWS_AS(parse_document(read_file(fixture("malformed/unterminated.cov"))), ParseError);
    Presentation first = presentation_from_text(read_file(fixture("a3_tilde.cov")));
    CHECK(first.num_vertices() == 4);
  }

  TEST_CASE("matrix literals") {
    Matrix m = parse_matrix("[[1, 1/2], [0, -3]]", 2, 2);
    CHECK(m(0, 1) == Rational(1, 2));
    CHECK(format_matrix(m) == "[[1,1/2],[0,-3]]");
    CHECK(parse_matrix("[]", 0, 3).cols() == 3);
    CHECK_THROWS(parse_matrix("[[1]]", 2, 1));
    CHECK_THROWS(parse_matrix("[[1,2]", 1, 2));
  }
}
