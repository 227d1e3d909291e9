#include "a3_tilde.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "quivercover/build_cover.hpp"
#include "quivercover/covering.hpp"

using namespace qc;

namespace {

using Dims = std::vector<std::size_t>;

const CoveringFixture& a3_tilde() {
  static const CoveringFixture c = load_covering(fixture("a3_tilde.cov"));
  return c;
}

const Representation& named(const CoveringFixture& c, const std::string& name) {
  for (const auto& m : c.modules)
    if (m.name == name) return m.module;
  throw std::invalid_argument(name);
}

}  // namespace

TEST_SUITE("galois_covering") {
  TEST_CASE("four-cycle over the Kronecker algebra is Galois") {
    const auto& c = a3_tilde();
    CHECK(c.action.order() == 2);
    Diagnostics d = check_galois(c.functor, c.action);
    CHECK_MESSAGE(d.ok(), d.summary());
    CHECK(check_galois(identity_functor(c.functor.base), trivial_action(c.functor.base)).ok());
  }

  TEST_CASE("failing fixtures name the failing condition") {
    CoveringFixture doubled = load_covering(fixture("doubled_a2.cov"));
    Diagnostics d = check_galois(doubled.functor, doubled.action);
    CHECK_FALSE(d.ok());
    for (const auto& ch : d.checks) CHECK(ch.passed == (ch.condition != "transitive on fibres"));

    CoveringFixture collapse = load_covering(fixture("collapse.cov"));
    Diagnostics f = check_covering_functor(collapse.functor);
    CHECK_FALSE(f.ok());
    std::size_t failed = 0;
    for (const auto& ch : f.checks)
      if (!ch.passed) {
        ++failed;
        CHECK(ch.condition.find("bijective") != std::string::npos);
        CHECK_FALSE(ch.witness.empty());
      }
    CHECK(failed == 2);
  }

  TEST_CASE("push-down of projectives") {
    const auto& c = a3_tilde();
    const AlgebraPtr &e = c.functor.total, &b = c.functor.base;
    for (std::size_t v = 0; v < e->num_vertices(); ++v) {
      Representation p = push_down(c.functor, projective_at(e, v));
      CHECK(is_isomorphic(p, projective_at(b, c.functor.object_map[v])));
      Representation i = push_down(c.functor, injective_at(e, v));
      CHECK(is_isomorphic(i, injective_at(b, c.functor.object_map[v])));
    }
  }

  TEST_CASE("pull-up of the regular module") {
    const auto& c = a3_tilde();
    Representation r = named(c, "regular");
    Representation up = pull_up(c.functor, r);
    CHECK(up.dims() == Dims{1, 1, 1, 1});
    CHECK(is_indecomposable(up));
    CHECK(stabilizer(c.action, up).size() == 2);
    FirstKindResult fk = is_first_kind(c.functor, r);
    CHECK(fk.verdict == FirstKind::no);
    CHECK(to_string(fk.verdict) == "not-first-kind");
    // push-down of the pull-up is the sum over the group
    CHECK(push_down(c.functor, up).dims() == Dims{2, 2});
  }

  TEST_CASE("first-kind modules have lifts") {
    const auto& c = a3_tilde();
    FirstKindResult fk = is_first_kind(c.functor, named(c, "p2"));
    CHECK(fk.verdict == FirstKind::yes);
    REQUIRE(fk.lift);
    CHECK(is_isomorphic(push_down(c.functor, *fk.lift), named(c, "p2")));
  }

  TEST_CASE("twist and stabilizers") {
    const auto& c = a3_tilde();
    Representation p = projective_at(c.functor.total, 1);
    Representation g = twist(c.action, 1, p);
    CHECK_FALSE(is_isomorphic(g, p));
    CHECK(is_isomorphic(twist(c.action, 1, g), p));
    CHECK(stabilizer(c.action, p).size() == 1);
  }

  TEST_CASE("covering property on the first postprojectives") {
    const auto& c = a3_tilde();
    auto ms = first_postprojectives(c.functor.total, 6);
    REQUIRE(ms.size() == 6);
    for (const auto& m : ms)
      for (const auto& n : ms) {
        CoveringPropertyCheck k = covering_property(c.functor, c.action, m, n);
        CHECK(k.hom_base == k.hom_total);
      }
  }

  TEST_CASE("push-down preserves dimension and homological dimensions") {
    const auto& c = a3_tilde();
    for (const auto& m : a3_tilde_modules(c.functor.total, 5)) {
      Representation x = push_down(c.functor, m);
      CHECK(x.total_dim() == m.total_dim());
      CHECK(projective_dimension(x, 4) == projective_dimension(m, 4));
      CHECK(injective_dimension(x, 4) == injective_dimension(m, 4));
    }
  }

  TEST_CASE("push-down commutes with duality") {
    const auto& c = a3_tilde();
    CoveringFunctor op = opposite_functor(c.functor);
    for (const auto& m : first_postprojectives(c.functor.total, 5))
      CHECK(is_isomorphic(dual(push_down(c.functor, m)), push_down(op, dual(m))));
  }

  TEST_CASE("tau commutes with push-down") {
    const auto& c = a3_tilde();
    std::size_t agreed = 0;
    for (const auto& m : first_postprojectives(c.functor.total, 10)) {
      if (is_projective(m)) continue;
      TauReport r = check_tau_commutation(c.functor, m);
      CHECK(r.hypotheses);
      CHECK(r.agree);
      agreed += r.agree;
    }
    CHECK(agreed >= 5);
  }

  TEST_CASE("sections and retractions are reflected") {
    const auto& c = a3_tilde();
    const AlgebraPtr& e = c.functor.total;
    Representation p = projective_at(e, 1);
    SubModule rad = radical(p);
    SectionReport s = check_section_retraction_reflection(c.functor, rad.inclusion, rad.module, p);
    CHECK(s.agree());
    CHECK_FALSE(s.section);
    ModuleMap id = identity_map(p);
    SectionReport t = check_section_retraction_reflection(c.functor, id, p, p);
    CHECK(t.section);
    CHECK(t.pushed_retraction);
  }

  TEST_CASE("orbit category") {
    const auto& c = a3_tilde();
    QuotientCategory q = quotient_presentation(c.action);
    CHECK(q.base->dim() == 4);
    CHECK(quiver_isomorphic(q.base->quiver(), c.functor.base->quiver()));
    CHECK(check_galois(q.functor, c.action).ok());
  }

  TEST_CASE("labelling push-downs") {
    const auto& c = a3_tilde();
    std::vector<Representation> total{projective_at(c.functor.total, 0), named(c, "band")};
    std::vector<Representation> base{projective_at(c.functor.base, 0), projective_at(c.functor.base, 1)};
    auto labels = label_push_downs(c.functor, total, base);
    CHECK(labels[0] == std::optional<std::size_t>(0));
    CHECK_FALSE(labels[1]);
  }
}
