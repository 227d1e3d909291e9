#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "a3_tilde.hpp"
#include "fixtures.hpp"
#include "quivercover/build_cover.hpp"
#include "quivercover/hochschild.hpp"
#include "quivercover/linalg.hpp"
#include "quivercover/weakly_shod.hpp"

using namespace qc;

namespace {

using Dims = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Representation> all_projectives(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) out.push_back(projective_at(a, v));
  return out;
}

bool mesh_additive(const ARFragment& f) {
  for (const auto& m : f.meshes) {
    Dims lhs = f.vertices[m.start].module.dims(), rhs(lhs.size(), 0);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += f.vertices[m.end].module.dim(i);
    for (const auto& [v, mult] : m.middle)
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += mult * f.vertices[v].module.dim(i);
    if (lhs != rhs) return false;
  }
  return true;
}

void criterion_1(Verdict& v) {
  auto t0 = Clock::now();
  auto a = fixture_algebra("ex3_9.qp");
  OrbitGraphReport r = orbit_graph_recursive(a);
  double t = seconds_since(t0);
  v.detail << "V=" << r.graph.vertices.size() << " E=" << r.graph.edges.size() << " rank=" << r.pi1_rank << " " << t
           << "s ";
  v.require(r.graph.vertices.size() == 6 && r.graph.edges.size() == 7, "6 vertices and 7 edges");
  v.require(r.pi1_rank == 2, "rank 2");
  v.require(t < 10, "under 10 s");
}

void criterion_2(Verdict& v) {
  auto t0 = Clock::now();
  auto a = fixture_algebra("ex3_9.qp");
  std::size_t h0 = hh0_dim(*a), h1 = hh1_dim(*a);
  double t = seconds_since(t0);
  v.detail << "hh0=" << h0 << " hh1=" << h1 << " " << t << "s ";
  v.require(h0 == 1, "hh0 = 1");
  v.require(h1 == 3, "hh1 = 3");
  v.require(t < 10, "under 10 s");
}

void criterion_3(Verdict& v) {
  auto t0 = Clock::now();
  std::size_t n = 0;
  for (const char* f : {"a2.qp", "a3.qp", "a4.qp", "a5.qp", "kronecker.qp", "ex3_9.qp", "a3_rad2.qp",
                        "kronecker_ext.qp", "b5.qp", "d4.qp"}) {
    auto a = fixture_algebra(f);
    bool tree = orbit_graph_recursive(a).is_tree;
    std::size_t h1 = hh1_dim(*a);
    v.detail << f << ":" << (tree ? "tree" : "cycle") << "/" << h1 << " ";
    v.require(tree == (h1 == 0), f);
    ++n;
  }
  double t = seconds_since(t0);
  v.detail << n << " fixtures " << t << "s ";
  v.require(t < 60, "under 60 s");
}

void criterion_4(Verdict& v) {
  OrbitGraph og = orbit_graph(load_translation_quiver(fixture("ex3_10.tq")));
  std::size_t loops = 0;
  bool loop_at_s3 = false;
  for (const auto& e : og.graph.edges)
    if (e.u == e.v) {
      ++loops;
      loop_at_s3 |= og.graph.vertices[e.u] == "(S3)";
    }
  std::size_t rank = pi1_rank(og.graph);
  v.detail << "V=" << og.graph.vertices.size() << " E=" << og.graph.edges.size() << " loops=" << loops
           << " rank=" << rank << " ";
  v.require(og.graph.vertices.size() == 6 && og.graph.edges.size() == 8, "6 vertices and 8 edges");
  v.require(loops == 1 && loop_at_s3, "one loop at (S3)");
  v.require(rank == 3, "rank 3");
}

void criterion_5(Verdict& v) {
  auto t0 = Clock::now();
  CoveringFixture c = load_covering(fixture("a3_tilde.cov"));
  v.require(check_galois(c.functor, c.action).ok(), "check_galois");
  auto first = first_postprojectives(c.functor.total, 6);
  std::size_t pairs = 0;
  for (const auto& m : first)
    for (const auto& n : first) {
      v.require(covering_property(c.functor, c.action, m, n).holds(), "covering property");
      ++pairs;
    }
  Representation regular;
  for (const auto& m : c.modules)
    if (m.name == "regular") regular = m.module;
  FirstKind k = is_first_kind(c.functor, regular).verdict;
  v.require(k == FirstKind::no, "(Id,Id) is not of the first kind");
  std::size_t agreed = 0;
  for (const auto& m : first_postprojectives(c.functor.total, 12)) {
    if (agreed == 5) break;
    if (is_projective(m)) continue;
    TauReport r = check_tau_commutation(c.functor, m);
    v.require(r.hypotheses && r.agree, "tau commutation on " + m.dim_vector_string());
    agreed += r.agree;
  }
  double t = seconds_since(t0);
  v.detail << "pairs=" << pairs << " (Id,Id)=" << to_string(k) << " tau-agree=" << agreed << " " << t << "s ";
  v.require(pairs == 36, "36 pairs");
  v.require(agreed == 5, "5 non-projective lifts");
  v.require(t < 30, "under 30 s");
}

void criterion_6(Verdict& v) {
  auto b = fixture_algebra("b5.qp");
  ARFragment f = knit_component(b, all_projectives(b));
  std::set<Dims> got, expected;
  for (const auto& x : f.vertices) got.insert(x.module.dims());
  for (std::size_t i = 0; i < 5; ++i) {
    Dims d(5, 0);
    d[i] = 1;
    expected.insert(d);
    if (i + 1 < 5) {
      d[i + 1] = 1;
      expected.insert(d);
    }
  }
  std::size_t ok = 0;
  for (const auto& m : f.meshes) ok += m.check.ok();
  v.detail << "indecomposables=" << f.vertices.size() << " meshes verified " << ok << "/" << f.meshes.size() << " ";
  v.require(f.complete, "complete component");
  v.require(f.vertices.size() == 9 && got == expected, "9 dimension vectors");
  v.require(ok == f.meshes.size() && !f.meshes.empty(), "every mesh almost split");
}

void criterion_7(Verdict& v) {
  for (const char* f : {"ex3_9.qp", "a3_rad2.qp", "kronecker_ext.qp"}) {
    OrbitGraphReport r = orbit_graph_both(fixture_algebra(f));
    v.detail << f << ":" << r.provenance << " ";
    v.require(r.provenance == "both-agree", f);
  }
}

void criterion_8(Verdict& v) {
  auto t0 = Clock::now();
  auto a = fixture_algebra("ex3_9.qp");
  CoverBuild c = build_A_tilde(a, parse_quotient("Z/2: 0 1"));
  v.require(check_galois(c.functor, c.action).ok(), "check_galois on the Z/2 quotient");
  std::vector<std::size_t> hits(a->num_vertices(), 0);
  for (std::size_t x = 0; x < c.total->num_vertices(); ++x) {
    Representation p = push_down(c.functor, projective_at(c.total, x));
    std::size_t matches = 0;
    for (std::size_t u = 0; u < a->num_vertices(); ++u)
      if (is_isomorphic(p, projective_at(a, u))) {
        ++hits[u];
        ++matches;
      }
    v.require(matches == 1, "push-down of a projective is one projective");
  }
  for (auto h : hits) v.require(h == 2, "each projective of A hit once per sheet");
  auto k = fixture_algebra("kronecker.qp");
  CoverBuild kc = build_A_tilde(k, parse_quotient("Z/2: 1"));
  CoveringFixture ref = load_covering(fixture("a3_tilde.cov"));
  bool iso = quiver_isomorphic(kc.total->quiver(), ref.functor.total->quiver());
  v.require(iso && check_galois(kc.functor, kc.action).ok(), "Kronecker quotient is the four-cycle covering");
  double t = seconds_since(t0);
  v.detail << "dim=" << c.total->dim() << " connected=" << c.connected << " kronecker-iso=" << iso << " " << t << "s ";
  v.require(t < 60, "under 60 s");
}

void criterion_9(Verdict& v) {
  struct Case {
    const char* file;
    std::optional<std::size_t> vertex;
  };
  for (const Case& cs : {Case{"ex3_9.qp", std::nullopt}, Case{"a3_sink.qp", 2}, Case{"a3_rad2.qp", 2}}) {
    LemmaReport r = check_lemmas(fixture_algebra(cs.file), cs.vertex);
    v.detail << cs.file << ":sep=" << r.separating << ",hh1=" << r.hh1_a << " ";
    v.require(r.simply_connected_equivalence, std::string(cs.file) + " simple connectedness equivalence");
    v.require(r.hh1_equivalence, std::string(cs.file) + " HH1 equivalence");
    if (std::strcmp(cs.file, "ex3_9.qp")) v.require(r.separating, std::string(cs.file) + " separating");
  }
}

void criterion_10(Verdict& v) {
  std::mt19937 rng(2024);
  std::size_t rn = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? 0 : static_cast<int>(rng() % 7) - 3;
    auto null = nullspace_basis(m);
    bool ok = rank(m) + null.size() == c && serial::rank(m) == rank(m);
    for (const auto& x : null)
      for (const auto& y : m.apply(x)) ok &= is_zero(y);
    rn += ok;
  }
  v.require(rn == 200, "rank-nullity");

  std::size_t acyclic = 0;
  for (int t = 0; t < 50; ++t) {
    Multigraph g;
    std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) g.add_edge(rng() % i, i);
    for (std::size_t k = rng() % 4; k > 0; --k) g.add_edge(rng() % n, rng() % n);
    GraphCovering cov = universal_cover_graph(g, rng() % n, rng() % 4);
    acyclic += !has_cycle(cov.total) && check_graph_covering(cov).ok();
  }
  v.require(acyclic == 50, "universal cover balls acyclic");

  std::size_t fragments = 0;
  for (const char* f : {"a2.qp", "a3.qp", "a4.qp", "a5.qp", "d4.qp", "b5.qp", "a3_rad2.qp", "a3_sink.qp"}) {
    auto a = fixture_algebra(f);
    v.require(mesh_additive(knit_component(a, all_projectives(a))), std::string("mesh additivity ") + f);
    ++fragments;
  }
  for (const char* f : {"ex3_9.qp", "kronecker_ext.qp", "kronecker.qp"}) {
    for (const auto& c : connecting_component(fixture_algebra(f), recursion_knit_options()).components)
      v.require(mesh_additive(c), std::string("mesh additivity ") + f);
    ++fragments;
  }

  CoveringFixture c = load_covering(fixture("a3_tilde.cov"));
  auto modules = a3_tilde_modules(c.functor.total, 6);
  std::size_t good = 0;
  for (const auto& m : modules) {
    Representation x = push_down(c.functor, m);
    good += x.total_dim() == m.total_dim() && projective_dimension(x, 4) == projective_dimension(m, 4) &&
            injective_dimension(x, 4) == injective_dimension(m, 4);
  }
  v.require(good == modules.size(), "push-down dimension and pd/id invariance");
  v.detail << "rank-nullity " << rn << "/200, acyclic " << acyclic << "/50, knitted fixtures " << fragments
           << ", four-cycle modules " << good << "/" << modules.size() << " ";
}

}  // namespace

int main(int argc, char** argv) {
  int n = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") n = std::atoi(argv[i + 1]);
  const std::vector<std::function<void(Verdict&)>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                            criterion_5, criterion_6, criterion_7, criterion_8,
                                                            criterion_9, criterion_10};
  if (n < 1 || n > static_cast<int>(criteria.size())) {
    std::cerr << "usage: acceptance --criterion N (1-" << criteria.size() << ")\n";
    return 1;
  }
  Verdict v;
  try {
    criteria[static_cast<std::size_t>(n - 1)](v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << "exception: " << e.what();
  }
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << v.detail.str() << "\n";
  return v.pass ? 0 : 1;
}
