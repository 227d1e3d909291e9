#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string fixture(const std::string& name) { return std::string(QC_FIXTURE_DIR) + "/" + name; }

Run run(const std::string& args) {
  std::string cmd = std::string(QC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json results(const Run& r) { return nlohmann::json::parse(r.out)["results"]; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info") {
    CHECK(results(run("info " + fixture("k.qp")))["dim"] == 1);
    CHECK(results(run("info " + fixture("kronecker.qp")))["dim"] == 4);
    Run r = run("info " + fixture("ex3_9.qp"));
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "info");
    CHECK(j["seed"] == 0);
    CHECK(j["input_digest"].get<std::string>().size() == 16);
    CHECK(j["results"]["dim"] == 13);
  }

  TEST_CASE("hh") {
    auto j = results(run("hh " + fixture("ex3_9.qp")));
    CHECK(j["hh0"] == 1);
    CHECK(j["hh1"] == 8);
  }

  TEST_CASE("orbit graph") {
    Run r = run("orbit-graph --method both " + fixture("ex3_9.qp"));
    CHECK(r.code == 0);
    auto j = results(r);
    CHECK(j["vertices"] == 6);
    CHECK(j["edges"] == 7);
    CHECK(j["pi1_rank"] == 2);
    CHECK(j["provenance"] == "both-agree");
    CHECK(results(run("orbit-graph --method knit " + fixture("a2.qp")))["is_tree"] == true);
    CHECK(run("orbit-graph --method sideways " + fixture("a2.qp")).code == 1);
  }

  TEST_CASE("simply connected") {
    CHECK(results(run("simply-connected " + fixture("a2.qp")))["simply_connected"] == "yes");
    CHECK(results(run("simply-connected " + fixture("ex3_9.qp")))["simply_connected"] == "no");
    CHECK(run("simply-connected " + fixture("kronecker.qp")).code == 1);
  }

  TEST_CASE("covering checks") {
    CHECK(run("cover-check " + fixture("a3_tilde.cov")).code == 0);
    Run bad = run("cover-check " + fixture("doubled_a2.cov"));
    CHECK(bad.code == 2);
    CHECK(results(bad)["diagnostics"]["ok"] == false);
    CHECK(run("cover-check " + fixture("collapse.cov")).code == 2);
    auto p = results(run("pushdown " + fixture("a3_tilde.cov") + " band"));
    CHECK(p["push_down"]["dims"] == nlohmann::json::array({2, 2}));
    CHECK(p["indecomposable"] == false);
    CHECK(run("pushdown " + fixture("a3_tilde.cov") + " regular").code == 1);
  }

  TEST_CASE("universal cover") {
    auto j = results(run("universal-cover --radius 2 " + fixture("loop.graph")));
    CHECK(j["vertices"] == 5);
    CHECK(j["acyclic"] == true);
    auto t = results(run("universal-cover --radius 2 " + fixture("ex3_10.tq")));
    CHECK(t["base_pi1_rank"] == 3);
  }

  TEST_CASE("build cover output feeds back in") {
    std::string out = (std::filesystem::temp_directory_path() / "qc_cli_cover.qp").string();
    Run r = run("build-cover --quotient \"Z/2: 1\" --cover-out " + out + " " + fixture("kronecker.qp"));
    CHECK(r.code == 0);
    CHECK(results(r)["connected"] == true);
    auto again = results(run("info " + out));
    CHECK(again["dim"] == 8);
    std::filesystem::remove(out);
  }

  TEST_CASE("peel trace and dot files") {
    auto dir = std::filesystem::temp_directory_path();
    std::string trace = (dir / "qc_cli_trace.json").string(), dot = (dir / "qc_cli_ar.dot").string();
    CHECK(run("peel --peel-trace " + trace + " " + fixture("ex3_9.qp")).code == 0);
    CHECK(std::filesystem::file_size(trace) > 0);
    Run ar = run("ar --dot " + dot + " " + fixture("b5.qp"));
    CHECK(ar.code == 0);
    CHECK(results(ar)["vertices"].size() == 9);
    CHECK(std::filesystem::file_size(dot) > 0);
    std::filesystem::remove(trace);
    std::filesystem::remove(dot);
  }

  TEST_CASE("malformed inputs exit with 1") {
    for (const char* f : {"malformed/undeclared_vertex.qp", "malformed/bad_relation.qp", "malformed/unknown_keyword.qp",
                          "malformed/unterminated.cov", "malformed/tau_on_projective.tq", "does_not_exist.qp"}) {
      CAPTURE(f);
      CHECK(run("info " + fixture(f)).code == 1);
    }
    CHECK(run("cover-check " + fixture("malformed/bad_shape.mod")).code == 1);
    CHECK(run("universal-cover " + fixture("malformed/tau_on_projective.tq")).code == 1);
    CHECK(run("").code == 1);
  }

  TEST_CASE("repeated runs are byte identical") {
    for (std::string args : {"orbit-graph " + fixture("ex3_9.qp"), "ar " + fixture("a4.qp"),
                             "build-cover --quotient \"Z/2: 0 1\" " + fixture("ex3_9.qp")}) {
      Run a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
    Run j = run("--jobs 1 hh " + fixture("ex3_9.qp"));
    CHECK(j.out == run("hh " + fixture("ex3_9.qp")).out);
  }
}
