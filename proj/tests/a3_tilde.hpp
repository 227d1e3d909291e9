#pragma once

#include <vector>

#include "fixtures.hpp"
#include "quivercover/ar_knit.hpp"
#include "quivercover/covering.hpp"
#include "quivercover/decompose.hpp"

// String module of a walk on the underlying graph: one basis vector per position.
inline qc::Representation string_module(const qc::AlgebraPtr& alg, std::size_t start,
                                        const std::vector<std::pair<std::size_t, bool>>& steps) {
  const qc::Quiver& q = alg->quiver();
  std::vector<std::size_t> vertex{start};
  for (auto [a, forward] : steps) vertex.push_back(forward ? q.arrow(a).target : q.arrow(a).source);
  std::vector<std::size_t> dims(q.num_vertices(), 0), local;
  for (auto v : vertex) local.push_back(dims[v]++);
  std::vector<qc::Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.source], dims[ar.target]);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto [a, forward] = steps[i];
    std::size_t s = forward ? i : i + 1, t = forward ? i + 1 : i;
    maps[a](local[s], local[t]) = 1;
  }
  return qc::Representation(alg, dims, maps);
}

// Indecomposables of the four-cycle up to total dimension max_dim: every reduced walk gives a string
// module, and the primitive band contributes one module per sampled parameter.
inline std::vector<qc::Representation> a3_tilde_modules(const qc::AlgebraPtr& e, std::size_t max_dim) {
  const qc::Quiver& q = e->quiver();
  std::vector<qc::Representation> out;
  auto add = [&](const qc::Representation& m) {
    for (const auto& x : out)
      if (x.dims() == m.dims() && qc::is_isomorphic(x, m)) return;
    out.push_back(m);
  };
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::vector<std::vector<std::pair<std::size_t, bool>>> walks{{}};
    std::vector<std::size_t> ends{v};
    for (std::size_t w = 0; w < walks.size(); ++w) {
      add(string_module(e, v, walks[w]));
      if (walks[w].size() + 1 >= max_dim) continue;
      std::size_t at = ends[w];
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        for (bool fwd : {true, false}) {
          if ((fwd ? q.arrow(a).source : q.arrow(a).target) != at) continue;
          if (!walks[w].empty() && walks[w].back().first == a && walks[w].back().second != fwd) continue;
          auto next = walks[w];
          next.emplace_back(a, fwd);
          walks.push_back(std::move(next));
          ends.push_back(fwd ? q.arrow(a).target : q.arrow(a).source);
        }
    }
  }
  if (q.num_vertices() <= max_dim)
    for (int lambda : {1, 2, -1}) {
      std::vector<std::size_t> dims(q.num_vertices(), 1);
      std::vector<qc::Matrix> maps;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.push_back(qc::Matrix::from_rows({{a == 0 ? lambda : 1}}));
      add(qc::Representation(e, dims, maps));
    }
  return out;
}

// First modules of the postprojective component in knitting order.
inline std::vector<qc::Representation> first_postprojectives(const qc::AlgebraPtr& e, std::size_t count) {
  std::vector<qc::Representation> seeds;
  for (std::size_t v = 0; v < e->num_vertices(); ++v) seeds.push_back(qc::projective_at(e, v));
  qc::KnitOptions o;
  o.steps = 2 * count;
  qc::ARFragment f = qc::knit_component(e, seeds, o);
  std::vector<qc::Representation> out;
  for (const auto& v : f.vertices) {
    if (out.size() == count) break;
    out.push_back(v.module);
  }
  return out;
}
