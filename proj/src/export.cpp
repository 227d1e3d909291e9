#include "quivercover/export.hpp"

#include <cstdio>

namespace qc {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

ojson graph_json(const Multigraph& g) {
  ojson j;
  j["vertices"] = g.vertices;
  j["edges"] = ojson::array();
  for (const auto& e : g.edges) j["edges"].push_back({g.vertices[e.u], g.vertices[e.v]});
  return j;
}

ojson diagnostics_json(const Diagnostics& d) {
  ojson j;
  j["ok"] = d.ok();
  j["checks"] = ojson::array();
  for (const auto& c : d.checks) {
    ojson cj;
    cj["condition"] = c.condition;
    cj["passed"] = c.passed;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

ojson module_json(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  ojson j;
  j["dims"] = m.dims();
  j["maps"] = ojson::object();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Matrix& x = m.map(a);
    if (x.is_zero()) continue;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < x.rows(); ++i) {
      ojson row = ojson::array();
      for (std::size_t k = 0; k < x.cols(); ++k) row.push_back(to_string(x(i, k)));
      rows.push_back(std::move(row));
    }
    j["maps"][q.arrow(a).name] = std::move(rows);
  }
  return j;
}

ojson presentation_json(const Presentation& p) {
  const Quiver& q = p.quiver();
  ojson j;
  j["vertices"] = q.vertex_names();
  j["arrows"] = ojson::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  j["relations"] = ojson::array();
  for (const auto& r : p.relations()) j["relations"].push_back(relation_to_string(q, r));
  if (!p.flags().empty()) j["flags"] = p.flags();
  return j;
}

}  // namespace qc
