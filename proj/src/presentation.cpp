#include "quivercover/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '\'' || u >= 0x80;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), name_char);
}

}  // namespace

std::size_t Quiver::add_vertex(std::string name) {
  require(valid_name(name), "invalid vertex name '" + name + "'");
  require(!vertex_lookup_.count(name), "duplicate vertex '" + name + "'");
  vertex_lookup_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  require(valid_name(name), "invalid arrow name '" + name + "'");
  require(!arrow_lookup_.count(name), "duplicate arrow '" + name + "'");
  require(source < vertices_.size() && target < vertices_.size(), "arrow '" + name + "' has undeclared endpoint");
  std::size_t id = arrows_.size();
  arrow_lookup_.emplace(name, id);
  arrows_.push_back({std::move(name), source, target});
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_lookup_.find(name);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  auto v = find_vertex(name);
  require(v.has_value(), "unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  auto a = find_arrow(name);
  require(a.has_value(), "unknown arrow '" + std::string(name) + "'");
  return *a;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool path_less(const Quiver& q, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string& x = q.arrow(a[k]).name;
    const std::string& y = q.arrow(b[k]).name;
    if (x != y) return x < y;
  }
  return false;
}

Relation normalize_relation(const Quiver& q, std::vector<Term> terms) {
  require(!terms.empty(), "relation without terms");
  Relation r;
  bool first = true;
  for (const auto& t : terms) {
    require(t.arrows.size() >= 2, "relation path of length < 2 makes the ideal non-admissible");
    for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
      require(q.arrow(t.arrows[k]).target == q.arrow(t.arrows[k + 1]).source,
              "path " + path_to_string(q, t.arrows) + " does not compose");
    std::size_t s = q.arrow(t.arrows.front()).source, e = q.arrow(t.arrows.back()).target;
    if (first) {
      r.source = s;
      r.target = e;
      first = false;
    }
    require(s == r.source && e == r.target, "relation paths are not parallel");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return path_less(q, b.arrows, a.arrows); });
  for (auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().arrows == t.arrows)
      r.terms.back().coeff += t.coeff;
    else
      r.terms.push_back(std::move(t));
  }
  r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(), [](const Term& t) { return sgn(t.coeff) == 0; }),
                r.terms.end());
  require(!r.terms.empty(), "relation reduces to zero");
  const Rational lead = r.terms.front().coeff;
  for (auto& t : r.terms) t.coeff /= lead;
  return r;
}

Presentation::Presentation(Quiver quiver, std::vector<Relation> relations, std::map<std::string, std::string> flags)
    : quiver_(std::move(quiver)), flags_(std::move(flags)) {
  for (auto& r : relations) {
    Relation n = normalize_relation(quiver_, std::move(r.terms));
    if (std::find(relations_.begin(), relations_.end(), n) == relations_.end()) relations_.push_back(std::move(n));
  }
}

std::optional<std::string> Presentation::flag(const std::string& key) const {
  auto it = flags_.find(key);
  if (it == flags_.end()) return std::nullopt;
  return it->second;
}

bool Presentation::flag_is_true(const std::string& key) const {
  auto v = flag(key);
  return v && (*v == "true" || *v == "yes" || *v == "1");
}

bool Presentation::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const Relation& r) { return r.is_monomial(); });
}

std::string path_to_string(const Quiver& q, const std::vector<std::size_t>& arrows) {
  std::string s;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (k) s += '.';
    s += q.arrow(arrows[k]).name;
  }
  return s;
}

std::string relation_to_string(const Quiver& q, const Relation& r) {
  std::string s;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const Term& t = r.terms[k];
    Rational c = t.coeff;
    if (k > 0) {
      s += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    } else if (sgn(c) < 0) {
      s += "-";
      c = abs(c);
    }
    if (c != 1) s += to_string(c) + "*";
    s += path_to_string(q, t.arrows);
  }
  return s;
}

namespace {

struct Cursor {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, pos + 1, msg); }
  void skip_ws() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < line.size() && line[pos] == c;
  }
  void expect(std::string_view tok) {
    skip_ws();
    if (line.substr(pos, tok.size()) != tok) fail("expected '" + std::string(tok) + "'");
    pos += tok.size();
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && name_char(line[pos])) ++pos;
    if (pos == start) fail("expected a name");
    return std::string(line.substr(start, pos - start));
  }
  std::string rest() {
    skip_ws();
    std::string r(line.substr(pos));
    pos = line.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
};

std::vector<Term> parse_terms(Cursor& c, const Quiver& q) {
  std::vector<Term> terms;
  bool first = true;
  while (!c.done()) {
    bool negative = false;
    bool had_sign = false;
    while (c.peek('+') || c.peek('-')) {
      negative ^= c.line[c.pos] == '-';
      ++c.pos;
      had_sign = true;
    }
    if (!first && !had_sign) c.fail("expected '+' or '-' between terms");
    first = false;
    c.skip_ws();
    Rational coeff = 1;
    if (c.pos < c.line.size() && std::isdigit(static_cast<unsigned char>(c.line[c.pos]))) {
      std::size_t start = c.pos;
      while (c.pos < c.line.size() &&
             (std::isdigit(static_cast<unsigned char>(c.line[c.pos])) || c.line[c.pos] == '/'))
        ++c.pos;
      std::size_t numpos = start;
      try {
        coeff = parse_rational(c.line.substr(start, c.pos - start));
      } catch (const std::invalid_argument& e) {
        c.pos = numpos;
        c.fail(e.what());
      }
      c.expect("*");
    }
    if (negative) coeff = -coeff;
    Term t;
    t.coeff = coeff;
    while (true) {
      std::size_t at = c.pos;
      std::string a = c.name();
      auto id = q.find_arrow(a);
      if (!id) {
        c.pos = at;
        c.skip_ws();
        c.fail("unknown arrow '" + a + "'");
      }
      t.arrows.push_back(*id);
      if (c.pos < c.line.size() && c.line[c.pos] == '.') {
        ++c.pos;
        continue;
      }
      break;
    }
    if (sgn(t.coeff) == 0) c.fail("zero coefficient");
    terms.push_back(std::move(t));
  }
  if (terms.empty()) c.fail("empty relation");
  return terms;
}

}  // namespace

std::vector<Term> parse_linear_combination(std::string_view text, const Quiver& q) {
  Cursor c{text, 0, 1};
  return parse_terms(c, q);
}

Presentation parse_presentation(std::string_view text) {
  Quiver q;
  std::vector<std::pair<std::size_t, std::vector<Term>>> raw;
  std::map<std::string, std::string> flags;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c{line, 0, line_no};
    if (c.done()) {
      if (end == text.size()) break;
      continue;
    }
    std::string kw = c.name();
    try {
      if (kw == "vertex") {
        std::string v = c.name();
        if (!c.done()) c.fail("trailing input after vertex name");
        try {
          q.add_vertex(v);
        } catch (const std::invalid_argument& e) {
          c.fail(e.what());
        }
      } else if (kw == "arrow") {
        std::string a = c.name();
        c.expect(":");
        std::string s = c.name();
        c.expect("->");
        std::string t = c.name();
        if (!c.done()) c.fail("trailing input after arrow");
        auto sv = q.find_vertex(s), tv = q.find_vertex(t);
        if (!sv) c.fail("undeclared vertex '" + s + "'");
        if (!tv) c.fail("undeclared vertex '" + t + "'");
        try {
          q.add_arrow(a, *sv, *tv);
        } catch (const std::invalid_argument& e) {
          c.fail(e.what());
        }
      } else if (kw == "relation") {
        raw.emplace_back(line_no, parse_terms(c, q));
      } else if (kw == "flag") {
        std::string body = c.rest();
        auto eq = body.find('=');
        if (eq == std::string::npos || eq == 0) c.fail("flag must be key=value");
        flags[body.substr(0, eq)] = body.substr(eq + 1);
      } else {
        c.pos = 0;
        c.fail("unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    }
    if (end == text.size()) break;
  }
  std::vector<Relation> rels;
  for (auto& [ln, terms] : raw) {
    try {
      rels.push_back(normalize_relation(q, std::move(terms)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, 1, e.what());
    }
  }
  return Presentation(std::move(q), std::move(rels), std::move(flags));
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  const Quiver& q = p.quiver();
  for (const auto& v : q.vertex_names()) os << "vertex " << v << "\n";
  for (const auto& a : q.arrows())
    os << "arrow " << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << "\n";
  for (const auto& r : p.relations()) os << "relation " << relation_to_string(q, r) << "\n";
  for (const auto& [k, v] : p.flags()) os << "flag " << k << "=" << v << "\n";
  return os.str();
}

Presentation radical_square_zero(const Quiver& q) {
  std::vector<Relation> rels;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    for (std::size_t b : q.arrows_out(q.arrow(a).target)) {
      Relation r;
      r.terms.push_back({Rational(1), {a, b}});
      rels.push_back(std::move(r));
    }
  return Presentation(q, std::move(rels));
}

Presentation opposite(const Presentation& p) {
  const Quiver& q = p.quiver();
  Quiver op;
  for (const auto& v : q.vertex_names()) op.add_vertex(v);
  for (const auto& a : q.arrows()) op.add_arrow(a.name, a.target, a.source);
  std::vector<Relation> rels;
  for (const auto& r : p.relations()) {
    Relation o;
    for (const auto& t : r.terms) o.terms.push_back({t.coeff, {t.arrows.rbegin(), t.arrows.rend()}});
    rels.push_back(std::move(o));
  }
  return Presentation(std::move(op), std::move(rels), p.flags());
}

Presentation restrict_to_vertices(const Presentation& p, const std::vector<std::size_t>& keep) {
  const Quiver& q = p.quiver();
  std::vector<std::ptrdiff_t> remap(q.num_vertices(), -1);
  Quiver sub;
  for (std::size_t v : keep) remap[v] = static_cast<std::ptrdiff_t>(sub.add_vertex(q.vertex_name(v)));
  std::vector<std::ptrdiff_t> arrow_remap(q.num_arrows(), -1);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (remap[ar.source] >= 0 && remap[ar.target] >= 0)
      arrow_remap[a] = static_cast<std::ptrdiff_t>(
          sub.add_arrow(ar.name, static_cast<std::size_t>(remap[ar.source]), static_cast<std::size_t>(remap[ar.target])));
  }
  std::vector<Relation> rels;
  for (const auto& r : p.relations()) {
    Relation n;
    for (const auto& t : r.terms) {
      bool inside = std::all_of(t.arrows.begin(), t.arrows.end(), [&](std::size_t a) { return arrow_remap[a] >= 0; });
      if (!inside) continue;
      Term nt{t.coeff, {}};
      for (auto a : t.arrows) nt.arrows.push_back(static_cast<std::size_t>(arrow_remap[a]));
      n.terms.push_back(std::move(nt));
    }
    if (!n.terms.empty()) rels.push_back(std::move(n));
  }
  return Presentation(std::move(sub), std::move(rels), p.flags());
}

Presentation disjoint_union(const std::vector<Presentation>& parts) {
  Quiver q;
  std::vector<Relation> rels;
  for (const auto& part : parts) {
    const Quiver& pq = part.quiver();
    std::size_t voff = q.num_vertices(), aoff = q.num_arrows();
    for (const auto& v : pq.vertex_names()) q.add_vertex(v);
    for (const auto& a : pq.arrows()) q.add_arrow(a.name, a.source + voff, a.target + voff);
    for (const auto& r : part.relations()) {
      Relation n;
      for (const auto& t : r.terms) {
        Term nt{t.coeff, t.arrows};
        for (auto& a : nt.arrows) a += aoff;
        n.terms.push_back(std::move(nt));
      }
      rels.push_back(std::move(n));
    }
  }
  return Presentation(std::move(q), std::move(rels));
}

std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
  std::vector<std::size_t> parent(q.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows()) {
    auto x = find(a.source), y = find(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  return out;
}

}  // namespace qc
