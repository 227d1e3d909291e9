#include "quivercover/fixture_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qc {

namespace {

struct Line {
  std::string text;  // comment stripped
  std::size_t no = 0;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    ++no;
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    out.push_back({std::string(l), no});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) { throw ParseError(line, 1, msg); }

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "expected a count, got '" + s + "'");
  return std::stoul(s);
}

// Block body as a standalone text whose line numbers match the enclosing file.
std::string block_text(const std::vector<Line>& lines, std::size_t from, std::size_t to) {
  std::string out(lines[from].no - 1, '\n');
  for (std::size_t i = from; i < to; ++i) out += lines[i].text + "\n";
  return out;
}

Representation build_module(const AlgebraPtr& alg, const std::vector<Line>& body, std::size_t header_line) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  std::vector<std::optional<std::pair<std::string, std::size_t>>> literal(q.num_arrows());
  for (const auto& l : body) {
    std::string t = trim(l.text);
    if (t.empty()) continue;
    auto w = words(t);
    if (w[0] == "dim") {
      std::string rest = trim(t.substr(3));
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail(l.no, "expected dim <vertex>=<n>");
      std::string v = trim(rest.substr(0, eq));
      auto vi = q.find_vertex(v);
      if (!vi) fail(l.no, "unknown vertex '" + v + "'");
      dims[*vi] = parse_count(trim(rest.substr(eq + 1)), l.no);
    } else if (w[0] == "map") {
      std::string rest = trim(t.substr(3));
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail(l.no, "expected map <arrow> = [[..]]");
      std::string a = trim(rest.substr(0, eq));
      auto ai = q.find_arrow(a);
      if (!ai) fail(l.no, "unknown arrow '" + a + "'");
      if (literal[*ai]) fail(l.no, "arrow '" + a + "' mapped twice");
      literal[*ai] = std::make_pair(trim(rest.substr(eq + 1)), l.no);
    } else {
      fail(l.no, "unknown keyword '" + w[0] + "' in module block");
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    std::size_t r = dims[ar.source], c = dims[ar.target];
    if (!literal[a]) {
      maps.emplace_back(r, c);
      continue;
    }
    try {
      maps.push_back(parse_matrix(literal[a]->first, r, c));
    } catch (const std::invalid_argument& e) {
      fail(literal[a]->second, "arrow '" + ar.name + "': " + e.what());
    }
  }
  try {
    return Representation(alg, dims, maps);
  } catch (const std::invalid_argument& e) {
    fail(header_line, e.what());
  }
}

}  // namespace

std::optional<std::size_t> Document::find_presentation(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

const NamedModule& Document::module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return m;
  throw std::invalid_argument("no module named '" + std::string(name) + "'");
}

bool looks_like_document(std::string_view text) {
  for (const auto& l : split_lines(text)) {
    auto w = words(l.text);
    if (w.empty()) continue;
    return w[0] == "presentation" || w[0] == "module" || w[0] == "group" || w[0] == "map";
  }
  return false;
}

Document parse_document(std::string_view text) {
  auto lines = split_lines(text);
  Document doc;
  std::size_t i = 0;
  auto block_end = [&](std::size_t from, const std::string& what, std::size_t header) {
    for (std::size_t j = from; j < lines.size(); ++j) {
      auto w = words(lines[j].text);
      if (w.size() == 1 && w[0] == "end") return j;
    }
    fail(header, what + " block without 'end'");
  };
  while (i < lines.size()) {
    auto w = words(lines[i].text);
    const std::size_t no = lines[i].no;
    if (w.empty()) {
      ++i;
      continue;
    }
    if (w[0] == "presentation") {
      if (w.size() != 2) fail(no, "expected presentation <name>");
      if (doc.find_presentation(w[1])) fail(no, "duplicate presentation '" + w[1] + "'");
      std::size_t e = block_end(i + 1, "presentation", no);
      Presentation p = parse_presentation(block_text(lines, i + 1, e));
      doc.names.push_back(w[1]);
      doc.algebras.push_back(Algebra::create(p));
      doc.presentations.push_back(std::move(p));
      i = e + 1;
    } else if (w[0] == "module") {
      if (w.size() != 4 || w[2] != "over") fail(no, "expected module <name> over <presentation>");
      auto p = doc.find_presentation(w[3]);
      if (!p) fail(no, "unknown presentation '" + w[3] + "'");
      for (const auto& m : doc.modules)
        if (m.name == w[1]) fail(no, "duplicate module '" + w[1] + "'");
      std::size_t e = block_end(i + 1, "module", no);
      std::vector<Line> body(lines.begin() + static_cast<std::ptrdiff_t>(i + 1),
                             lines.begin() + static_cast<std::ptrdiff_t>(e));
      doc.modules.push_back({w[1], w[3], build_module(doc.algebras[*p], body, no)});
      i = e + 1;
    } else if (w[0] == "map") {
      std::string rest = trim(trim(lines[i].text).substr(3));
      auto arrow = rest.find("->");
      if (arrow == std::string::npos) fail(no, "expected map <x> -> <y>");
      std::string from = trim(rest.substr(0, arrow)), to = trim(rest.substr(arrow + 2));
      if (from.empty() || to.empty()) fail(no, "expected map <x> -> <y>");
      doc.maps.push_back({from, to, no});
      ++i;
    } else if (w[0] == "group") {
      if (w.size() != 1) fail(no, "trailing input after 'group'");
      std::size_t e = block_end(i + 1, "group", no);
      for (std::size_t j = i + 1; j < e; ++j) {
        std::string t = trim(lines[j].text);
        if (t.empty()) continue;
        if (t.rfind("generator", 0) != 0) fail(lines[j].no, "expected generator <cycles>");
        doc.generators.push_back({trim(t.substr(9)), lines[j].no});
      }
      i = e + 1;
    } else {
      fail(no, "unknown keyword '" + w[0] + "'");
    }
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Presentation presentation_from_text(std::string_view text) {
  if (!looks_like_document(text)) return parse_presentation(text);
  Document doc = parse_document(text);
  if (doc.presentations.empty()) throw ParseError(1, 1, "no presentation block");
  return doc.presentations.front();
}

Presentation load_presentation(const std::string& path) { return presentation_from_text(read_file(path)); }

Matrix parse_matrix(std::string_view text, std::size_t rows, std::size_t cols) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "[]") {
    if (rows != 0 && cols != 0) throw std::invalid_argument("empty literal for a " + std::to_string(rows) + "x" +
                                                            std::to_string(cols) + " matrix");
    return Matrix(rows, cols);
  }
  std::vector<std::vector<Rational>> parsed;
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c) throw std::invalid_argument(std::string("expected '") + c + "' in matrix literal");
    ++pos;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<Rational> row;
    while (pos < s.size() && s[pos] != ']') {
      std::size_t end = s.find_first_of(",]", pos);
      if (end == std::string::npos) throw std::invalid_argument("unterminated row");
      row.push_back(parse_rational(s.substr(pos, end - pos)));
      pos = end;
      if (s[pos] == ',') ++pos;
    }
    expect(']');
    parsed.push_back(std::move(row));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos != s.size()) throw std::invalid_argument("trailing input after matrix literal");
  if (parsed.size() != rows)
    throw std::invalid_argument("expected " + std::to_string(rows) + " rows, got " + std::to_string(parsed.size()));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (parsed[i].size() != cols)
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " + std::to_string(parsed[i].size()) +
                                  " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parsed[i][j];
  }
  return m;
}

std::string format_matrix(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

std::string print_module(const std::string& name, const std::string& over, const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::string out = "module " + name + " over " + over + "\n";
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (m.dim(v)) out += "dim " + q.vertex_name(v) + "=" + std::to_string(m.dim(v)) + "\n";
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (!m.map(a).is_zero()) out += "map " + q.arrow(a).name + " = " + format_matrix(m.map(a)) + "\n";
  return out + "end\n";
}

namespace {

// Cycle notation over vertex and arrow names, e.g. "(1 3)(2 4)(a c)(b d)".
std::pair<Permutation, Permutation> parse_generator(const Quiver& q, const GeneratorLine& g) {
  Permutation vp(q.num_vertices()), ap(q.num_arrows());
  for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = i;
  for (std::size_t i = 0; i < ap.size(); ++i) ap[i] = i;
  std::set<std::string> seen;
  std::size_t pos = 0;
  const std::string& s = g.cycles;
  while (true) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    if (s[pos] != '(') fail(g.line, "expected '(' in cycle notation");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) fail(g.line, "unterminated cycle");
    auto names = words(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (names.empty()) continue;
    bool vertices = q.find_vertex(names[0]).has_value();
    std::vector<std::size_t> idx;
    for (const auto& n : names) {
      if (!seen.insert(n).second) fail(g.line, "'" + n + "' appears twice in a generator");
      auto v = q.find_vertex(n);
      auto a = q.find_arrow(n);
      if (v && a) fail(g.line, "'" + n + "' names both a vertex and an arrow");
      if (vertices ? !v : !a) fail(g.line, "cycle mixes vertices and arrows or names an unknown '" + n + "'");
      idx.push_back(vertices ? *v : *a);
    }
    Permutation& p = vertices ? vp : ap;
    for (std::size_t k = 0; k < idx.size(); ++k) p[idx[k]] = idx[(k + 1) % idx.size()];
  }
  return {vp, ap};
}

}  // namespace

CoveringFixture covering_from_document(const Document& doc) {
  if (doc.presentations.size() < 2) throw ParseError(1, 1, "a covering needs two presentation blocks");
  const AlgebraPtr& e = doc.algebras[0];
  const AlgebraPtr& b = doc.algebras[1];
  const Quiver &qe = e->quiver(), &qb = b->quiver();
  std::vector<std::optional<std::size_t>> ob(qe.num_vertices());
  std::vector<std::optional<Element>> ar(qe.num_arrows());
  std::vector<std::size_t> arrow_line(qe.num_arrows(), 0);
  for (const auto& m : doc.maps) {
    if (auto v = qe.find_vertex(m.from)) {
      auto w = qb.find_vertex(m.to);
      if (!w) fail(m.line, "unknown vertex '" + m.to + "' of the base");
      if (ob[*v]) fail(m.line, "vertex '" + m.from + "' mapped twice");
      ob[*v] = *w;
    } else if (auto a = qe.find_arrow(m.from)) {
      if (ar[*a]) fail(m.line, "arrow '" + m.from + "' mapped twice");
      std::vector<Term> terms;
      try {
        terms = parse_linear_combination(m.to, qb);
      } catch (const ParseError& pe) {
        fail(m.line, pe.what());
      }
      Element img;
      for (const auto& t : terms) {
        if (t.arrows.empty()) fail(m.line, "arrow image must be a combination of paths of positive length");
        img = add(img, scale(b->reduce(qb.arrow(t.arrows.front()).source, t.arrows), t.coeff));
      }
      ar[*a] = img;
      arrow_line[*a] = m.line;
    } else {
      fail(m.line, "'" + m.from + "' is neither a vertex nor an arrow of the total quiver");
    }
  }
  CoveringFixture out;
  out.functor.total = e;
  out.functor.base = b;
  for (std::size_t v = 0; v < ob.size(); ++v) {
    if (!ob[v]) throw ParseError(1, 1, "vertex '" + qe.vertex_name(v) + "' has no map line");
    out.functor.object_map.push_back(*ob[v]);
  }
  for (std::size_t a = 0; a < ar.size(); ++a) {
    if (!ar[a]) throw ParseError(1, 1, "arrow '" + qe.arrow(a).name + "' has no map line");
    std::size_t s = out.functor.object_map[qe.arrow(a).source], t = out.functor.object_map[qe.arrow(a).target];
    for (const auto& [k, c] : *ar[a]) {
      const Path& p = b->basis(k);
      if (p.source != s || p.target != t)
        fail(arrow_line[a], "image of arrow '" + qe.arrow(a).name + "' does not lie in B(" + qb.vertex_name(s) + ", " +
                                qb.vertex_name(t) + ")");
    }
    out.functor.arrow_images.push_back(*ar[a]);
  }
  std::vector<std::pair<Permutation, Permutation>> gens;
  for (const auto& g : doc.generators) gens.push_back(parse_generator(qe, g));
  try {
    out.action = make_action(e, gens);
  } catch (const std::invalid_argument& ex) {
    std::size_t line = doc.generators.empty() ? 1 : doc.generators.front().line;
    fail(line, ex.what());
  }
  out.modules = doc.modules;
  return out;
}

CoveringFixture load_covering(const std::string& path) { return covering_from_document(parse_document(read_file(path))); }

TranslationQuiver parse_translation_quiver(std::string_view text) {
  TranslationQuiver tq;
  auto vertex = [&](const std::string& n, std::size_t line) {
    auto v = tq.find_vertex(n);
    if (!v) fail(line, "undeclared vertex '" + n + "'");
    return *v;
  };
  auto arrow = [&](const std::string& s, const std::string& t, std::size_t line) {
    auto a = tq.find_arrow(vertex(s, line), vertex(t, line));
    if (!a) fail(line, "no arrow " + s + " -> " + t);
    return *a;
  };
  std::vector<std::pair<std::vector<std::string>, std::size_t>> deferred;
  for (const auto& l : split_lines(text)) {
    auto w = words(l.text);
    if (w.empty()) continue;
    if (w[0] == "vertex") {
      if (w.size() < 2) fail(l.no, "expected vertex <name>");
      if (tq.find_vertex(w[1])) fail(l.no, "duplicate vertex '" + w[1] + "'");
      bool p = false, i = false, f = false;
      for (std::size_t k = 2; k < w.size(); ++k) {
        if (w[k] == "projective") p = true;
        else if (w[k] == "injective") i = true;
        else if (w[k] == "frontier") f = true;
        else fail(l.no, "unknown vertex mark '" + w[k] + "'");
      }
      tq.add_vertex(w[1], p, i, f);
    } else if (w[0] == "arrow") {
      if ((w.size() != 4 && w.size() != 5) || w[2] != "->") fail(l.no, "expected arrow <x> -> <y> [x<n>]");
      std::size_t mult = 1;
      if (w.size() == 5) {
        if (w[4].size() < 2 || w[4][0] != 'x') fail(l.no, "multiplicity must be written x<n>");
        mult = parse_count(w[4].substr(1), l.no);
        if (mult == 0) fail(l.no, "multiplicity must be positive");
      }
      tq.add_arrow(vertex(w[1], l.no), vertex(w[3], l.no), mult);
    } else if (w[0] == "tau" || w[0] == "sigma") {
      deferred.emplace_back(w, l.no);
    } else {
      fail(l.no, "unknown keyword '" + w[0] + "'");
    }
  }
  for (const auto& [w, no] : deferred) {
    if (w[0] == "tau") {
      if (w.size() != 4 || w[2] != "=") fail(no, "expected tau <x> = <y>");
      std::size_t x = vertex(w[1], no), y = vertex(w[3], no);
      if (tq.tau(x)) fail(no, "tau of '" + w[1] + "' given twice");
      tq.set_tau(x, y);
    } else {
      if (w.size() != 8 || w[2] != "->" || w[4] != "=" || w[6] != "->") fail(no, "expected sigma <x> -> <y> = <z> -> <x>");
      tq.set_sigma(arrow(w[1], w[3], no), arrow(w[5], w[7], no));
    }
  }
  try {
    tq.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  return tq;
}

TranslationQuiver load_translation_quiver(const std::string& path) { return parse_translation_quiver(read_file(path)); }

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  std::map<std::string, std::size_t> index;
  for (const auto& l : split_lines(text)) {
    auto w = words(l.text);
    if (w.empty()) continue;
    if (w[0] == "vertex") {
      if (w.size() != 2) fail(l.no, "expected vertex <name>");
      if (index.count(w[1])) fail(l.no, "duplicate vertex '" + w[1] + "'");
      index[w[1]] = g.add_vertex(w[1]);
    } else if (w[0] == "edge") {
      if (w.size() != 3) fail(l.no, "expected edge <u> <v>");
      auto u = index.find(w[1]), v = index.find(w[2]);
      if (u == index.end() || v == index.end()) fail(l.no, "edge names an undeclared vertex");
      g.add_edge(u->second, v->second);
    } else {
      fail(l.no, "unknown keyword '" + w[0] + "'");
    }
  }
  return g;
}

Multigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace qc
