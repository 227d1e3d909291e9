#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quivercover/rational.hpp"

namespace qc {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  std::size_t add_vertex(std::string name);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& arrows_out(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& arrows_in(std::size_t v) const { return in_.at(v); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
  std::size_t vertex_index(std::string_view name) const;
  std::size_t arrow_index(std::string_view name) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::map<std::string, std::size_t, std::less<>> vertex_lookup_, arrow_lookup_;
};

// A path is a vertex plus a (possibly empty) arrow word composed left to right.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct Term {
  Rational coeff;
  std::vector<std::size_t> arrows;

  friend bool operator==(const Term&, const Term&) = default;
};

// Terms sorted greatest path first; the leading coefficient is 1.
struct Relation {
  std::vector<Term> terms;
  std::size_t source = 0;
  std::size_t target = 0;

  bool is_monomial() const { return terms.size() == 1; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class Presentation {
 public:
  Presentation() = default;
  // Validates and normalizes relations. Throws std::invalid_argument.
  Presentation(Quiver quiver, std::vector<Relation> relations, std::map<std::string, std::string> flags = {});

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::map<std::string, std::string>& flags() const { return flags_; }
  std::optional<std::string> flag(const std::string& key) const;
  bool flag_is_true(const std::string& key) const;
  void set_flag(const std::string& key, const std::string& value) { flags_[key] = value; }

  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  std::size_t num_arrows() const { return quiver_.num_arrows(); }
  bool is_monomial() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::map<std::string, std::string> flags_;
};

// Compares arrow words by length, then lexicographically by arrow names.
bool path_less(const Quiver& q, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

// Sorts, merges and scales terms; throws std::invalid_argument on invalid input.
Relation normalize_relation(const Quiver& q, std::vector<Term> terms);

std::string path_to_string(const Quiver& q, const std::vector<std::size_t>& arrows);
std::string relation_to_string(const Quiver& q, const Relation& r);

Presentation parse_presentation(std::string_view text);
// A linear combination of arrow words such as "a.b - 2*c", parsed against the quiver's arrows.
std::vector<Term> parse_linear_combination(std::string_view text, const Quiver& q);
std::string print_presentation(const Presentation& p);

Presentation radical_square_zero(const Quiver& q);
Presentation opposite(const Presentation& p);

// Keeps the listed vertices (in the given order), the arrows between them, and the relations
// whose paths stay among them. Exact for eAe when every dropped vertex is a sink or a source.
Presentation restrict_to_vertices(const Presentation& p, const std::vector<std::size_t>& keep);

// Vertex-disjoint union; names are kept, so they must not collide.
Presentation disjoint_union(const std::vector<Presentation>& parts);

// Connected components of the underlying graph, as sorted vertex lists.
std::vector<std::vector<std::size_t>> connected_components(const Quiver& q);

}  // namespace qc
