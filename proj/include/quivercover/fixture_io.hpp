#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivercover/covering.hpp"
#include "quivercover/presentation.hpp"
#include "quivercover/repr.hpp"
#include "quivercover/trans_quiver.hpp"

namespace qc {

struct NamedModule {
  std::string name;
  std::string over;
  Representation module;
};

struct MapLine {
  std::string from, to;
  std::size_t line = 0;
};

struct GeneratorLine {
  std::string cycles;
  std::size_t line = 0;
};

// Block document:
//   presentation <name> ... end
//   module <name> over <presentation>   (dim <vertex>=<n>, map <arrow> = [[..],[..]]) ... end
//   map <x> -> <y>                      (top level, covering fixtures)
//   group ... generator (x y)(a b) ... end
struct Document {
  std::vector<std::string> names;
  std::vector<Presentation> presentations;
  std::vector<AlgebraPtr> algebras;
  std::vector<NamedModule> modules;
  std::vector<MapLine> maps;
  std::vector<GeneratorLine> generators;

  std::optional<std::size_t> find_presentation(std::string_view name) const;
  const NamedModule& module(std::string_view name) const;  // throws std::invalid_argument
};

// Throws ParseError with absolute line numbers.
Document parse_document(std::string_view text);
bool looks_like_document(std::string_view text);

std::string read_file(const std::string& path);  // throws std::runtime_error

// A bare presentation file, or the first presentation of a block document.
Presentation load_presentation(const std::string& path);
Presentation presentation_from_text(std::string_view text);

// A matrix literal such as [[1,0],[1/2,3]]; "[]" is the empty matrix with the given shape.
Matrix parse_matrix(std::string_view text, std::size_t rows, std::size_t cols);
std::string format_matrix(const Matrix& m);
std::string print_module(const std::string& name, const std::string& over, const Representation& m);

struct CoveringFixture {
  CoveringFunctor functor;
  GroupAction action;
  std::vector<NamedModule> modules;  // over either side
};
// The first two presentations are E and B. Every vertex and arrow of E needs a map line; a vertex
// maps to a vertex and an arrow to a linear combination of paths of B. Generators are written in
// cycle notation over the names of E.
CoveringFixture covering_from_document(const Document& doc);
CoveringFixture load_covering(const std::string& path);

// Translation quiver file:
//   vertex <name> [projective] [injective] [frontier]
//   arrow <x> -> <y> [x<multiplicity>]
//   tau <x> = <y>              tau(x) = y
//   sigma <x> -> <y> = <z> -> <x'>
TranslationQuiver parse_translation_quiver(std::string_view text);
TranslationQuiver load_translation_quiver(const std::string& path);

// Graph file: vertex <name>, edge <u> <v>.
Multigraph parse_graph(std::string_view text);
Multigraph load_graph(const std::string& path);

}  // namespace qc
