#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "quivercover/linalg.hpp"
#include "quivercover/presentation.hpp"

namespace qc {

// Sparse element of the algebra: (basis index, coefficient), sorted by index, no zeros.
using Element = std::vector<std::pair<std::size_t, Rational>>;

Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& s);

class NilpotencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default bound on path length; QUIVERCOVER_MAX_PATHLEN overrides it.
std::size_t default_max_path_length();

// The finite dimensional algebra kQ/I with a deterministic path basis.
//
// Within each space of parallel paths the basis is chosen by eliminating the ideal with the
// paths ordered greatest first (length, then arrow names), so basis paths are the ones that
// never occur as leading paths.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(Presentation p, std::size_t max_path_length = default_max_path_length());

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver(); }
  std::size_t num_vertices() const { return pres_.num_vertices(); }
  std::size_t dim() const { return basis_.size(); }
  const Path& basis(std::size_t i) const { return basis_[i]; }
  // Indices of basis paths from x to y, ascending.
  const std::vector<std::size_t>& basis_between(std::size_t x, std::size_t y) const {
    return between_[x * num_vertices() + y];
  }
  std::size_t idempotent(std::size_t v) const { return idempotent_[v]; }
  std::size_t arrow_element(std::size_t a) const { return arrow_basis_[a]; }
  // Position of a basis element within basis_between(source, target).
  std::size_t local_index(std::size_t i) const { return local_index_[i]; }

  // Normal form of an arrow word starting at `source` (empty word = idempotent).
  Element reduce(std::size_t source, const std::vector<std::size_t>& arrows) const;
  const Element& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Element multiply(const Element& a, const Element& b) const;
  // Smallest L with every path of length L zero.
  std::size_t nilpotency_index() const { return nilpotency_; }
  bool is_hereditary() const { return pres_.relations().empty(); }

  std::shared_ptr<const Algebra> opposite() const;
  std::string basis_name(std::size_t i) const;

  Algebra(Presentation p, std::size_t max_path_length);

 private:
  void build(std::size_t max_path_length);
  struct VecHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept;
  };

  Presentation pres_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> idempotent_, arrow_basis_, local_index_;
  // Normal forms of all nonzero-length paths shorter than the nilpotency bound.
  std::unordered_map<std::vector<std::size_t>, Element, VecHash> normal_forms_;
  std::vector<Element> products_;
  std::size_t nilpotency_ = 0;
  std::size_t truncation_ = 0;
  std::size_t max_len_ = 64;

  mutable std::once_flag opposite_once_;
  mutable std::shared_ptr<const Algebra> opposite_;
  mutable std::weak_ptr<const Algebra> opposite_of_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace qc
