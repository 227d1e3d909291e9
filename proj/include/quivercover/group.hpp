#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qc {

using Permutation = std::vector<std::size_t>;

// Finite group by multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<std::size_t>>{{0}}) {}
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup trivial() { return FiniteGroup(); }
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long long k) const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

// Group generated by permutations of {0..degree-1}; elements[0] is the identity and
// mul(a, b) acts as elements[a] after elements[b].
struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
  std::vector<std::size_t> generators;  // element indices of the given generators
};

// Throws std::invalid_argument if a generator is not a permutation of the given degree,
// or if the closure exceeds max_order.
PermutationGroup generate_group(const std::vector<Permutation>& gens, std::size_t degree, std::size_t max_order = 100000);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation invert(const Permutation& p);

// Quotient specification "Z/n: i j k" (images of free generators) or "1" for the trivial group.
struct QuotientSpec {
  std::size_t modulus = 1;
  std::vector<long long> images;
};
QuotientSpec parse_quotient(const std::string& text);

}  // namespace qc
