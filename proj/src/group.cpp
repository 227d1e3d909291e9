#include "quivercover/group.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qc {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw std::invalid_argument("group table is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::power(std::size_t a, long long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  std::size_t r = 0;
  for (unsigned long long i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

PermutationGroup generate_group(const std::vector<Permutation>& gens, std::size_t degree, std::size_t max_order) {
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  for (const auto& g : gens) {
    if (g.size() != degree) throw std::invalid_argument("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = true;
    }
  }
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Permutation p = compose(g, elems[k]);
      if (!index.count(p)) {
        if (elems.size() >= max_order) throw std::invalid_argument("permutation group too large");
        index[p] = elems.size();
        elems.push_back(std::move(p));
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  PermutationGroup out{FiniteGroup(std::move(table)), std::move(elems), {}};
  for (const auto& g : gens) out.generators.push_back(index.at(g));
  return out;
}

QuotientSpec parse_quotient(const std::string& text) {
  std::string s = text;
  QuotientSpec q;
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  while (!head.empty() && head.back() == ' ') head.pop_back();
  while (!head.empty() && head.front() == ' ') head.erase(0, 1);
  if (head == "1" && colon == std::string::npos) return q;
  if (head.rfind("Z/", 0) != 0) throw std::invalid_argument("quotient must look like 'Z/n: i j ...'");
  try {
    std::size_t used = 0;
    long long n = std::stoll(head.substr(2), &used);
    if (used != head.size() - 2 || n <= 0) throw std::invalid_argument("");
    q.modulus = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad modulus in quotient '" + text + "'");
  }
  if (colon != std::string::npos) {
    std::istringstream in(s.substr(colon + 1));
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        q.images.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator image '" + tok + "'");
      }
    }
  }
  return q;
}

}  // namespace qc
