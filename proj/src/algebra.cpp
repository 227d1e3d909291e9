#include "quivercover/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace qc {

Element add(const Element& a, const Element& b) {
  Element out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].second + b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Element scale(const Element& a, const Rational& s) {
  if (sgn(s) == 0) return {};
  Element out = a;
  for (auto& [k, c] : out) c *= s;
  return out;
}

std::size_t default_max_path_length() {
  if (const char* env = std::getenv("QUIVERCOVER_MAX_PATHLEN")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

std::size_t Algebra::VecHash::operator()(const std::vector<std::size_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ (x + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
  return h;
}

std::shared_ptr<const Algebra> Algebra::create(Presentation p, std::size_t max_path_length) {
  return std::make_shared<const Algebra>(std::move(p), max_path_length);
}

Algebra::Algebra(Presentation p, std::size_t max_path_length) : pres_(std::move(p)) { build(max_path_length); }

namespace {

struct Block {
  std::vector<std::vector<std::size_t>> columns;  // greatest first
};

}  // namespace

void Algebra::build(std::size_t max_len) {
  const Quiver& q = quiver();
  const std::size_t n = q.num_vertices();
  auto src = [&](const std::vector<std::size_t>& w) { return q.arrow(w.front()).source; };
  auto tgt = [&](const std::vector<std::size_t>& w) { return q.arrow(w.back()).target; };

  // paths[l] = all arrow words of length l (l >= 1).
  std::vector<std::vector<std::vector<std::size_t>>> paths(2);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) paths[1].push_back({a});
  std::size_t min_rel_len = SIZE_MAX;
  for (const auto& r : pres_.relations())
    for (const auto& t : r.terms) min_rel_len = std::min(min_rel_len, t.arrows.size());

  for (std::size_t L = 2;; ++L) {
    // Make sure words of length L-1 are enumerated.
    while (paths.size() < L) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& w : paths.back())
        for (std::size_t a : q.arrows_out(tgt(w))) {
          auto x = w;
          x.push_back(a);
          next.push_back(std::move(x));
        }
      paths.push_back(std::move(next));
    }
    // Blocks over (source, target) with words of length 2..L-1.
    std::map<std::pair<std::size_t, std::size_t>, Block> blocks;
    std::unordered_map<std::vector<std::size_t>, std::pair<std::pair<std::size_t, std::size_t>, std::size_t>, VecHash>
        where;
    for (std::size_t l = 2; l < L; ++l)
      for (const auto& w : paths[l]) blocks[{src(w), tgt(w)}].columns.push_back(w);
    for (auto& [key, b] : blocks) {
      std::sort(b.columns.begin(), b.columns.end(),
                [&](const auto& x, const auto& y) { return path_less(q, y, x); });
      for (std::size_t c = 0; c < b.columns.size(); ++c) where[b.columns[c]] = {key, c};
    }
    // Ideal generators u.r.v truncated below length L.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Vector>> rows;
    std::vector<std::vector<std::vector<std::size_t>>> ending_at(n), starting_at(n);
    for (std::size_t v = 0; v < n; ++v) {
      ending_at[v].push_back({});
      starting_at[v].push_back({});
    }
    for (std::size_t l = 1; l < L; ++l)
      for (const auto& w : paths[l]) {
        ending_at[tgt(w)].push_back(w);
        starting_at[src(w)].push_back(w);
      }
    if (min_rel_len < L) {
      for (const auto& r : pres_.relations()) {
        std::size_t rmin = SIZE_MAX;
        for (const auto& t : r.terms) rmin = std::min(rmin, t.arrows.size());
        for (const auto& u : ending_at[r.source]) {
          if (u.size() + rmin >= L) continue;
          for (const auto& v : starting_at[r.target]) {
            if (u.size() + rmin + v.size() >= L) continue;
            std::pair<std::size_t, std::size_t> key{u.empty() ? r.source : src(u), v.empty() ? r.target : tgt(v)};
            auto& blk = blocks[key];
            Vector row(blk.columns.size());
            bool any = false;
            for (const auto& t : r.terms) {
              if (u.size() + t.arrows.size() + v.size() >= L) continue;
              std::vector<std::size_t> w = u;
              w.insert(w.end(), t.arrows.begin(), t.arrows.end());
              w.insert(w.end(), v.begin(), v.end());
              row[where.at(w).second] += t.coeff;
              any = true;
            }
            if (any) rows[key].push_back(std::move(row));
          }
        }
      }
    }
    // Eliminate and test whether every path of length L-1 lies in the ideal.
    std::map<std::pair<std::size_t, std::size_t>, Echelon> reduced;
    bool top_vanishes = true;
    for (auto& [key, blk] : blocks) {
      auto rit = rows.find(key);
      Matrix m(rit == rows.end() ? 0 : rit->second.size(), blk.columns.size());
      if (rit != rows.end())
        for (std::size_t i = 0; i < rit->second.size(); ++i)
          for (std::size_t j = 0; j < blk.columns.size(); ++j) m(i, j) = rit->second[i][j];
      Echelon e = rref(std::move(m));
      std::vector<std::ptrdiff_t> pivot_row(blk.columns.size(), -1);
      for (std::size_t k = 0; k < e.pivots.size(); ++k) pivot_row[e.pivots[k]] = static_cast<std::ptrdiff_t>(k);
      for (std::size_t c = 0; c < blk.columns.size() && top_vanishes; ++c) {
        if (blk.columns[c].size() != L - 1) continue;
        if (pivot_row[c] < 0) {
          top_vanishes = false;
          break;
        }
        auto k = static_cast<std::size_t>(pivot_row[c]);
        for (std::size_t j = 0; j < blk.columns.size(); ++j)
          if (j != c && sgn(e.reduced(k, j)) != 0) {
            top_vanishes = false;
            break;
          }
      }
      reduced.emplace(key, std::move(e));
    }
    if (L == 2 && !paths[1].empty()) top_vanishes = false;  // arrows never lie in the ideal
    if (!top_vanishes) {
      if (L - 1 >= max_len) {
        // Report a surviving long path; it necessarily runs around a cycle.
        std::vector<std::size_t> witness;
        for (auto& [key, blk] : blocks)
          for (const auto& w : blk.columns)
            if (w.size() == L - 1 && witness.empty()) witness = w;
        if (witness.empty() && !paths[L - 1].empty()) witness = paths[L - 1].front();
        std::vector<std::size_t> seen(n, SIZE_MAX);
        std::string cycle;
        std::size_t pos = 0, cur = src(witness);
        seen[cur] = 0;
        for (std::size_t k = 0; k < witness.size(); ++k) {
          cur = q.arrow(witness[k]).target;
          if (seen[cur] != SIZE_MAX) {
            std::vector<std::size_t> loop(witness.begin() + static_cast<std::ptrdiff_t>(seen[cur]),
                                          witness.begin() + static_cast<std::ptrdiff_t>(k + 1));
            cycle = path_to_string(q, loop);
            break;
          }
          seen[cur] = ++pos;
        }
        throw NilpotencyError("arrow ideal is not nilpotent up to path length " + std::to_string(max_len) +
                              ": cycle " + cycle + " has no vanishing power");
      }
      continue;
    }

    // Assemble the basis.
    nilpotency_ = 1;
    std::vector<Path> basis;
    for (std::size_t v = 0; v < n; ++v) basis.push_back({v, v, {}});
    for (std::size_t a = 0; a < q.num_arrows(); ++a) basis.push_back({q.arrow(a).source, q.arrow(a).target, {a}});
    std::vector<std::vector<std::size_t>> longer;
    for (auto& [key, blk] : blocks) {
      const Echelon& e = reduced.at(key);
      std::vector<bool> piv(blk.columns.size(), false);
      for (auto p : e.pivots) piv[p] = true;
      for (std::size_t c = 0; c < blk.columns.size(); ++c)
        if (!piv[c]) longer.push_back(blk.columns[c]);
    }
    std::sort(longer.begin(), longer.end(), [&](const auto& x, const auto& y) { return path_less(q, x, y); });
    for (auto& w : longer) basis.push_back({src(w), tgt(w), w});

    basis_ = std::move(basis);
    idempotent_.resize(n);
    arrow_basis_.resize(q.num_arrows());
    between_.assign(n * n, {});
    local_index_.assign(basis_.size(), 0);
    std::unordered_map<std::vector<std::size_t>, std::size_t, VecHash> index_of;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Path& p = basis_[i];
      if (p.arrows.empty()) idempotent_[p.source] = i;
      else index_of[p.arrows] = i;
      if (p.arrows.size() == 1) arrow_basis_[p.arrows[0]] = i;
      auto& lst = between_[p.source * n + p.target];
      local_index_[i] = lst.size();
      lst.push_back(i);
    }
    normal_forms_.clear();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) normal_forms_[{a}] = {{arrow_basis_[a], Rational(1)}};
    for (auto& [key, blk] : blocks) {
      const Echelon& e = reduced.at(key);
      std::vector<std::ptrdiff_t> pivot_row(blk.columns.size(), -1);
      for (std::size_t k = 0; k < e.pivots.size(); ++k) pivot_row[e.pivots[k]] = static_cast<std::ptrdiff_t>(k);
      for (std::size_t c = 0; c < blk.columns.size(); ++c) {
        const auto& w = blk.columns[c];
        Element nf;
        if (pivot_row[c] < 0) {
          nf.emplace_back(index_of.at(w), Rational(1));
        } else {
          auto k = static_cast<std::size_t>(pivot_row[c]);
          for (std::size_t j = 0; j < blk.columns.size(); ++j)
            if (j != c && sgn(e.reduced(k, j)) != 0) nf.emplace_back(index_of.at(blk.columns[j]), -e.reduced(k, j));
          std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        normal_forms_[w] = std::move(nf);
      }
    }
    max_len_ = max_len;
    truncation_ = L;
    const std::size_t d = basis_.size();
    products_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Path& a = basis_[i];
        const Path& b = basis_[j];
        if (a.target != b.source) continue;
        if (a.arrows.empty()) products_[i * d + j] = {{j, Rational(1)}};
        else if (b.arrows.empty()) products_[i * d + j] = {{i, Rational(1)}};
        else {
          std::vector<std::size_t> w = a.arrows;
          w.insert(w.end(), b.arrows.begin(), b.arrows.end());
          products_[i * d + j] = reduce(a.source, w);
        }
      }
    nilpotency_ = L;
    for (std::size_t m = 1; m < L; ++m) {
      bool all_zero = true;
      for (const auto& w : paths[m])
        if (!normal_forms_.at(w).empty()) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        nilpotency_ = m;
        break;
      }
    }
    return;
  }
}

Element Algebra::reduce(std::size_t source, const std::vector<std::size_t>& arrows) const {
  const Quiver& q = quiver();
  if (arrows.empty()) return {{idempotent_.at(source), Rational(1)}};
  if (q.arrow(arrows.front()).source != source) throw std::invalid_argument("reduce: path does not start at source");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source)
      throw std::invalid_argument("reduce: path does not compose");
  if (arrows.size() >= truncation_) return {};
  auto it = normal_forms_.find(arrows);
  if (it == normal_forms_.end()) return {};
  return it->second;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : product(i, j)) acc[k] += x * y * z;
  Element out;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) out.emplace_back(k, c);
  return out;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [this] {
    auto op = std::make_shared<Algebra>(qc::opposite(pres_), max_len_);
    op->opposite_of_ = shared_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

std::string Algebra::basis_name(std::size_t i) const {
  const Path& p = basis_[i];
  if (p.arrows.empty()) return "e" + quiver().vertex_name(p.source);
  return path_to_string(quiver(), p.arrows);
}

}  // namespace qc
