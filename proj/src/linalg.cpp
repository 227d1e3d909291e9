#include "quivercover/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qc {

namespace {

// Below this many entry updates per elimination step the loop stays serial.
constexpr std::size_t kParallelWork = 4096;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const { return Vector(row_ptr(i), row_ptr(i) + cols_); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  require(x.size() == cols_, "apply: size mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(x[j]) != 0 && sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      const Rational* brow = b.row_ptr(k);
      Rational* crow = c.row_ptr(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(brow[j]) != 0) crow[j] += aik * brow[j];
    }
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0, "hstack: row mismatch");
  std::size_t r = std::max(a.rows(), b.rows());
  Matrix m(r, a.cols() + b.cols());
  if (a.cols()) m.set_block(0, 0, a);
  if (b.cols()) m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0, "vstack: column mismatch");
  std::size_t c = std::max(a.cols(), b.cols());
  Matrix m(a.rows() + b.rows(), c);
  if (a.rows()) m.set_block(0, 0, a);
  if (b.rows()) m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

namespace {

std::size_t bareiss_rank(const Matrix& m, bool parallel) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<Integer>> a(r, std::vector<Integer>(c));
  for (std::size_t i = 0; i < r; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && sgn(a[p][col]) == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rk]);
    const std::vector<Integer>& piv = a[rk];
    const Integer pivot = piv[col];
    const bool go_parallel = parallel && (r - rk) * (c - col) > kParallelWork;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::size_t i = rk + 1; i < r; ++i) {
      std::vector<Integer>& row = a[i];
      const Integer f = row[col];
      Integer t;
      for (std::size_t j = col + 1; j < c; ++j) {
        t = row[j] * pivot;
        if (sgn(f) != 0 && sgn(piv[j]) != 0) t -= f * piv[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = pivot;
    ++rk;
  }
  return rk;
}

Echelon rref_impl(Matrix m, bool parallel) {
  const std::size_t r = m.rows(), c = m.cols();
  Echelon e;
  std::size_t rk = 0;
  std::vector<std::size_t> nz;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && sgn(m(p, col)) == 0) ++p;
    if (p == r) continue;
    if (p != rk)
      for (std::size_t j = col; j < c; ++j) std::swap(m(p, j), m(rk, j));
    Rational* prow = m.row_ptr(rk);
    if (prow[col] != 1) {
      const Rational inv = 1 / prow[col];
      for (std::size_t j = col; j < c; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    nz.clear();
    for (std::size_t j = col + 1; j < c; ++j)
      if (sgn(prow[j]) != 0) nz.push_back(j);
    const bool go_parallel = parallel && r * (nz.size() + 1) > kParallelWork;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rk) continue;
      Rational* row = m.row_ptr(i);
      if (sgn(row[col]) == 0) continue;
      const Rational f = row[col];
      for (std::size_t j : nz) row[j] -= f * prow[j];
      row[col] = 0;
    }
    e.pivots.push_back(col);
    ++rk;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return bareiss_rank(m, true); }
Echelon rref(Matrix m) { return rref_impl(std::move(m), true); }

namespace serial {
std::size_t rank(const Matrix& m) { return bareiss_rank(m, false); }
Echelon rref(Matrix m) { return rref_impl(std::move(m), false); }
}  // namespace serial

std::vector<Vector> nullspace_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix nullspace_matrix(const Matrix& m) { return Matrix::from_columns(nullspace_basis(m), m.cols()); }

Matrix left_nullspace_matrix(const Matrix& m) {
  auto basis = nullspace_basis(m.transpose());
  Matrix out(basis.size(), m.rows());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j) out(k, j) = basis[k][j];
  return out;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "solve: size mismatch");
  Echelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, n + j);
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require(m.rows() == b.size(), "solve: size mismatch");
  Matrix bm(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto x = solve_matrix(m, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Echelon e = rref(hstack(m, Matrix::identity(m.rows())));
  const std::size_t n = m.rows();
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix column_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix complement_columns(const Matrix& sub, std::size_t n) {
  std::vector<bool> covered(n, false);
  if (sub.cols() > 0)
    for (auto p : rref(sub.transpose()).pivots) covered[p] = true;
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k)
    if (!covered[k]) {
      Vector e(n);
      e[k] = 1;
      cols.push_back(std::move(e));
    }
  return Matrix::from_columns(cols, n);
}

Matrix left_inverse(const Matrix& m) {
  auto x = solve_matrix(m.transpose(), Matrix::identity(m.cols()));
  require(x.has_value(), "left_inverse: columns are dependent");
  return x->transpose();
}

Matrix right_inverse(const Matrix& m) {
  auto x = solve_matrix(m, Matrix::identity(m.rows()));
  require(x.has_value(), "right_inverse: rows are dependent");
  return *x;
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& b) { return solve(basis, b); }

// Hessenberg reduction followed by the standard recurrence.
std::vector<Rational> charpoly(const Matrix& m0) {
  require(m0.rows() == m0.cols(), "charpoly: square matrix required");
  const std::size_t n = m0.rows();
  Matrix h = m0;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Rational t = h(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (sgn(h(j, m - 1)) == 0) continue;
      const Rational u = h(j, m - 1) / t;
      for (std::size_t k = 0; k < n; ++k) h(j, k) -= u * h(m, k);
      for (std::size_t k = 0; k < n; ++k) h(k, m) += u * h(k, j);
    }
  }
  // p[k] holds the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    std::vector<Rational> cur(mm + 1);
    const auto& prev = p[mm - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] += prev[k];
      cur[k] -= h(mm - 1, mm - 1) * prev[k];
    }
    Rational t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t *= h(mm - i, mm - i - 1);
      if (sgn(t) == 0) break;
      const Rational c = t * h(mm - i - 1, mm - 1);
      if (sgn(c) == 0) continue;
      const auto& q = p[mm - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] -= c * q[k];
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

// Continued-fraction convergents of x, denominators bounded.
std::vector<Rational> convergents(long double x) {
  std::vector<Rational> out;
  Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e17L) break;
    Integer ai(static_cast<long>(a));
    Integer h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    h1 = h0; h0 = h2; k1 = k0; k0 = k2;
    out.emplace_back(h0, k0);
    out.back().canonicalize();
    if (k0 > Integer("1000000000000")) break;
    long double frac = r - a;
    if (std::fabs(frac) < 1e-18L) break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  Poly p = poly;
  trim(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  // Split off the zero root, then work with the square-free part.
  std::size_t z = 0;
  while (z < p.size() && sgn(p[z]) == 0) ++z;
  if (z > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
  }
  if (p.size() <= 1) return roots;
  Poly dp(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * static_cast<long>(k);
  Poly g = poly_gcd(p, dp);
  Poly s = g.size() > 1 ? poly_div(p, g) : p;
  trim(s);
  const std::size_t deg = s.size() - 1;
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-s[0] / s[1]);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Aberth iteration on the monic square-free part; candidates are then verified exactly.
  std::vector<std::complex<long double>> c(deg + 1);
  const Rational lead = s.back();
  long double bound = 0;
  for (std::size_t k = 0; k <= deg; ++k) {
    c[k] = static_cast<long double>(Rational(s[k] / lead).get_d());
    if (k < deg) bound = std::max(bound, std::abs(c[k]));
  }
  bound += 1;
  std::vector<std::complex<long double>> zs(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * (k + 0.25L) / deg + 0.4L;
    zs[k] = std::polar(bound * 0.9L, ang);
  }
  auto eval = [&](std::complex<long double> x, std::complex<long double>& d) {
    std::complex<long double> v = 0;
    d = 0;
    for (std::size_t k = deg + 1; k-- > 0;) {
      d = d * x + v;
      v = v * x + c[k];
    }
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      std::complex<long double> d;
      auto v = eval(zs[k], d);
      if (std::abs(d) == 0) continue;
      auto w = v / d;
      std::complex<long double> sum = 0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) sum += 1.0L / (zs[k] - zs[j]);
      auto step = w / (1.0L - w * sum);
      zs[k] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(zs[k])));
    }
    if (worst < 1e-17L) break;
  }
  for (const auto& zk : zs) {
    if (std::fabs(zk.imag()) > 1e-6L * (1 + std::abs(zk))) continue;
    for (const Rational& cand : convergents(zk.real())) {
      if (sgn(poly_eval(s, cand)) == 0) {
        if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qc
