#include "trivspec/dmat.hpp"

#include <sstream>

namespace trivspec {

DMatrix::DMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), flat_(zero_vec(alg_->base(), rows * cols * alg_->degree())) {}

DMatrix DMatrix::identity(AlgebraPtr alg, std::size_t n) {
  DMatrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, alg->one());
  return m;
}

DMatrix DMatrix::from_flat(AlgebraPtr alg, std::size_t rows, std::size_t cols, Vec flat) {
  if (flat.size() != rows * cols * alg->degree()) fail(Errc::ShapeMismatch, "flat coordinates have wrong length");
  DMatrix m;
  m.alg_ = std::move(alg);
  m.rows_ = rows;
  m.cols_ = cols;
  m.flat_ = std::move(flat);
  return m;
}

DMatrix DMatrix::from_entries(AlgebraPtr alg, const std::vector<std::vector<Vec>>& entries) {
  std::size_t r = entries.size(), c = r ? entries[0].size() : 0;
  DMatrix m(alg, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c) fail(Errc::ShapeMismatch, "ragged matrix entries");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, entries[i][j]);
  }
  return m;
}

DMatrix DMatrix::column(AlgebraPtr alg, const Vec& flat) {
  std::size_t d = alg->degree();
  return from_flat(alg, flat.size() / d, 1, flat);
}

Vec DMatrix::entry(std::size_t i, std::size_t j) const {
  std::size_t d = alg_->degree();
  auto it = flat_.begin() + (i * cols_ + j) * d;
  return Vec(it, it + d);
}

void DMatrix::set(std::size_t i, std::size_t j, const Vec& a) {
  std::size_t d = alg_->degree();
  if (a.size() != d) fail(Errc::ShapeMismatch, "entry has wrong number of coordinates");
  std::copy(a.begin(), a.end(), flat_.begin() + (i * cols_ + j) * d);
}

void DMatrix::check(const DMatrix& o) const {
  if (!alg_->same_as(*o.alg_)) fail(Errc::DescriptorMismatch, "matrices over different algebras");
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
  check(o);
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "matrix product shape");
  DMatrix r(alg_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Vec acc = alg_->zero();
      for (std::size_t k = 0; k < cols_; ++k) acc = add(acc, alg_->mul(entry(i, k), o.entry(k, j)));
      r.set(i, j, acc);
    }
  return r;
}

DMatrix DMatrix::operator+(const DMatrix& o) const {
  check(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix sum shape");
  return from_flat(alg_, rows_, cols_, add(flat_, o.flat_));
}

DMatrix DMatrix::operator-(const DMatrix& o) const {
  check(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix difference shape");
  return from_flat(alg_, rows_, cols_, sub(flat_, o.flat_));
}

DMatrix DMatrix::scaled(const Scalar& c) const { return from_flat(alg_, rows_, cols_, scale(c, flat_)); }

DMatrix DMatrix::left_scaled(const Vec& a) const {
  DMatrix r(alg_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, alg_->mul(a, entry(i, j)));
  return r;
}

DMatrix DMatrix::right_scaled(const Vec& a) const {
  DMatrix r(alg_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, alg_->mul(entry(i, j), a));
  return r;
}

DMatrix DMatrix::transpose() const {
  DMatrix r(alg_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, entry(i, j));
  return r;
}

DMatrix DMatrix::star(const Matrix& sigma) const {
  DMatrix r(alg_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, sigma * entry(i, j));
  return r;
}

bool DMatrix::operator==(const DMatrix& o) const {
  return alg_->same_as(*o.alg_) && rows_ == o.rows_ && cols_ == o.cols_ && flat_ == o.flat_;
}

DMatrix DMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  DMatrix b(alg_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.set(i, j, entry(r0 + i, c0 + j));
  return b;
}

void DMatrix::set_block(std::size_t r0, std::size_t c0, const DMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.entry(i, j));
}

Matrix DMatrix::realify() const {
  const std::size_t d = alg_->degree();
  Matrix m(alg_->base(), rows_ * d, cols_ * d);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Vec a = entry(i, j);
      if (is_zero_vec(a)) continue;
      m.set_block(i * d, j * d, alg_->left_mult(a));
    }
  return m;
}

std::string DMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << alg_->str(entry(i, j));
  }
  os << "]";
  return os.str();
}

// ---------- elimination over D ----------

namespace {

struct Grid {
  const Algebra* alg;
  std::size_t rows, cols;
  std::vector<Vec> e;
  Vec& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
};

Grid to_grid(const DMatrix& m) {
  Grid g{m.algebra().get(), m.rows(), m.cols(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g.e.push_back(m.entry(i, j));
  return g;
}

// Reduced row echelon form using only left multiplications; returns pivots.
std::vector<std::size_t> reduce(Grid& g, std::size_t limit_cols) {
  const Algebra& alg = *g.alg;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < g.rows; ++c) {
    std::size_t sel = g.rows;
    for (std::size_t i = r; i < g.rows; ++i)
      if (!is_zero_vec(g.at(i, c))) {
        sel = i;
        break;
      }
    if (sel == g.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < g.cols; ++j) std::swap(g.at(sel, j), g.at(r, j));
    Vec inv = alg.inv(g.at(r, c));
    for (std::size_t j = 0; j < g.cols; ++j) g.at(r, j) = alg.mul(inv, g.at(r, j));
    for (std::size_t i = 0; i < g.rows; ++i) {
      if (i == r || is_zero_vec(g.at(i, c))) continue;
      Vec f = g.at(i, c);
      for (std::size_t j = 0; j < g.cols; ++j)
        if (!is_zero_vec(g.at(r, j))) g.at(i, j) = sub(g.at(i, j), alg.mul(f, g.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank_D(const DMatrix& m) {
  Grid g = to_grid(m);
  return reduce(g, g.cols).size();
}

std::vector<Vec> solve_right_null(const DMatrix& m) {
  const Algebra& alg = *m.algebra();
  const std::size_t d = alg.degree();
  Grid g = to_grid(m);
  auto piv = reduce(g, g.cols);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec x = zero_vec(alg.base(), m.cols() * d);
    auto put = [&](std::size_t i, const Vec& a) { std::copy(a.begin(), a.end(), x.begin() + i * d); };
    put(f, alg.one());
    for (std::size_t r = 0; r < piv.size(); ++r) put(piv[r], scale(-alg.base().one(), g.at(r, f)));
    out.push_back(std::move(x));
  }
  return out;
}

DMatrix inverse_D(const DMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  DMatrix aug(m.algebra(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, DMatrix::identity(m.algebra(), n));
  Grid g = to_grid(aug);
  auto piv = reduce(g, n);
  if (piv.size() < n) fail(Errc::Singular, "matrix is singular over D");
  DMatrix inv(m.algebra(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, g.at(i, n + j));
  return inv;
}

UPoly min_poly_over_F(const Matrix& a) {
  const Field& F = a.field();
  const std::size_t N = a.rows();
  if (N != a.cols()) fail(Errc::NotSquare, "minimal polynomial of non-square matrix");
  auto flatten = [&](const Matrix& m) {
    Vec v;
    v.reserve(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) v.push_back(m(i, j));
    return v;
  };
  std::vector<Vec> powers;
  Matrix cur = Matrix::identity(F, N);
  for (std::size_t k = 0; k <= N; ++k) {
    Vec v = flatten(cur);
    if (!powers.empty()) {
      auto c = solve(Matrix::from_cols(F, powers, N * N), v);
      if (c) {
        Vec coeffs;
        for (const auto& x : *c) coeffs.push_back(-x);
        coeffs.push_back(F.one());
        return UPoly(F, coeffs);
      }
    }
    powers.push_back(v);
    cur = cur * a;
  }
  fail(Errc::Internal, "minimal polynomial degree exceeds dimension");
}

UPoly min_poly_over_F(const DMatrix& m) { return min_poly_over_F(m.realify()); }

bool is_F_diagonalisable(const DMatrix& m) { return splits_with_distinct_roots(min_poly_over_F(m)); }

bool is_semisimple(const DMatrix& m) { return is_separable(min_poly_over_F(m)); }

Vec right_scale(const Algebra& alg, const Vec& x, const Vec& a) {
  const std::size_t d = alg.degree();
  Vec r = x;
  for (std::size_t i = 0; i < x.size() / d; ++i) {
    Vec c = alg.mul(component(x, d, i), a);
    std::copy(c.begin(), c.end(), r.begin() + i * d);
  }
  return r;
}

Matrix right_scale_matrix(const Algebra& alg, std::size_t n, const Vec& a) {
  const std::size_t d = alg.degree();
  Matrix r(alg.base(), n * d, n * d);
  Matrix ra = alg.right_mult(a);
  for (std::size_t i = 0; i < n; ++i) r.set_block(i * d, i * d, ra);
  return r;
}

Vec component(const Vec& x, std::size_t d, std::size_t i) {
  return Vec(x.begin() + i * d, x.begin() + (i + 1) * d);
}

}  // namespace trivspec
