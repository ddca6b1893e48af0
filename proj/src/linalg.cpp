#include "trivspec/linalg.hpp"

#include <algorithm>

namespace trivspec {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(Errc::ShapeMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) fail(Errc::ShapeMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "matrix product shape");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) fail(Errc::ShapeMismatch, "matrix-vector shape");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) r[i] += (*this)(i, k) * v[k];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix sum shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix difference shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = c * x;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "vstack shape");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "hstack shape");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

// ---------- modular kernels ----------

namespace modp {

Mat from_matrix(const Matrix& m) {
  Mat r;
  r.rows = m.rows();
  r.cols = m.cols();
  r.p = static_cast<std::uint32_t>(m.field().characteristic());
  r.a.resize(r.rows * r.cols);
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) r.a[i * r.cols + j] = static_cast<std::uint32_t>(m(i, j).mod_value());
  return r;
}

Matrix to_matrix(const Mat& m) {
  Field f = Field::prime(m.p);
  Matrix r(f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r(i, j) = Scalar(ModP{m.at(i, j), m.p});
  return r;
}

std::vector<std::size_t> rref(Mat& m) {
  const std::uint64_t p = m.p;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    std::uint64_t inv = invmod(m.at(r, c), p);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint32_t>(m.at(r, j) * inv % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || !m.at(i, c)) continue;
      std::uint64_t f = p - m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (m.at(r, j)) m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + f * m.at(r, j)) % p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t rank(Mat m) {
  // Forward elimination only.
  const std::uint64_t p = m.p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    std::uint64_t inv = invmod(m.at(r, c), p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (!m.at(i, c)) continue;
      std::uint64_t f = (p - m.at(i, c)) * inv % p;
      for (std::size_t j = c; j < m.cols; ++j)
        if (m.at(r, j)) m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + f * m.at(r, j)) % p);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<std::uint32_t>> kernel_vector(Mat m) {
  auto piv = rref(m);
  if (piv.size() == m.cols) return std::nullopt;
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::size_t free = 0;
  while (is_piv[free]) ++free;
  std::vector<std::uint32_t> x(m.cols, 0);
  x[free] = 1;
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m.at(r, free) ? m.p - m.at(r, free) : 0;
  return x;
}

void add_into(Mat& acc, const Mat& b, std::uint32_t c) {
  const std::uint64_t p = acc.p;
  for (std::size_t i = 0; i < acc.a.size(); ++i)
    if (b.a[i]) acc.a[i] = static_cast<std::uint32_t>((acc.a[i] + static_cast<std::uint64_t>(c) * b.a[i]) % p);
}

}  // namespace modp

// ---------- generic elimination ----------

Echelon echelon(const Matrix& m) {
  Echelon e;
  if (m.field().kind() == FieldKind::Prime) {
    modp::Mat mm = modp::from_matrix(m);
    e.pivots = modp::rref(mm);
    Matrix full = modp::to_matrix(mm);
    e.rref = full.block(0, 0, e.pivots.size(), m.cols());
    return e;
  }
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = a.block(0, 0, r, a.cols());
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().kind() == FieldKind::Prime) return modp::rank(modp::from_matrix(m));
  return echelon(m).rank();
}

std::vector<Vec> kernel(const Matrix& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec x = zero_vec(m.field(), m.cols());
    x[f] = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rref(r, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> left_kernel(const Matrix& m) { return kernel(m.transpose()); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(Errc::ShapeMismatch, "solve: right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.field(), a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), n));
  Echelon e = echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, "determinant of non-square matrix");
  Matrix a = m;
  std::size_t n = a.rows();
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return m.field().zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det = det * a(c, c);
    Scalar inv = a(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// ---------- FSubspace ----------

FSubspace::FSubspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

FSubspace FSubspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& gens) {
  FSubspace s(f, ambient);
  if (gens.empty()) return s;
  Echelon e = echelon(Matrix::from_rows(f, gens, ambient));
  s.basis_ = e.rref.row_list();
  s.pivots_ = e.pivots;
  return s;
}

FSubspace FSubspace::full(const Field& f, std::size_t ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vec(f, ambient, i));
  return span(f, ambient, gens);
}

Vec FSubspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool FSubspace::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(Errc::ShapeMismatch, "subspace membership: wrong length");
  return is_zero_vec(reduce(v));
}

bool FSubspace::contains(const FSubspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> FSubspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

FSubspace FSubspace::sum(const FSubspace& o) const {
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, gens);
}

std::vector<Vec> FSubspace::annihilator() const {
  if (basis_.empty()) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < ambient_; ++i) out.push_back(unit_vec(field_, ambient_, i));
    return out;
  }
  return kernel(Matrix::from_rows(field_, basis_, ambient_));
}

FSubspace FSubspace::intersect(const FSubspace& o) const {
  std::vector<Vec> rows = annihilator();
  auto b = o.annihilator();
  rows.insert(rows.end(), b.begin(), b.end());
  if (rows.empty()) return full(field_, ambient_);
  return span(field_, ambient_, kernel(Matrix::from_rows(field_, rows, ambient_)));
}

bool FSubspace::operator==(const FSubspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

}  // namespace trivspec
