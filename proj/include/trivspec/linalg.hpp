#ifndef TRIVSPEC_LINALG_HPP
#define TRIVSPEC_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trivspec/field.hpp"

namespace trivspec {

// Dense matrix over a field F.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  std::vector<Vec> row_list() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix rref;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}; one vector per free column, in column order.
std::vector<Vec> kernel(const Matrix& m);
// Basis of {y : y^T m = 0}.
std::vector<Vec> left_kernel(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

// F-subspace of F^n stored by its reduced echelon basis.
class FSubspace {
 public:
  FSubspace() = default;
  FSubspace(Field f, std::size_t ambient);  // zero subspace
  static FSubspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& gens);
  static FSubspace full(const Field& f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(const Vec& v) const;
  bool contains(const FSubspace& o) const;
  // v minus its projection along the pivot coordinates.
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the echelon basis (v must lie in the subspace).
  std::optional<Vec> coordinates(const Vec& v) const;
  FSubspace sum(const FSubspace& o) const;
  FSubspace intersect(const FSubspace& o) const;
  // Rows spanning {w : w . v = 0 for all v in the subspace}.
  std::vector<Vec> annihilator() const;
  bool operator==(const FSubspace& o) const;
  bool operator!=(const FSubspace& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Fast modular kernels for prime fields. Entries are kept in [0, p).
namespace modp {

using Row = std::vector<std::uint32_t>;

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> a;
  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat from_matrix(const Matrix& m);
Matrix to_matrix(const Mat& m);
// In-place reduced row echelon; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
// A nonzero vector of the right kernel, if any (first free column of the rref).
std::optional<std::vector<std::uint32_t>> kernel_vector(Mat m);
void add_into(Mat& acc, const Mat& b, std::uint32_t c = 1);

}  // namespace modp

}  // namespace trivspec

#endif
