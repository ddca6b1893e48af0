#ifndef TRIVSPEC_DMAT_HPP
#define TRIVSPEC_DMAT_HPP

#include <string>
#include <vector>

#include "trivspec/algebra.hpp"
#include "trivspec/linalg.hpp"
#include "trivspec/upoly.hpp"

namespace trivspec {

// Matrix over a division algebra D acting on column vectors from the left.
// Entries are stored as F-coordinates: entry (i, j), coordinate k sits at
// index (i * cols + j) * d + k of flat().  Column vectors of D^n use the same
// layout with cols = 1.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols);
  static DMatrix identity(AlgebraPtr alg, std::size_t n);
  static DMatrix from_flat(AlgebraPtr alg, std::size_t rows, std::size_t cols, Vec flat);
  static DMatrix from_entries(AlgebraPtr alg, const std::vector<std::vector<Vec>>& entries);
  static DMatrix column(AlgebraPtr alg, const Vec& flat);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vec& flat() const { return flat_; }
  Vec entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Vec& a);

  DMatrix operator*(const DMatrix& o) const;
  DMatrix operator+(const DMatrix& o) const;
  DMatrix operator-(const DMatrix& o) const;
  DMatrix scaled(const Scalar& c) const;
  // a M and M a for a in D.
  DMatrix left_scaled(const Vec& a) const;
  DMatrix right_scaled(const Vec& a) const;
  DMatrix transpose() const;
  // (M^sigma)^T for an involutive anti-automorphism given by its matrix.
  DMatrix star(const Matrix& sigma) const;
  bool is_zero() const { return is_zero_vec(flat_); }
  bool operator==(const DMatrix& o) const;
  bool operator!=(const DMatrix& o) const { return !(*this == o); }
  DMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const DMatrix& b);
  // The (d rows) x (d cols) F-matrix of X -> M X.
  Matrix realify() const;
  std::string str() const;

 private:
  void check(const DMatrix& o) const;
  AlgebraPtr alg_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec flat_;
};

// Rank over D by Gaussian elimination with left multiplications.
std::size_t rank_D(const DMatrix& m);
// Right-D basis of {X : M X = 0}, as flat coordinate vectors of D^cols.
std::vector<Vec> solve_right_null(const DMatrix& m);
// Inverse over D; throws Singular.
DMatrix inverse_D(const DMatrix& m);
// Minimal polynomial over F of X -> M X on F^{dn}, by linear dependence of powers.
UPoly min_poly_over_F(const DMatrix& m);
UPoly min_poly_over_F(const Matrix& realified);
bool is_F_diagonalisable(const DMatrix& m);
bool is_semisimple(const DMatrix& m);

// Right scalar multiplication x -> x a on D^n (flat coordinates).
Vec right_scale(const Algebra& alg, const Vec& x, const Vec& a);
// Block-diagonal F-matrix of x -> x a on D^n.
Matrix right_scale_matrix(const Algebra& alg, std::size_t n, const Vec& a);
// The D-entry i of a flat vector.
Vec component(const Vec& x, std::size_t d, std::size_t i);

}  // namespace trivspec

#endif
