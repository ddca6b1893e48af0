#ifndef TRIVSPEC_GENERIC_MATRIX_HPP
#define TRIVSPEC_GENERIC_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "trivspec/mpoly.hpp"
#include "trivspec/operator_space.hpp"

namespace trivspec {

// Matrix with polynomial entries in z_1 .. z_m.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field f, std::size_t nvars, std::size_t rows, std::size_t cols);
  // Checks that every entry is homogeneous of degree deg; throws NotHomogeneous.
  static PolyMatrix from_entries(const Field& f, std::size_t nvars, std::vector<std::vector<MPoly>> entries,
                                 std::optional<unsigned> deg = std::nullopt);
  // sum_l z_l B_l
  static PolyMatrix generic_of_basis(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& basis);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;
  Matrix eval(const Vec& z) const;
  // Largest total degree among the entries.
  int degree() const;

 private:
  Field field_;
  std::size_t nvars_ = 0, rows_ = 0, cols_ = 0;
  std::vector<MPoly> e_;
};

// (dn) x (dim S) matrix whose specialisation at z in F^{dm} is the matrix of
// u -> u(z) on S in its basis: entry (i, l) = sum_j A_l(i, j) z_j.
PolyMatrix generic_of(const OperatorSpace& s);

struct PolyRank {
  std::size_t rank = 0;
  Verdict verdict = Verdict::Unknown;  // Certified (exact) or CertifiedProbabilistic
  double failure_bound = 0;            // probability that rank is too low
  bool maxrk_interpretation = false;   // |F| > rank, so rank = max rank of the specialisations
  std::string method;
};

// Rank over the fraction field F(z).  Exact fraction-free elimination when the
// smaller side is at most 6, random specialisation otherwise.
PolyRank poly_rank(const PolyMatrix& m, Rng& rng, bool force_exact = false);

// dim of the span of the specialisations of a row of linear forms.
std::size_t spanning_rank(const std::vector<MPoly>& row);

// Rows L of linear forms with L M = 0; each returned as a (rows x nvars)
// coefficient matrix, row i holding the coefficients of L_i.
std::vector<Matrix> catchers(const PolyMatrix& m);

struct AlternatorCatcherReport {
  std::size_t dim_alt = 0;
  std::size_t dim_catch = 0;
  bool forward_ok = false;   // alternators map to independent catchers
  bool backward_ok = false;  // catchers map back to alternators
  bool ok() const { return dim_alt == dim_catch && forward_ok && backward_ok; }
};
// Requires a target-reduced space; throws NotTargetReduced.
AlternatorCatcherReport alternator_catcher_check(const OperatorSpace& s);

struct FlandersAtkinsonReport {
  bool d_zero = false;
  std::size_t max_k = 0;  // identities B A^k C = 0 checked for k = 0..max_k
  PolyRank rank;
  std::string note;
};
// Space of F-matrices (over the trivial algebra) containing J_r with max rank
// at most r. Throws HypothesisViolated (rank too large, with a witness point)
// or IdentityViolated.
FlandersAtkinsonReport flanders_atkinson_check(const OperatorSpace& space, std::size_t r, Rng& rng);

// Y = p X for a (delta-1)-homogeneous p; throws SpanningRankTooLow or NotCollinear.
MPoly factor_collinear(const std::vector<MPoly>& x, const std::vector<MPoly>& y);

// J_r of shape n x p over F.
Matrix j_matrix(const Field& f, std::size_t n, std::size_t p, std::size_t r);

// Random subspace containing J_r of U P C Q V, where C = {M : M(i, j) = 0 when
// i >= a and j >= b} with a + b = r, P, Q random and U, V chosen so that J_r
// lies in the result.  Every element has rank at most r.
OperatorSpace random_compression_space(const Field& f, std::size_t n, std::size_t p, std::size_t r, Rng& rng);

}  // namespace trivspec

#endif
