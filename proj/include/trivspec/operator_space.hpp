#ifndef TRIVSPEC_OPERATOR_SPACE_HPP
#define TRIVSPEC_OPERATOR_SPACE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "trivspec/dmat.hpp"
#include "trivspec/linalg.hpp"
#include "trivspec/rng.hpp"
#include "trivspec/verdict.hpp"

namespace trivspec {

// n(d-1) + d n(n-1)/2
std::uint64_t alpha(std::uint64_t n, std::uint64_t d);

// F-linear subspace of Mat_{rows, cols}(D), stored canonically as the reduced
// echelon form of the flat F-coordinates of its elements.
class OperatorSpace {
 public:
  OperatorSpace() = default;
  OperatorSpace(AlgebraPtr alg, std::size_t rows, std::size_t cols);
  static OperatorSpace span(AlgebraPtr alg, std::size_t rows, std::size_t cols, const std::vector<DMatrix>& gens);
  static OperatorSpace from_coords(AlgebraPtr alg, std::size_t rows, std::size_t cols, const FSubspace& coords);
  static OperatorSpace full(AlgebraPtr alg, std::size_t rows, std::size_t cols);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->base(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::size_t dim() const { return coords_.dim(); }
  const FSubspace& coords() const { return coords_; }
  const std::vector<DMatrix>& basis() const { return basis_; }
  const std::vector<Matrix>& realified_basis() const { return real_; }
  DMatrix element(const Vec& coeffs) const;
  Matrix realified_element(const Vec& coeffs) const;
  bool contains(const DMatrix& m) const;
  bool contains(const OperatorSpace& o) const;
  bool operator==(const OperatorSpace& o) const;
  bool operator!=(const OperatorSpace& o) const { return !(*this == o); }
  // {L u R : u in S}
  OperatorSpace transformed(const DMatrix& left, const DMatrix& right) const;
  // Q^{-1} S Q
  OperatorSpace conjugated(const DMatrix& q) const;
  OperatorSpace sum(const OperatorSpace& o) const;
  OperatorSpace intersect(const OperatorSpace& o) const;

 private:
  void rebuild();
  AlgebraPtr alg_;
  std::size_t rows_ = 0, cols_ = 0;
  FSubspace coords_;
  std::vector<DMatrix> basis_;
  std::vector<Matrix> real_;
};

// Right D-subspace of D^n.  The canonical basis has, in each column, a last
// nonzero entry equal to 1 at a pivot row where all other columns vanish.
class DSubspace {
 public:
  DSubspace() = default;
  static DSubspace span(AlgebraPtr alg, std::size_t n, const std::vector<Vec>& gens);
  static DSubspace zero(AlgebraPtr alg, std::size_t n) { return span(alg, n, {}); }
  static DSubspace full(AlgebraPtr alg, std::size_t n);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }
  const FSubspace& fspan() const { return fspan_; }
  bool contains(const Vec& x) const { return fspan_.contains(x); }
  bool contains(const DSubspace& o) const { return fspan_.contains(o.fspan_); }
  // n x dim matrix whose columns are the canonical basis.
  DMatrix basis_matrix() const;
  bool operator==(const DSubspace& o) const { return n_ == o.n_ && fspan_ == o.fspan_; }
  bool operator!=(const DSubspace& o) const { return !(*this == o); }
  std::string str() const;

 private:
  AlgebraPtr alg_;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
  FSubspace fspan_;
};

// All D-line representatives of D^m (last nonzero coordinate 1), lexicographic.
// The callback returns false to stop. Finite F only.
void for_each_projective_point(const Algebra& alg, std::size_t m, const std::function<bool(const Vec&)>& fn);
std::uint64_t projective_point_count(const Algebra& alg, std::size_t m);
// All k-dimensional right D-subspaces of D^n in canonical order.
void for_each_dsubspace(const AlgebraPtr& alg, std::size_t n, std::size_t k,
                        const std::function<bool(const DSubspace&)>& fn);
std::uint64_t dsubspace_count(const Algebra& alg, std::size_t n, std::size_t k);

// Block upper triangular space with diagonal blocks from the given square spaces.
OperatorSpace joint(const std::vector<OperatorSpace>& blocks);

// S x as an F-subspace of F^{dn}; x given by flat coordinates of D^cols.
FSubspace evaluate(const OperatorSpace& s, const Vec& x);

// {x : x a in U0 for all a in D}.
DSubspace socle(const AlgebraPtr& alg, std::size_t n, const FSubspace& u0);

struct RankResult {
  std::size_t value = 0;
  Verdict verdict = Verdict::Unknown;
  Vec witness;  // a vector attaining the value
  std::string reason;
};

// max_x dim_F(S x).  Exhaustive over D-lines for finite F within budget,
// otherwise random evaluation (lower bound).
RankResult transitive_rank(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

bool is_source_reduced(const OperatorSpace& s);
bool is_target_reduced(const OperatorSpace& s);

// Every D-subspace W with u(W) in W for all u in S. Finite F within budget;
// over infinite fields only the supplied candidates (plus 0 and V) are tested.
std::vector<DSubspace> invariant_subspaces(const OperatorSpace& s, std::uint64_t budget,
                                          const std::vector<DSubspace>* candidates = nullptr);
bool is_invariant(const OperatorSpace& s, const DSubspace& w);

struct FlagDecomposition {
  std::vector<DSubspace> flag;       // 0 = V_0 < V_1 < ... < V_p = V
  DMatrix basis;                     // adapted basis, columns
  OperatorSpace conjugated;          // basis^{-1} S basis, block upper triangular
  std::vector<std::size_t> sizes;    // D-dimensions of the quotients
  std::vector<OperatorSpace> blocks; // diagonal blocks
};

// Throws NotTotallyOrdered when two invariant subspaces are incomparable.
FlagDecomposition flag_decomposition(const OperatorSpace& s, std::uint64_t budget,
                                     const std::vector<DSubspace>* candidates = nullptr);

// {a in D : x a in S x}
FSubspace EV_D(const OperatorSpace& s, const Vec& x);

}  // namespace trivspec

#endif
