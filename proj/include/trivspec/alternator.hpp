#ifndef TRIVSPEC_ALTERNATOR_HPP
#define TRIVSPEC_ALTERNATOR_HPP

#include <vector>

#include "trivspec/algebra.hpp"
#include "trivspec/operator_space.hpp"

namespace trivspec {

// B(X, Y) = X^* P Y on D^m x D^n, with X^* = (X^sigma)^T.
struct SesquilinearForm {
  DMatrix gram;
  Matrix sigma;
  Vec eval(const Vec& x, const Vec& y) const;
};

// F-bilinear forms U x V -> F are Gram matrices of size (dim_F U) x (dim_F V),
// b(x, y) = x^T G y.  For an operator space S : U -> V, an alternator is a form
// with b(x, u(x)) = 0 for all x in U and u in S.
std::vector<Matrix> alternator_space(const OperatorSpace& s);

// Whether b(x, u x) = 0 identically.
bool is_alternating_for(const Matrix& gram, const Matrix& realified);

// Maps u : U -> V with b(x, u x) = 0 for all x.  With d_linear the maps are
// D-linear and returned over the algebra (shape n x m); otherwise all F-linear
// maps, as an operator space over F of shape dn x dm.
OperatorSpace alternating_maps(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n,
                               bool d_linear);

struct Radicals {
  FSubspace left;   // {x : b(x, .) = 0}
  FSubspace right;  // {y : b(., y) = 0}
};
Radicals radicals(const Matrix& gram);

// Table of B(x, eps_j) for the F-basis vectors x of D^m and the standard
// D-basis eps_j of D^n, where b = e o B.
struct InducedForm {
  AlgebraPtr alg;
  std::size_t m = 0, n = 0;
  std::vector<Vec> table;  // index l * n + j
  const Vec& at(std::size_t l, std::size_t j) const { return table[l * n + j]; }
};
InducedForm induced_D_form(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n, const Vec& e);

// Recovers the sigma-sesquilinear B with b = e o B; throws NotSesquilinear.
SesquilinearForm recover_sesquilinear(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n,
                                      const Profile& prof);
// Gram matrix of e o B_P.
Matrix bilinear_from_sesquilinear(const DMatrix& p, const Profile& prof);

struct QuadraticTypeDetection {
  Profile profile;
  Matrix alternator;
  SesquilinearForm form;
  NonisotropyResult norm_nonisotropy;
};

// From the unique alternator b of S: b(xa, ya) = q(a) b(x, y) defines q, which is
// classified as a composition form; then b is lifted to a sesquilinear form.
QuadraticTypeDetection detect_quadratic_type(const OperatorSpace& s, std::uint64_t budget = kDefaultBudget);

// Realified right multiplication by a on D^m, on the F-coordinates.
Matrix right_action(const Algebra& alg, std::size_t m, const Vec& a);

}  // namespace trivspec

#endif
