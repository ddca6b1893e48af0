#ifndef TRIVSPEC_ALGEBRA_HPP
#define TRIVSPEC_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trivspec/field.hpp"
#include "trivspec/linalg.hpp"
#include "trivspec/rng.hpp"
#include "trivspec/upoly.hpp"
#include "trivspec/verdict.hpp"

namespace trivspec {

enum class QuadraticType { Trivial, SeparableQuadratic, Quaternion, HyperRadicial };

const char* type_tag(QuadraticType t);
QuadraticType parse_type_tag(const std::string& s);

// Quadratic form q(x) = sum_{i<=j} q(i,j) x_i x_j; the matrix is upper triangular.
struct QuadForm {
  Matrix coeffs;
  Scalar operator()(const Vec& x) const;
  std::size_t dim() const { return coeffs.rows(); }
};

// (sigma, e, q) for an algebra of quadratic type.
struct Profile {
  QuadraticType type = QuadraticType::Trivial;
  Matrix sigma;  // column j = coordinates of sigma(e_j)
  Vec e;         // e(x) = sum_k e[k] x_k
  QuadForm q;
};

enum class FamilyKind { Custom, Trivial, Quadratic, Quaternion, HyperRadicial, Extension };

struct Family {
  FamilyKind kind = FamilyKind::Custom;
  Vec params;  // quadratic: (beta, gamma) for t^2 = beta t + gamma; quaternion: (a, b);
               // hyper-radicial: (c) for t^2 = c; extension: monic modulus coefficients
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional associative F-algebra given by structure constants
// e_i e_j = sum_k c(i,j,k) e_k, meant to be a division algebra.
class Algebra {
 public:
  static AlgebraPtr create(const Field& f, std::size_t d, const Vec& structure, const Vec& unit,
                           Family family = {}, std::optional<Profile> profile = std::nullopt);
  static AlgebraPtr trivial(const Field& f);
  static AlgebraPtr quadratic(const Field& f, const Scalar& beta, const Scalar& gamma);
  static AlgebraPtr quaternion(const Field& f, const Scalar& a, const Scalar& b);
  static AlgebraPtr hyper_radicial(const Field& f, const Scalar& c);
  // F[t]/(m) with m monic of degree d (coefficients ascending, leading 1 included).
  static AlgebraPtr extension(const Field& f, const Vec& modulus);
  // F_{p^d} over F_p through the first monic irreducible modulus in lexicographic order.
  static AlgebraPtr default_extension(const Field& f, std::size_t d);

  const Field& base() const { return field_; }
  std::size_t degree() const { return d_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * d_ + j) * d_ + k]; }
  const Vec& structure() const { return c_; }
  const Vec& unit() const { return unit_; }
  const Family& family() const { return family_; }
  const std::optional<Profile>& attached_profile() const { return profile_; }
  bool same_as(const Algebra& o) const;
  std::string name() const;
  // Number of elements when F is finite.
  std::optional<std::uint64_t> cardinality() const;

  Vec zero() const { return zero_vec(field_, d_); }
  Vec one() const { return unit_; }
  Vec basis(std::size_t k) const { return unit_vec(field_, d_, k); }
  Vec from_scalar(const Scalar& s) const { return scale(s, unit_); }
  Vec mul(const Vec& a, const Vec& b) const;
  // Inverse; throws NotInvertible.
  Vec inv(const Vec& a) const;
  // Matrix of x -> a x (resp. x -> x a) on coordinates.
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
  const Matrix& left_basis(std::size_t i) const { return lb_[i]; }
  const Matrix& right_basis(std::size_t i) const { return rb_[i]; }
  Scalar trace(const Vec& a) const;  // Tr_{D/F}(a) = tr L(a)
  Vec pow(const Vec& a, std::uint64_t e) const;
  // Element from its index in lexicographic coordinate order (finite F).
  Vec element(std::uint64_t index) const;
  std::string str(const Vec& a) const;
  std::string basis_name(std::size_t k) const;

 private:
  Algebra() = default;
  Field field_;
  std::size_t d_ = 0;
  Vec c_;
  Vec unit_;
  Family family_;
  std::optional<Profile> profile_;
  std::vector<Matrix> lb_, rb_;
};

// Element bound to its algebra, for checked arithmetic.
class Elem {
 public:
  Elem(AlgebraPtr alg, Vec coords);
  const AlgebraPtr& algebra() const { return alg_; }
  const Vec& coords() const { return c_; }
  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem inv() const;
  Scalar trace() const;
  bool operator==(const Elem& o) const;
  std::string str() const { return alg_->str(c_); }

 private:
  void check(const Elem& o) const;
  AlgebraPtr alg_;
  Vec c_;
};

struct DivisionReport {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<std::pair<Vec, Vec>> zero_divisor;  // a b = 0
};

// Associativity and unit are checked exactly (throwing AssociativityViolation / UnitViolation);
// invertibility exhaustively over finite F within budget, by sampling otherwise.
DivisionReport verify_division_algebra(const Algebra& alg, std::uint64_t budget, Rng& rng);

// Standard (sigma, e, q) of a built-in family; hint overrides the recorded family.
Profile standard_profile(const Algebra& alg, std::optional<QuadraticType> hint = std::nullopt);
// Exact consistency checks on a profile; throws NotQuadraticType with a reason.
void validate_profile(const Algebra& alg, const Profile& prof);

struct NonisotropyResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Vec> witness;
  std::string reason;
};

// Decides q(x) != 0 for x != 0: exhaustive over finite F, definiteness over Q,
// square-class independence for diagonal forms in characteristic 2.
NonisotropyResult check_nonisotropic(const QuadForm& q, std::uint64_t budget);

struct CompositionClassification {
  Profile profile;
  NonisotropyResult nonisotropy;
};

// Classifies a multiplicative quadratic form on D and derives (sigma, e).
CompositionClassification classify_composition_form(const Algebra& alg, const QuadForm& q,
                                                     std::uint64_t budget = kDefaultBudget);
// Norm form x -> x sigma(x) of a profile, recomputed from sigma.
QuadForm norm_form(const Algebra& alg, const Matrix& sigma);

Vec apply(const Matrix& m, const Vec& v);
Scalar apply_functional(const Vec& e, const Vec& x);

}  // namespace trivspec

#endif
