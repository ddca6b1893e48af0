#ifndef TRIVSPEC_MPOLY_HPP
#define TRIVSPEC_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "trivspec/field.hpp"

namespace trivspec {

using Monomial = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

// Sparse polynomial in a fixed number of variables z_0 .. z_{nvars-1}.
class MPoly {
 public:
  MPoly() = default;
  MPoly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static MPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
  static MPoly variable(const Field& f, std::size_t nvars, std::size_t i);
  // sum_i coeffs[i] z_i
  static MPoly linear(const Field& f, const Vec& coeffs);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Scalar, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  // Every term has total degree deg (the zero polynomial is homogeneous of every degree).
  bool is_homogeneous(unsigned deg) const;
  Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const Scalar& c) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Scalar eval(const Vec& z) const;
  // Division by the leading-term algorithm; quotient and remainder.
  void divmod(const MPoly& d, MPoly& q, MPoly& r) const;
  // Exact quotient or nullopt when d does not divide this.
  std::optional<MPoly> exact_div(const MPoly& d) const;
  // Coefficients of a 1-homogeneous polynomial.
  Vec linear_coeffs() const;
  std::string str() const;

 private:
  Field field_;
  std::size_t nvars_ = 0;
  std::map<Monomial, Scalar, GrlexLess> terms_;
};

}  // namespace trivspec

#endif
