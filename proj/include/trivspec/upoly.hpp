#ifndef TRIVSPEC_UPOLY_HPP
#define TRIVSPEC_UPOLY_HPP

#include <string>
#include <vector>

#include "trivspec/field.hpp"

namespace trivspec {

// Univariate polynomial over a field, ascending coefficients, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Field f, Vec coeffs);
  static UPoly x_minus(const Scalar& r);

  const Field& field() const { return field_; }
  const Vec& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  Vec c_;
};

UPoly gcd(UPoly a, UPoly b);
bool is_separable(const UPoly& f);
// Distinct roots in F (finite fields and Q; throws Unsupported otherwise).
std::vector<Scalar> roots(const UPoly& f);
// f is a product of distinct linear factors over F.
bool splits_with_distinct_roots(const UPoly& f);

}  // namespace trivspec

#endif
