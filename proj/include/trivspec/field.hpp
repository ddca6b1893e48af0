#ifndef TRIVSPEC_FIELD_HPP
#define TRIVSPEC_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "trivspec/error.hpp"

namespace trivspec {

// Dense univariate polynomial over F_p, ascending coefficients, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t k);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly scaled(std::uint64_t c) const;
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  void divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  std::string str(const std::string& var) const;

 private:
  void trim();
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);

// Element of F_p(s) kept as num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(FpPoly num, FpPoly den);
  std::uint64_t modulus() const { return num_.modulus() ? num_.modulus() : den_.modulus(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string str() const;

 private:
  FpPoly num_, den_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

enum class FieldKind : std::uint8_t { Prime, Rational, RationalFunction };

class Scalar;

class Field {
 public:
  Field() = default;
  static Field prime(std::uint64_t p);
  static Field rationals();
  static Field rational_functions(std::uint64_t p);
  // "fp:5", "q", "fps:2"
  static Field parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::optional<std::uint64_t> cardinality() const;
  bool is_finite() const { return kind_ == FieldKind::Prime; }
  bool valid() const { return kind_ != FieldKind::Prime || p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar parse_scalar(std::string_view s) const;
  // Finite fields only: the element with index i in [0, q).
  Scalar element(std::uint64_t i) const;
  std::string name() const;
  std::string spec() const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  FieldKind kind_ = FieldKind::Prime;
  std::uint64_t p_ = 0;
};

struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 0;
};

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(ModP m) : rep_(m) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(RatFunc r) : rep_(std::move(r)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Sign for rationals; 0/1 otherwise.
  int sign() const;
  // Representative in [0, p) for prime fields.
  std::uint64_t mod_value() const;
  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&rep_); }
  const RatFunc* as_ratfunc() const { return std::get_if<RatFunc>(&rep_); }
  std::string str() const;

 private:
  std::variant<ModP, mpq_class, RatFunc> rep_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
void axpy(Vec& y, const Scalar& c, const Vec& x);

// Finite-field element counts and index/coordinate conversion.
std::uint64_t ipow(std::uint64_t b, std::uint64_t e);
// q^e if it is at most limit, otherwise nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e, std::uint64_t limit);

}  // namespace trivspec

#endif
