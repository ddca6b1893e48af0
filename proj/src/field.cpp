#include "trivspec/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace trivspec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroDivisorFound: return "ZeroDivisorFound";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::UnitViolation: return "UnitViolation";
    case Errc::NotQuadraticType: return "NotQuadraticType";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::Isotropic: return "Isotropic";
    case Errc::UnknownNonisotropy: return "UnknownNonisotropy";
    case Errc::Singular: return "Singular";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::HyperplaneContainsUnit: return "HyperplaneContainsUnit";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotTargetReduced: return "NotTargetReduced";
    case Errc::AltNotOneDimensional: return "AltNotOneDimensional";
    case Errc::NotProportional: return "NotProportional";
    case Errc::NotSesquilinear: return "NotSesquilinear";
    case Errc::SpanningRankTooLow: return "SpanningRankTooLow";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::HypothesisFails: return "HypothesisFails";
    case Errc::NotTotallyOrdered: return "NotTotallyOrdered";
    case Errc::NotOptimalDim: return "NotOptimalDim";
    case Errc::CardinalityHypothesisFails: return "CardinalityHypothesisFails";
    case Errc::SpectrumNotTrivial: return "SpectrumNotTrivial";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::DegenerateTrace: return "DegenerateTrace";
    case Errc::CharTwo: return "CharTwo";
    case Errc::NotSeparableType: return "NotSeparableType";
    case Errc::WrongProfile: return "WrongProfile";
    case Errc::NotNonisotropic: return "NotNonisotropic";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Unsupported: return "Unsupported";
    case Errc::SingularDuality: return "SingularDuality";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::CounterexampleFound: return "CounterexampleFound";
    case Errc::ExtensionFound: return "ExtensionFound";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) fail(Errc::ZeroInverse, "inverse of zero");
  return powmod(a, p - 2, p);
}

static bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// ---------- FpPoly ----------

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t k) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::uint64_t p = p_ ? p_ : o.p_;
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % p;
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator-() const {
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? p_ - c_[i] : 0;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  std::uint64_t p = p_ ? p_ : o.p_;
  if (is_zero() || o.is_zero()) return FpPoly(p, {});
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p)) % p;
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], c, p_);
  return FpPoly(p_, std::move(r));
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
  if (d.is_zero()) fail(Errc::ZeroInverse, "polynomial division by zero");
  std::uint64_t p = p_ ? p_ : d.p_;
  std::vector<std::uint64_t> rem = c_;
  std::vector<std::uint64_t> quo;
  std::uint64_t li = invmod(d.lead(), p);
  int dd = d.degree();
  if (static_cast<int>(rem.size()) - 1 >= dd) quo.assign(rem.size() - dd, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    std::uint64_t c = mulmod(rem[k], li, p);
    if (!c) continue;
    quo[k - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      std::uint64_t sub = mulmod(c, d.c_[j], p);
      rem[k - dd + j] = (rem[k - dd + j] + p - sub) % p;
    }
  }
  q = FpPoly(p, std::move(quo));
  r = FpPoly(p, std::move(rem));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(lead(), p_));
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(mulmod(c_[k], k % p_, p_));
  return FpPoly(p_, std::move(r));
}

std::string FpPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k]) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c_[k]);
      continue;
    }
    if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------- RatFunc ----------

RatFunc::RatFunc(FpPoly num, FpPoly den) {
  if (den.is_zero()) fail(Errc::ZeroInverse, "rational function with zero denominator");
  std::uint64_t p = den.modulus();
  if (num.is_zero()) {
    num_ = FpPoly(p, {});
    den_ = FpPoly::constant(p, 1);
    return;
  }
  FpPoly g = gcd(num, den);
  FpPoly q, r;
  num.divmod(g, q, r);
  num = q;
  den.divmod(g, q, r);
  den = q;
  std::uint64_t li = invmod(den.lead(), p);
  num_ = num.scaled(li);
  den_ = den.scaled(li);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(Errc::ZeroInverse, "inverse of zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str("s");
  return "(" + num_.str("s") + ")/(" + den_.str("s") + ")";
}

static std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

static std::int64_t parse_int(const std::string& s) {
  if (s.empty()) fail(Errc::InvalidInput, "empty integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (...) {
    fail(Errc::InvalidInput, "bad integer '" + s + "'");
  }
  if (pos != s.size()) fail(Errc::InvalidInput, "bad integer '" + s + "'");
  return v;
}

static std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

static FpPoly parse_fp_poly(std::string s, std::uint64_t p) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) fail(Errc::InvalidInput, "empty polynomial");
  FpPoly acc(p, {});
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) fail(Errc::InvalidInput, "bad polynomial '" + s + "'");
    std::uint64_t c = 1;
    std::size_t k = 0;
    auto spos = term.find('s');
    if (spos == std::string::npos) {
      c = reduce(parse_int(term), p);
    } else {
      std::string cs = term.substr(0, spos);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) c = reduce(parse_int(cs), p);
      std::string rest = term.substr(spos + 1);
      if (rest.empty()) {
        k = 1;
      } else if (rest[0] == '^') {
        std::int64_t e = parse_int(rest.substr(1));
        if (e < 0) fail(Errc::InvalidInput, "negative exponent");
        k = static_cast<std::size_t>(e);
      } else {
        fail(Errc::InvalidInput, "bad term '" + term + "'");
      }
    }
    if (neg) c = c ? p - c : 0;
    acc = acc + FpPoly::monomial(p, c, k);
    i = j;
  }
  return acc;
}

// ---------- Field ----------

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 31)) fail(Errc::InvalidInput, "not a supported prime: " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

Field Field::rationals() {
  Field f;
  f.kind_ = FieldKind::Rational;
  f.p_ = 0;
  return f;
}

Field Field::rational_functions(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 31)) fail(Errc::InvalidInput, "not a supported prime: " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::RationalFunction;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view spec) {
  std::string s = strip(spec);
  if (s == "q" || s == "Q") return rationals();
  auto colon = s.find(':');
  if (colon == std::string::npos) fail(Errc::InvalidInput, "bad field spec '" + s + "'");
  std::string kind = s.substr(0, colon);
  std::int64_t p = parse_int(s.substr(colon + 1));
  if (p <= 0) fail(Errc::InvalidInput, "bad field characteristic");
  if (kind == "fp") return prime(static_cast<std::uint64_t>(p));
  if (kind == "fps") return rational_functions(static_cast<std::uint64_t>(p));
  fail(Errc::InvalidInput, "bad field spec '" + s + "'");
}

std::optional<std::uint64_t> Field::cardinality() const {
  if (kind_ == FieldKind::Prime) return p_;
  return std::nullopt;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  switch (kind_) {
    case FieldKind::Prime:
      if (!p_) fail(Errc::InvalidInput, "uninitialized field");
      return Scalar(ModP{reduce(v, p_), p_});
    case FieldKind::Rational:
      return Scalar(mpq_class(static_cast<long>(v)));
    case FieldKind::RationalFunction:
      return Scalar(RatFunc(FpPoly::constant(p_, reduce(v, p_)), FpPoly::constant(p_, 1)));
  }
  fail(Errc::Internal, "bad field kind");
}

Scalar Field::element(std::uint64_t i) const {
  if (kind_ != FieldKind::Prime) fail(Errc::Unsupported, "element enumeration needs a finite field");
  return Scalar(ModP{i % p_, p_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s = strip(text);
  if (s.empty()) fail(Errc::InvalidInput, "empty scalar");
  switch (kind_) {
    case FieldKind::Prime: {
      auto slash = s.find('/');
      if (slash == std::string::npos) return from_int(parse_int(s));
      Scalar a = from_int(parse_int(s.substr(0, slash)));
      Scalar b = from_int(parse_int(s.substr(slash + 1)));
      return a / b;
    }
    case FieldKind::Rational: {
      mpq_class q;
      if (q.set_str(s, 10) != 0) fail(Errc::InvalidInput, "bad rational '" + s + "'");
      if (q.get_den() == 0) fail(Errc::InvalidInput, "zero denominator in '" + s + "'");
      q.canonicalize();
      return Scalar(q);
    }
    case FieldKind::RationalFunction: {
      int depth = 0;
      std::size_t slash = std::string::npos;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == '/' && depth == 0) slash = i;
      }
      if (slash == std::string::npos) return Scalar(RatFunc(parse_fp_poly(s, p_), FpPoly::constant(p_, 1)));
      FpPoly den = parse_fp_poly(s.substr(slash + 1), p_);
      if (den.is_zero()) fail(Errc::InvalidInput, "zero denominator in '" + s + "'");
      return Scalar(RatFunc(parse_fp_poly(s.substr(0, slash), p_), den));
    }
  }
  fail(Errc::Internal, "bad field kind");
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Prime: return "F_" + std::to_string(p_);
    case FieldKind::Rational: return "Q";
    case FieldKind::RationalFunction: return "F_" + std::to_string(p_) + "(s)";
  }
  return "?";
}

std::string Field::spec() const {
  switch (kind_) {
    case FieldKind::Prime: return "fp:" + std::to_string(p_);
    case FieldKind::Rational: return "q";
    case FieldKind::RationalFunction: return "fps:" + std::to_string(p_);
  }
  return "?";
}

// ---------- Scalar ----------

Field Scalar::field() const {
  switch (rep_.index()) {
    case 0: return Field::prime(std::get<ModP>(rep_).p);
    case 1: return Field::rationals();
    default: return Field::rational_functions(std::get<RatFunc>(rep_).modulus());
  }
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0: return std::get<ModP>(rep_).v == 0;
    case 1: return sgn(std::get<mpq_class>(rep_)) == 0;
    default: return std::get<RatFunc>(rep_).is_zero();
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0: return std::get<ModP>(rep_).v == 1;
    case 1: return std::get<mpq_class>(rep_) == 1;
    default: {
      const auto& r = std::get<RatFunc>(rep_);
      return r.num().is_one() && r.den().is_one();
    }
  }
}

static void check_same(const Scalar& a, const Scalar& b, std::size_t ia, std::size_t ib, std::uint64_t pa,
                       std::uint64_t pb) {
  (void)a;
  (void)b;
  if (ia != ib || pa != pb || (ia == 0 && pa == 0)) fail(Errc::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::inv() const {
  switch (rep_.index()) {
    case 0: {
      const auto& m = std::get<ModP>(rep_);
      if (!m.p) fail(Errc::FieldMismatch, "uninitialized scalar");
      return Scalar(ModP{invmod(m.v, m.p), m.p});
    }
    case 1: {
      const auto& q = std::get<mpq_class>(rep_);
      if (sgn(q) == 0) fail(Errc::ZeroInverse, "inverse of zero");
      mpq_class r = 1 / q;
      return Scalar(r);
    }
    default: {
      const auto& r = std::get<RatFunc>(rep_);
      if (r.is_zero()) fail(Errc::ZeroInverse, "inverse of zero");
      return Scalar(RatFunc(r.den(), r.num()));
    }
  }
}

#define TRIVSPEC_BINOP(OP, MODEXPR)                                                            \
  Scalar Scalar::operator OP(const Scalar& o) const {                                         \
    if (rep_.index() == 0 && o.rep_.index() == 0) {                                           \
      const auto& a = std::get<ModP>(rep_);                                                   \
      const auto& b = std::get<ModP>(o.rep_);                                                 \
      if (a.p != b.p || !a.p) fail(Errc::FieldMismatch, "scalars from different fields");    \
      const std::uint64_t p = a.p;                                                            \
      return Scalar(ModP{MODEXPR, p});                                                        \
    }                                                                                         \
    if (rep_.index() != o.rep_.index()) fail(Errc::FieldMismatch, "scalars from different fields"); \
    if (rep_.index() == 1) {                                                                  \
      mpq_class r = std::get<mpq_class>(rep_) OP std::get<mpq_class>(o.rep_);                 \
      return Scalar(r);                                                                       \
    }                                                                                         \
    const auto& a = std::get<RatFunc>(rep_);                                                  \
    const auto& b = std::get<RatFunc>(o.rep_);                                                \
    check_same(*this, o, 2, 2, a.modulus(), b.modulus());                                     \
    return Scalar(a OP b);                                                                    \
  }

TRIVSPEC_BINOP(+, (a.v + b.v) % p)
TRIVSPEC_BINOP(-, (a.v + p - b.v) % p)
TRIVSPEC_BINOP(*, mulmod(a.v, b.v, p))

#undef TRIVSPEC_BINOP

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0: {
      const auto& m = std::get<ModP>(rep_);
      return Scalar(ModP{m.v ? m.p - m.v : 0, m.p});
    }
    case 1: {
      mpq_class r = -std::get<mpq_class>(rep_);
      return Scalar(r);
    }
    default: return Scalar(-std::get<RatFunc>(rep_));
  }
}

bool Scalar::operator==(const Scalar& o) const {
  if (rep_.index() != o.rep_.index()) return false;
  switch (rep_.index()) {
    case 0: {
      const auto& a = std::get<ModP>(rep_);
      const auto& b = std::get<ModP>(o.rep_);
      return a.p == b.p && a.v == b.v;
    }
    case 1: return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
    default: return std::get<RatFunc>(rep_) == std::get<RatFunc>(o.rep_);
  }
}

int Scalar::sign() const {
  if (rep_.index() == 1) return sgn(std::get<mpq_class>(rep_));
  return is_zero() ? 0 : 1;
}

std::uint64_t Scalar::mod_value() const {
  if (rep_.index() != 0) fail(Errc::FieldMismatch, "not a prime-field scalar");
  return std::get<ModP>(rep_).v;
}

std::string Scalar::str() const {
  switch (rep_.index()) {
    case 0: return std::to_string(std::get<ModP>(rep_).v);
    case 1: return std::get<mpq_class>(rep_).get_str();
    default: return std::get<RatFunc>(rep_).str();
  }
}

// ---------- vectors ----------

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) fail(Errc::ShapeMismatch, "dot product shape");
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  if (r > limit) return std::nullopt;
  return r;
}

}  // namespace trivspec
