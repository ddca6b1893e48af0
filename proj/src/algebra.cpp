#include "trivspec/algebra.hpp"

#include <array>
#include <algorithm>
#include <map>
#include <sstream>

namespace trivspec {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::CertifiedByAlternator: return "CertifiedByAlternator";
    case Verdict::CertifiedProbabilistic: return "CertifiedProbabilistic";
    case Verdict::Unknown: return "Unknown";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
    case Verdict::Refuted: return "Refuted";
  }
  return "Unknown";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Certified:
    case Verdict::CertifiedByAlternator:
    case Verdict::CertifiedProbabilistic: return 0;
    case Verdict::Refuted: return 1;
    default: return 2;
  }
}

bool is_certified(Verdict v) { return exit_code(v) == 0; }

const char* type_tag(QuadraticType t) {
  switch (t) {
    case QuadraticType::Trivial: return "trivial";
    case QuadraticType::SeparableQuadratic: return "separable-quadratic";
    case QuadraticType::Quaternion: return "quaternion";
    case QuadraticType::HyperRadicial: return "hyper-radicial";
  }
  return "?";
}

QuadraticType parse_type_tag(const std::string& s) {
  if (s == "trivial") return QuadraticType::Trivial;
  if (s == "separable-quadratic") return QuadraticType::SeparableQuadratic;
  if (s == "quaternion") return QuadraticType::Quaternion;
  if (s == "hyper-radicial") return QuadraticType::HyperRadicial;
  fail(Errc::InvalidInput, "unknown type tag '" + s + "'");
}

Vec apply(const Matrix& m, const Vec& v) { return m * v; }

Scalar apply_functional(const Vec& e, const Vec& x) { return dot(e, x); }

Scalar QuadForm::operator()(const Vec& x) const {
  Scalar acc = coeffs.field().zero();
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = i; j < coeffs.cols(); ++j)
      if (!coeffs(i, j).is_zero() && !x[j].is_zero()) acc += coeffs(i, j) * x[i] * x[j];
  }
  return acc;
}

// ---------- construction ----------

AlgebraPtr Algebra::create(const Field& f, std::size_t d, const Vec& structure, const Vec& unit, Family family,
                           std::optional<Profile> profile) {
  if (d == 0) fail(Errc::InvalidInput, "algebra degree must be positive");
  if (structure.size() != d * d * d) fail(Errc::InvalidInput, "structure constants must have d^3 entries");
  if (unit.size() != d) fail(Errc::InvalidInput, "unit must have d coordinates");
  for (const auto& s : structure)
    if (s.field() != f) fail(Errc::FieldMismatch, "structure constant outside the base field");
  for (const auto& s : unit)
    if (s.field() != f) fail(Errc::FieldMismatch, "unit coordinate outside the base field");
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->field_ = f;
  a->d_ = d;
  a->c_ = structure;
  a->unit_ = unit;
  a->family_ = std::move(family);
  a->profile_ = std::move(profile);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(f, d, d), r(f, d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        l(k, j) = a->c(i, j, k);
        r(k, j) = a->c(j, i, k);
      }
    a->lb_.push_back(l);
    a->rb_.push_back(r);
  }
  return a;
}

AlgebraPtr Algebra::trivial(const Field& f) {
  return create(f, 1, {f.one()}, {f.one()}, Family{FamilyKind::Trivial, {}});
}

static Vec quadratic_structure(const Field& f, const Scalar& beta, const Scalar& gamma) {
  Vec c(8, f.zero());
  auto at = [&](int i, int j, int k) -> Scalar& { return c[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = f.one();
  at(0, 1, 1) = f.one();
  at(1, 0, 1) = f.one();
  at(1, 1, 0) = gamma;
  at(1, 1, 1) = beta;
  return c;
}

AlgebraPtr Algebra::quadratic(const Field& f, const Scalar& beta, const Scalar& gamma) {
  return create(f, 2, quadratic_structure(f, beta, gamma), {f.one(), f.zero()},
                Family{FamilyKind::Quadratic, {beta, gamma}});
}

AlgebraPtr Algebra::hyper_radicial(const Field& f, const Scalar& c) {
  if (f.characteristic() != 2) fail(Errc::NotQuadraticType, "hyper-radicial algebras need characteristic 2");
  return create(f, 2, quadratic_structure(f, f.zero(), c), {f.one(), f.zero()},
                Family{FamilyKind::HyperRadicial, {c}});
}

AlgebraPtr Algebra::quaternion(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.characteristic() == 2) fail(Errc::NotQuadraticType, "quaternion symbols need characteristic != 2");
  Vec c(64, f.zero());
  auto set = [&](int i, int j, int k, const Scalar& v) { c[(i * 4 + j) * 4 + k] = v; };
  Scalar one = f.one();
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, one);
    set(i, 0, i, one);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, -(a * b));
  set(1, 2, 3, one);
  set(2, 1, 3, -one);
  set(1, 3, 2, a);
  set(3, 1, 2, -a);
  set(2, 3, 1, -b);
  set(3, 2, 1, b);
  return create(f, 4, c, {one, f.zero(), f.zero(), f.zero()}, Family{FamilyKind::Quaternion, {a, b}});
}

AlgebraPtr Algebra::extension(const Field& f, const Vec& modulus) {
  if (modulus.size() < 2 || !modulus.back().is_one()) fail(Errc::InvalidInput, "modulus must be monic of degree >= 1");
  std::size_t d = modulus.size() - 1;
  // Powers t^0..t^{2d-2} reduced modulo m.
  std::vector<Vec> pw;
  Vec cur = unit_vec(f, d, 0);
  for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
    pw.push_back(cur);
    Vec next = zero_vec(f, d);
    for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
    const Scalar& top = cur[d - 1];
    for (std::size_t i = 0; i < d; ++i) next[i] -= top * modulus[i];
    cur = next;
  }
  Vec c(d * d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = pw[i + j][k];
  Family fam{FamilyKind::Extension, modulus};
  if (d == 1) fam = Family{FamilyKind::Trivial, {}};
  if (d == 2) {
    Scalar beta = -modulus[1], gamma = -modulus[0];
    if (f.characteristic() == 2 && beta.is_zero())
      fam = Family{FamilyKind::HyperRadicial, {gamma}};
    else
      fam = Family{FamilyKind::Quadratic, {beta, gamma}};
  }
  return create(f, d, c, unit_vec(f, d, 0), fam);
}

static bool irreducible_over_fp(const FpPoly& m) {
  std::uint64_t p = m.modulus();
  int d = m.degree();
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> c(k + 1);
      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        c[i] = t % p;
        t /= p;
      }
      c[k] = 1;
      FpPoly g(p, c), q, r;
      m.divmod(g, q, r);
      if (r.is_zero()) return false;
    }
  }
  return true;
}

AlgebraPtr Algebra::default_extension(const Field& f, std::size_t d) {
  if (d == 1) return trivial(f);
  if (f.kind() != FieldKind::Prime) fail(Errc::Unsupported, "default extensions exist only over prime fields");
  std::uint64_t p = f.characteristic();
  std::uint64_t count = ipow(p, d);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> c(d + 1);
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = t % p;
      t /= p;
    }
    c[d] = 1;
    if (c[0] == 0) continue;
    if (!irreducible_over_fp(FpPoly(p, c))) continue;
    Vec m;
    for (auto x : c) m.push_back(f.from_int(static_cast<std::int64_t>(x)));
    return extension(f, m);
  }
  fail(Errc::Internal, "no irreducible modulus found");
}

bool Algebra::same_as(const Algebra& o) const {
  return this == &o || (field_ == o.field_ && d_ == o.d_ && c_ == o.c_ && unit_ == o.unit_);
}

std::optional<std::uint64_t> Algebra::cardinality() const {
  auto q = field_.cardinality();
  if (!q) return std::nullopt;
  return checked_pow(*q, d_, UINT64_MAX / 2);
}

std::string Algebra::basis_name(std::size_t k) const {
  switch (family_.kind) {
    case FamilyKind::Trivial: return "1";
    case FamilyKind::Quaternion: return std::string(1, "1ijk"[k]);
    case FamilyKind::Quadratic:
    case FamilyKind::HyperRadicial:
    case FamilyKind::Extension:
      if (k == 0) return "1";
      if (k == 1) return "t";
      return "t^" + std::to_string(k);
    case FamilyKind::Custom: break;
  }
  return "e" + std::to_string(k);
}

std::string Algebra::name() const {
  std::ostringstream os;
  switch (family_.kind) {
    case FamilyKind::Trivial: os << field_.name(); break;
    case FamilyKind::Quadratic:
      os << field_.name() << "[t]/(t^2-(" << family_.params[0].str() << ")t-(" << family_.params[1].str() << "))";
      break;
    case FamilyKind::HyperRadicial: os << field_.name() << "[t]/(t^2-(" << family_.params[0].str() << "))"; break;
    case FamilyKind::Quaternion:
      os << "(" << family_.params[0].str() << "," << family_.params[1].str() << "/" << field_.name() << ")";
      break;
    case FamilyKind::Extension: {
      os << field_.name() << "[t]/(" << UPoly(field_, family_.params).str() << ")";
      break;
    }
    case FamilyKind::Custom: os << "algebra of degree " << d_ << " over " << field_.name(); break;
  }
  return os.str();
}

// ---------- arithmetic ----------

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  if (a.size() != d_ || b.size() != d_) fail(Errc::ShapeMismatch, "element has wrong number of coordinates");
  Vec r = zero();
  for (std::size_t i = 0; i < d_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < d_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += ab * c(i, j, k);
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(field_, d_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    if (!a[i].is_zero()) m = m + lb_[i].scaled(a[i]);
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(field_, d_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    if (!a[i].is_zero()) m = m + rb_[i].scaled(a[i]);
  return m;
}

Vec Algebra::inv(const Vec& a) const {
  if (is_zero_vec(a)) fail(Errc::ZeroInverse, "inverse of zero");
  auto x = solve(left_mult(a), unit_);
  if (!x || mul(*x, a) != unit_) fail(Errc::NotInvertible, "element " + str(a) + " is not invertible");
  return *x;
}

Scalar Algebra::trace(const Vec& a) const {
  Matrix l = left_mult(a);
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < d_; ++i) t += l(i, i);
  return t;
}

Vec Algebra::pow(const Vec& a, std::uint64_t e) const {
  Vec r = unit_, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Vec Algebra::element(std::uint64_t index) const {
  std::uint64_t q = field_.characteristic();
  Vec v(d_);
  for (std::size_t k = d_; k-- > 0;) {
    v[k] = field_.element(index % q);
    index /= q;
  }
  return v;
}

std::string Algebra::str(const Vec& a) const {
  std::string out;
  for (std::size_t k = 0; k < d_; ++k) {
    if (a[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string name = basis_name(k);
    std::string c = a[k].str();
    if (c.find_first_of("+/-") != std::string::npos) c = "(" + c + ")";
    if (name == "1")
      out += c;
    else if (a[k].is_one())
      out += name;
    else
      out += c + "*" + name;
  }
  return out.empty() ? "0" : out;
}

Elem::Elem(AlgebraPtr alg, Vec coords) : alg_(std::move(alg)), c_(std::move(coords)) {
  if (c_.size() != alg_->degree()) fail(Errc::ShapeMismatch, "element has wrong number of coordinates");
}

void Elem::check(const Elem& o) const {
  if (!alg_->same_as(*o.alg_)) fail(Errc::DescriptorMismatch, "elements of different algebras");
}

Elem Elem::operator+(const Elem& o) const {
  check(o);
  return Elem(alg_, add(c_, o.c_));
}
Elem Elem::operator-(const Elem& o) const {
  check(o);
  return Elem(alg_, sub(c_, o.c_));
}
Elem Elem::operator*(const Elem& o) const {
  check(o);
  return Elem(alg_, alg_->mul(c_, o.c_));
}
Elem Elem::inv() const { return Elem(alg_, alg_->inv(c_)); }
Scalar Elem::trace() const { return alg_->trace(c_); }
bool Elem::operator==(const Elem& o) const { return alg_->same_as(*o.alg_) && c_ == o.c_; }

// ---------- division check ----------

DivisionReport verify_division_algebra(const Algebra& alg, std::uint64_t budget, Rng& rng) {
  const std::size_t d = alg.degree();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec ei = alg.basis(i), ej = alg.basis(j), ek = alg.basis(k);
        if (alg.mul(alg.mul(ei, ej), ek) != alg.mul(ei, alg.mul(ej, ek)))
          fail(Errc::AssociativityViolation, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) +
                                         " != e" + std::to_string(i) + " (e" + std::to_string(j) + " e" +
                                         std::to_string(k) + ")");
      }
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei = alg.basis(i);
    if (alg.mul(alg.unit(), ei) != ei || alg.mul(ei, alg.unit()) != ei)
      fail(Errc::UnitViolation, "declared unit does not act as identity on e" + std::to_string(i));
  }

  DivisionReport rep;
  auto zero_divisor_of = [&](const Vec& a) -> std::optional<Vec> {
    auto ker = kernel(alg.left_mult(a));
    if (ker.empty()) return std::nullopt;
    return ker.front();
  };

  if (alg.base().is_finite()) {
    auto card = alg.cardinality();
    if (card && *card - 1 <= budget) {
      for (std::uint64_t idx = 1; idx < *card; ++idx) {
        Vec a = alg.element(idx);
        if (auto b = zero_divisor_of(a)) {
          rep.verdict = Verdict::Refuted;
          rep.zero_divisor = std::make_pair(a, *b);
          rep.reason = "zero divisor: (" + alg.str(a) + ")(" + alg.str(*b) + ") = 0";
          return rep;
        }
      }
      rep.verdict = Verdict::Certified;
      rep.reason = "all nonzero elements invertible (exhaustive)";
      return rep;
    }
  }

  const int samples = 64;
  for (int s = 0; s < samples; ++s) {
    Vec a = rng.vec(alg.base(), d);
    if (is_zero_vec(a)) continue;
    if (auto b = zero_divisor_of(a)) {
      rep.verdict = Verdict::Refuted;
      rep.zero_divisor = std::make_pair(a, *b);
      rep.reason = "zero divisor: (" + alg.str(a) + ")(" + alg.str(*b) + ") = 0";
      return rep;
    }
  }
  if (alg.base().is_finite()) {
    rep.verdict = Verdict::BudgetExceeded;
    rep.reason = "too many elements for exhaustive check; " + std::to_string(samples) + " samples invertible";
    return rep;
  }
  rep.verdict = Verdict::CertifiedProbabilistic;
  rep.reason = std::to_string(samples) + " random elements invertible";
  try {
    Profile prof = standard_profile(alg);
    auto iso = check_nonisotropic(prof.q, budget);
    if (iso.verdict == Verdict::Certified)
      rep.reason = "norm form x sigma(x) is multiplicative and anisotropic (" + iso.reason + "); " + rep.reason;
  } catch (const Error&) {
  }
  return rep;
}

// ---------- profiles ----------

static std::size_t unit_index(const Algebra& alg) {
  for (std::size_t k = 0; k < alg.degree(); ++k)
    if (!alg.unit()[k].is_zero()) return k;
  fail(Errc::UnitViolation, "zero unit");
}

// lambda with v = lambda * 1, if v lies in F.1.
static std::optional<Scalar> scalar_part(const Algebra& alg, const Vec& v) {
  std::size_t u = unit_index(alg);
  Scalar lambda = v[u] / alg.unit()[u];
  if (scale(lambda, alg.unit()) != v) return std::nullopt;
  return lambda;
}

static Vec apply_sigma(const Matrix& sigma, const Vec& x) { return sigma * x; }

QuadForm norm_form(const Algebra& alg, const Matrix& sigma) {
  const std::size_t d = alg.degree();
  Matrix q(alg.base(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec ei = alg.basis(i), ej = alg.basis(j);
      Vec v = alg.mul(ei, apply_sigma(sigma, ej));
      if (i != j) v = add(v, alg.mul(ej, apply_sigma(sigma, ei)));
      auto lam = scalar_part(alg, v);
      if (!lam) fail(Errc::NotQuadraticType, "x sigma(x) is not a scalar");
      q(i, j) = *lam;
    }
  return QuadForm{q};
}

void validate_profile(const Algebra& alg, const Profile& prof) {
  const std::size_t d = alg.degree();
  const Field& F = alg.base();
  if (prof.sigma.rows() != d || prof.sigma.cols() != d || prof.e.size() != d || prof.q.dim() != d)
    fail(Errc::NotQuadraticType, "profile shape does not match the algebra");
  auto bad = [](const std::string& why) { fail(Errc::NotQuadraticType, why); };
  if (apply_sigma(prof.sigma, alg.unit()) != alg.unit()) bad("sigma(1) != 1");
  if (prof.sigma * prof.sigma != Matrix::identity(F, d)) bad("sigma is not an involution");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ei = alg.basis(i), ej = alg.basis(j);
      if (apply_sigma(prof.sigma, alg.mul(ei, ej)) !=
          alg.mul(apply_sigma(prof.sigma, ej), apply_sigma(prof.sigma, ei)))
        bad("sigma is not an anti-automorphism");
    }
  if (norm_form(alg, prof.sigma).coeffs != prof.q.coeffs) bad("q differs from x sigma(x)");
  if (is_zero_vec(prof.e)) bad("e is zero");
  bool sigma_id = prof.sigma == Matrix::identity(F, d);
  switch (prof.type) {
    case QuadraticType::Trivial:
      if (d != 1) bad("trivial type needs degree 1");
      break;
    case QuadraticType::SeparableQuadratic:
      if (d != 2 || sigma_id) bad("separable quadratic type needs degree 2 and sigma != id");
      break;
    case QuadraticType::Quaternion:
      if (d != 4 || sigma_id) bad("quaternion type needs degree 4 and sigma != id");
      break;
    case QuadraticType::HyperRadicial:
      if (d < 2 || !sigma_id || F.characteristic() != 2) bad("hyper-radicial type needs char 2 and sigma = id");
      break;
  }
  if (prof.type == QuadraticType::SeparableQuadratic || prof.type == QuadraticType::Quaternion) {
    for (std::size_t k = 0; k < d; ++k) {
      Vec ek = alg.basis(k);
      Vec s = add(ek, apply_sigma(prof.sigma, ek));
      auto lam = scalar_part(alg, s);
      if (!lam || *lam != prof.e[k]) bad("e is not x + sigma(x)");
    }
  }
  if (prof.type == QuadraticType::Trivial) {
    for (std::size_t k = 0; k < d; ++k)
      if (prof.e[k] != alg.trace(alg.basis(k))) bad("e is not the trace");
  }
}

Profile standard_profile(const Algebra& alg, std::optional<QuadraticType> hint) {
  const Field& F = alg.base();
  const std::size_t d = alg.degree();
  if (alg.attached_profile() && (!hint || *hint == alg.attached_profile()->type)) {
    validate_profile(alg, *alg.attached_profile());
    return *alg.attached_profile();
  }
  QuadraticType type;
  if (hint) {
    type = *hint;
  } else {
    switch (alg.family().kind) {
      case FamilyKind::Trivial: type = QuadraticType::Trivial; break;
      case FamilyKind::Quadratic: type = QuadraticType::SeparableQuadratic; break;
      case FamilyKind::Quaternion: type = QuadraticType::Quaternion; break;
      case FamilyKind::HyperRadicial: type = QuadraticType::HyperRadicial; break;
      default:
        if (d == 1) {
          type = QuadraticType::Trivial;
          break;
        }
        fail(Errc::NotQuadraticType, "algebra " + alg.name() + " has no built-in quadratic-type profile");
    }
  }
  Scalar zero = F.zero(), one = F.one();
  Profile prof;
  prof.type = type;
  auto require_standard_unit = [&]() {
    if (alg.unit() != alg.basis(0)) fail(Errc::NotQuadraticType, "built-in profiles need the unit as first basis vector");
  };
  switch (type) {
    case QuadraticType::Trivial: {
      if (d != 1) fail(Errc::NotQuadraticType, "trivial type needs degree 1");
      prof.sigma = Matrix::identity(F, 1);
      prof.e = {alg.trace(alg.basis(0))};
      prof.q = norm_form(alg, prof.sigma);
      break;
    }
    case QuadraticType::SeparableQuadratic: {
      if (d != 2) fail(Errc::NotQuadraticType, "separable quadratic type needs degree 2");
      require_standard_unit();
      Scalar beta = alg.c(1, 1, 1);
      if (F.characteristic() == 2 && beta.is_zero())
        fail(Errc::NotQuadraticType, "t^2 = c is inseparable in characteristic 2");
      prof.sigma = Matrix::identity(F, 2);
      prof.sigma(0, 1) = beta;
      prof.sigma(1, 1) = -one;
      prof.e = {F.from_int(2), beta};
      prof.q = norm_form(alg, prof.sigma);
      break;
    }
    case QuadraticType::Quaternion: {
      if (d != 4 || F.characteristic() == 2) fail(Errc::NotQuadraticType, "quaternion type needs degree 4, char != 2");
      require_standard_unit();
      auto ref = Algebra::quaternion(F, alg.c(1, 1, 0), alg.c(2, 2, 0));
      if (ref->structure() != alg.structure())
        fail(Errc::NotQuadraticType, "structure constants are not in quaternion-symbol form");
      prof.sigma = Matrix::identity(F, 4).scaled(-one);
      prof.sigma(0, 0) = one;
      prof.e = {F.from_int(2), zero, zero, zero};
      prof.q = norm_form(alg, prof.sigma);
      break;
    }
    case QuadraticType::HyperRadicial: {
      if (F.characteristic() != 2 || d != 2) fail(Errc::NotQuadraticType, "hyper-radicial type needs char 2, degree 2");
      require_standard_unit();
      if (!alg.c(1, 1, 1).is_zero()) fail(Errc::NotQuadraticType, "t^2 has a linear term; not hyper-radicial");
      prof.sigma = Matrix::identity(F, 2);
      prof.e = {one, zero};
      prof.q = norm_form(alg, prof.sigma);
      break;
    }
  }
  validate_profile(alg, prof);
  return prof;
}

// ---------- nonisotropy ----------

static bool next_tuple(std::vector<std::uint64_t>& t, std::uint64_t base, std::size_t len) {
  for (std::size_t i = len; i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

static std::optional<Vec> small_isotropic_search(const QuadForm& q, std::uint64_t budget) {
  const Field& F = q.coeffs.field();
  const std::size_t m = q.dim();
  std::vector<Scalar> pool;
  if (F.kind() == FieldKind::Rational) {
    for (int v : {0, 1, -1, 2, -2}) pool.push_back(F.from_int(v));
  } else if (F.kind() == FieldKind::RationalFunction) {
    for (const char* s : {"0", "1", "s", "1+s", "s^2", "1+s^2"}) pool.push_back(F.parse_scalar(s));
  } else {
    return std::nullopt;
  }
  auto total = checked_pow(pool.size(), m, budget);
  if (!total) return std::nullopt;
  std::vector<std::uint64_t> t(m, 0);
  while (next_tuple(t, pool.size(), m)) {
    Vec x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = pool[t[i]];
    if (q(x).is_zero()) return x;
  }
  return std::nullopt;
}

// Sign pattern of the Gram matrix of a rational quadratic form via LDL^T.
static bool rational_definite(const QuadForm& q) {
  const Field& F = q.coeffs.field();
  const std::size_t m = q.dim();
  Matrix s(F, m, m);
  Scalar half = F.from_int(2).inv();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      if (i == j)
        s(i, i) = q.coeffs(i, i);
      else
        s(i, j) = s(j, i) = q.coeffs(i, j) * half;
    }
  int sign = 0;
  for (std::size_t k = 0; k < m; ++k) {
    int sk = s(k, k).sign();
    if (sk == 0) return false;
    if (sign == 0) sign = sk;
    if (sk != sign) return false;
    Scalar inv = s(k, k).inv();
    for (std::size_t i = k + 1; i < m; ++i) {
      Scalar f = s(i, k) * inv;
      for (std::size_t j = k; j < m; ++j) s(i, j) -= f * s(k, j);
    }
  }
  return true;
}

// Coordinates of a in the basis (1, s) of F_2(s) over its subfield of squares,
// written as rational functions in u = s^2.
static std::pair<Scalar, Scalar> square_class_coords(const RatFunc& a) {
  FpPoly w = a.num() * a.den();
  std::vector<std::uint64_t> ev, od;
  for (int k = 0; k <= w.degree(); ++k) (k % 2 ? od : ev).push_back(w.coeff(k));
  std::vector<std::uint64_t> dd;
  for (int k = 0; k <= a.den().degree(); ++k) dd.push_back(a.den().coeff(k));
  // den(s)^2 = den(u) since the coefficients lie in F_2.
  FpPoly den(2, dd);
  return {Scalar(RatFunc(FpPoly(2, ev), den)), Scalar(RatFunc(FpPoly(2, od), den))};
}

static std::optional<NonisotropyResult> char2_diagonal_certificate(const QuadForm& q) {
  const Field& F = q.coeffs.field();
  if (F.kind() != FieldKind::RationalFunction || F.characteristic() != 2) return std::nullopt;
  const std::size_t m = q.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!q.coeffs(i, j).is_zero()) return std::nullopt;
  NonisotropyResult res;
  Matrix coords(F, m, 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar& a = q.coeffs(i, i);
    if (a.is_zero()) {
      res.verdict = Verdict::Refuted;
      res.witness = unit_vec(F, m, i);
      res.reason = "zero diagonal coefficient";
      return res;
    }
    auto [e, o] = square_class_coords(*a.as_ratfunc());
    coords(i, 0) = e;
    coords(i, 1) = o;
  }
  auto dep = left_kernel(coords);
  if (dep.empty()) {
    res.verdict = Verdict::Certified;
    res.reason = "diagonal coefficients independent over the subfield of squares";
    return res;
  }
  // x_i = c_i(s) satisfies x_i^2 = c_i(s^2).
  Vec x = dep.front();
  if (q(x).is_zero()) {
    res.verdict = Verdict::Refuted;
    res.witness = x;
    res.reason = "dependent diagonal coefficients";
    return res;
  }
  return std::nullopt;
}

NonisotropyResult check_nonisotropic(const QuadForm& q, std::uint64_t budget) {
  const Field& F = q.coeffs.field();
  const std::size_t m = q.dim();
  NonisotropyResult res;
  if (F.is_finite()) {
    std::uint64_t p = F.characteristic();
    auto total = checked_pow(p, m, budget);
    if (!total) {
      res.verdict = Verdict::BudgetExceeded;
      res.reason = "too many vectors for exhaustive check";
      return res;
    }
    // Projective representatives with last nonzero coordinate 1.
    for (std::size_t last = 0; last < m; ++last) {
      std::vector<std::uint64_t> t(last, 0);
      do {
        Vec x = zero_vec(F, m);
        for (std::size_t i = 0; i < last; ++i) x[i] = F.element(t[i]);
        x[last] = F.one();
        if (q(x).is_zero()) {
          res.verdict = Verdict::Refuted;
          res.witness = x;
          res.reason = "isotropic vector";
          return res;
        }
      } while (last > 0 && next_tuple(t, p, last));
    }
    res.verdict = Verdict::Certified;
    res.reason = "exhaustive";
    return res;
  }
  if (F.kind() == FieldKind::Rational && rational_definite(q)) {
    res.verdict = Verdict::Certified;
    res.reason = "definite form";
    return res;
  }
  if (auto c = char2_diagonal_certificate(q)) return *c;
  if (auto x = small_isotropic_search(q, budget)) {
    res.verdict = Verdict::Refuted;
    res.witness = *x;
    res.reason = "isotropic vector";
    return res;
  }
  res.verdict = Verdict::Unknown;
  res.reason = "no structural certificate";
  return res;
}

// ---------- composition forms ----------

static std::optional<std::pair<Vec, Vec>> multiplicativity_witness(const Algebra& alg, const QuadForm& q) {
  const Field& F = alg.base();
  const std::size_t d = alg.degree();
  std::vector<Scalar> pool;
  if (F.is_finite())
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(F.characteristic(), 3); ++i) pool.push_back(F.element(i));
  else
    for (int v : {0, 1, -1, 2}) pool.push_back(F.from_int(v));
  std::vector<std::uint64_t> t(2 * d, 0);
  while (next_tuple(t, pool.size(), 2 * d)) {
    Vec x(d), y(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = pool[t[i]];
      y[i] = pool[t[d + i]];
    }
    if (q(alg.mul(x, y)) != q(x) * q(y)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

CompositionClassification classify_composition_form(const Algebra& alg, const QuadForm& q, std::uint64_t budget) {
  const Field& F = alg.base();
  const std::size_t d = alg.degree();
  if (q.dim() != d || q.coeffs.cols() != d) fail(Errc::ShapeMismatch, "quadratic form dimension differs from degree");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!q.coeffs(i, j).is_zero()) fail(Errc::InvalidInput, "quadratic form coefficients must be upper triangular");

  // q(xy) - q(x) q(y) as a polynomial in the coordinates of x and y.
  std::map<std::array<std::size_t, 4>, Scalar> diff;
  auto key = [](std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    return std::array<std::size_t, 4>{std::min(a, b), std::max(a, b), std::min(c, e), std::max(c, e)};
  };
  auto bump = [&](const std::array<std::size_t, 4>& k, const Scalar& v) {
    auto it = diff.find(k);
    if (it == diff.end())
      diff.emplace(k, v);
    else
      it->second += v;
  };
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k; l < d; ++l) {
      if (q.coeffs(k, l).is_zero()) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (alg.c(i, j, k).is_zero()) continue;
          for (std::size_t i2 = 0; i2 < d; ++i2)
            for (std::size_t j2 = 0; j2 < d; ++j2) {
              if (alg.c(i2, j2, l).is_zero()) continue;
              bump(key(i, i2, j, j2), q.coeffs(k, l) * alg.c(i, j, k) * alg.c(i2, j2, l));
            }
        }
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = c; e < d; ++e) bump(key(a, b, c, e), -(q.coeffs(a, b) * q.coeffs(c, e)));
  bool multiplicative =
      std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second.is_zero(); });
  if (!multiplicative) {
    std::string msg = "q(xy) != q(x) q(y)";
    if (auto w = multiplicativity_witness(alg, q)) msg += " at x = " + alg.str(w->first) + ", y = " + alg.str(w->second);
    fail(Errc::NotMultiplicative, msg);
  }

  CompositionClassification out;
  out.nonisotropy = check_nonisotropic(q, budget);
  if (out.nonisotropy.verdict == Verdict::Refuted)
    fail(Errc::Isotropic, "q vanishes at " + alg.str(*out.nonisotropy.witness));
  if (out.nonisotropy.verdict != Verdict::Certified)
    fail(Errc::UnknownNonisotropy, "cannot certify that q is anisotropic: " + out.nonisotropy.reason);

  // Polar form b(x, y) = q(x + y) - q(x) - q(y).
  Matrix polar(F, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      if (i == j)
        polar(i, i) = F.from_int(2) * q.coeffs(i, i);
      else
        polar(i, j) = polar(j, i) = q.coeffs(i, j);
    }
  Profile prof;
  prof.q = q;
  if (!determinant(polar).is_zero()) {
    Vec tr = polar.transpose() * alg.unit();  // tr(x) = b(1, x)
    prof.sigma = Matrix(F, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec col = sub(scale(tr[j], alg.unit()), alg.basis(j));
      for (std::size_t i = 0; i < d; ++i) prof.sigma(i, j) = col[i];
    }
    if (d == 1) {
      prof.type = QuadraticType::Trivial;
      prof.e = {alg.trace(alg.basis(0))};
    } else if (d == 2) {
      prof.type = QuadraticType::SeparableQuadratic;
      prof.e = tr;
    } else if (d == 4) {
      prof.type = QuadraticType::Quaternion;
      prof.e = tr;
    } else {
      fail(Errc::NotQuadraticType, "nondegenerate composition form in degree " + std::to_string(d));
    }
  } else {
    if (F.characteristic() != 2) fail(Errc::NotQuadraticType, "degenerate polar form outside characteristic 2");
    prof.sigma = Matrix::identity(F, d);
    std::size_t u = unit_index(alg);
    prof.e = zero_vec(F, d);
    prof.e[u] = alg.unit()[u].inv();
    prof.type = d == 1 ? QuadraticType::Trivial : QuadraticType::HyperRadicial;
  }
  validate_profile(alg, prof);
  out.profile = prof;
  return out;
}

}  // namespace trivspec
