#include "trivspec/upoly.hpp"

#include <algorithm>

namespace trivspec {

UPoly::UPoly(Field f, Vec coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_minus(const Scalar& r) {
  Field f = r.field();
  return UPoly(f, {-r, f.one()});
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(field_, {});
  Vec r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(field_, std::move(r));
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) fail(Errc::ZeroInverse, "polynomial division by zero");
  Vec rem = c_;
  int dd = d.degree();
  Vec quo;
  if (degree() >= dd) quo.assign(c_.size() - dd, field_.zero());
  Scalar li = d.lead().inv();
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    Scalar c = rem[k] * li;
    quo[k - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.c_[j];
  }
  q = UPoly(field_, std::move(quo));
  r = UPoly(field_, std::move(rem));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Scalar li = lead().inv();
  Vec r = c_;
  for (auto& x : r) x = x * li;
  return UPoly(field_, std::move(r));
}

UPoly UPoly::derivative() const {
  Vec r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(field_.from_int(static_cast<std::int64_t>(k)) * c_[k]);
  return UPoly(field_, std::move(r));
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[k].str();
    bool paren = c.find_first_of("+/-") != std::string::npos && k > 0;
    if (k == 0) {
      out += c;
    } else {
      if (!c_[k].is_one()) out += (paren ? "(" + c + ")" : c) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_separable(const UPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

static std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) fail(Errc::Internal, "divisors of zero");
  if (n > mpz_class("1000000000000")) fail(Errc::Unsupported, "rational root search: coefficient too large");
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<mpz_class> out{1};
  for (auto& [p, e] : fac) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Scalar> roots(const UPoly& f) {
  if (f.is_zero()) fail(Errc::InvalidInput, "roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<Scalar> out;
  if (F.kind() == FieldKind::Prime) {
    for (std::uint64_t i = 0; i < F.characteristic(); ++i) {
      Scalar x = F.element(i);
      if (f.eval(x).is_zero()) out.push_back(x);
    }
    return out;
  }
  if (F.kind() != FieldKind::Rational) fail(Errc::Unsupported, "root finding over " + F.name());
  // Clear denominators and apply the rational root test.
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.as_rational()->get_den());
  std::vector<mpz_class> z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(*c.as_rational() * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) out.push_back(F.zero());
  if (low + 1 == z.size()) return out;
  for (const auto& a : divisors(z[low]))
    for (const auto& b : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class cand(s * a, b);
        cand.canonicalize();
        Scalar x(cand);
        if (f.eval(x).is_zero() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
  return out;
}

bool splits_with_distinct_roots(const UPoly& f) {
  if (f.degree() <= 0) return true;
  auto r = roots(f);
  return static_cast<int>(r.size()) == f.degree();
}

}  // namespace trivspec
