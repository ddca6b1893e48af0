#include "trivspec/mpoly.hpp"

#include <numeric>
#include <sstream>

namespace trivspec {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
  MPoly p(f, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
  MPoly p(f, nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, f.one());
  return p;
}

MPoly MPoly::linear(const Field& f, const Vec& coeffs) {
  MPoly p(f, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

int MPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first)); }

bool MPoly::is_homogeneous(unsigned deg) const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != deg) return false;
  return true;
}

Scalar MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  if (r.nvars_ == 0 && r.terms_.empty()) r = MPoly(o.field_, o.nvars_);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
  MPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(field_, std::max(nvars_, o.nvars_));
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly MPoly::scaled(const Scalar& c) const {
  MPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

Scalar MPoly::eval(const Vec& z) const {
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= z[i];
    acc += t;
  }
  return acc;
}

void MPoly::divmod(const MPoly& d, MPoly& q, MPoly& r) const {
  if (d.is_zero()) fail(Errc::InvalidInput, "division by the zero polynomial");
  q = MPoly(field_, nvars_);
  r = MPoly(field_, nvars_);
  MPoly p = *this;
  const auto& [lm, lc] = *d.terms_.rbegin();
  Scalar lci = lc.inv();
  while (!p.is_zero()) {
    auto [pm, pc] = *p.terms_.rbegin();
    bool divides = true;
    Monomial qm(pm.size(), 0);
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i] < lm[i]) {
        divides = false;
        break;
      }
      qm[i] = pm[i] - lm[i];
    }
    if (divides) {
      MPoly t(field_, nvars_);
      t.add_term(qm, pc * lci);
      q = q + t;
      p = p - t * d;
    } else {
      r.add_term(pm, pc);
      p.terms_.erase(std::prev(p.terms_.end()));
    }
  }
}

std::optional<MPoly> MPoly::exact_div(const MPoly& d) const {
  MPoly q, r;
  divmod(d, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Vec MPoly::linear_coeffs() const {
  if (!is_homogeneous(1)) fail(Errc::NotHomogeneous, "expected a linear form, got " + str());
  Vec v = zero_vec(field_, nvars_);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) v[i] = c;
  return v;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool unit = it->second.is_one() && total_degree(it->first) > 0;
    if (!unit) os << it->second.str();
    bool star = !unit;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (!it->first[i]) continue;
      os << (star ? "*" : "") << "z" << i + 1;
      if (it->first[i] > 1) os << "^" << it->first[i];
      star = true;
    }
  }
  return os.str();
}

}  // namespace trivspec
