#include "trivspec/alternator.hpp"

namespace trivspec {

Vec SesquilinearForm::eval(const Vec& x, const Vec& y) const {
  const Algebra& alg = *gram.algebra();
  const std::size_t d = alg.degree();
  Vec acc = alg.zero();
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    Vec sx = sigma * component(x, d, i);
    for (std::size_t j = 0; j < gram.cols(); ++j)
      acc = add(acc, alg.mul(alg.mul(sx, gram.entry(i, j)), component(y, d, j)));
  }
  return acc;
}

Matrix right_action(const Algebra& alg, std::size_t m, const Vec& a) { return right_scale_matrix(alg, m, a); }

namespace {

// Linear conditions on an unknown vector so that x^T M(unknowns) x vanishes
// identically, where M is given by coefficient matrices M_t (one per unknown).
// Diagonal and symmetrised off-diagonal coefficients; over F_2 also every point.
std::vector<Vec> alternating_conditions(const Field& F, const std::vector<Matrix>& mt) {
  const std::size_t nu = mt.size();
  if (nu == 0) return {};
  const std::size_t m = mt[0].rows();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < m; ++a) {
    Vec r(nu);
    for (std::size_t t = 0; t < nu; ++t) r[t] = mt[t](a, a);
    rows.push_back(std::move(r));
    for (std::size_t c = a + 1; c < m; ++c) {
      Vec s(nu);
      for (std::size_t t = 0; t < nu; ++t) s[t] = mt[t](a, c) + mt[t](c, a);
      rows.push_back(std::move(s));
    }
  }
  if (F.cardinality() == std::optional<std::uint64_t>(2) && m <= 20) {
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
      Vec r = zero_vec(F, nu);
      for (std::size_t a = 0; a < m; ++a) {
        if (!(mask >> a & 1)) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (!(mask >> c & 1)) continue;
          for (std::size_t t = 0; t < nu; ++t) r[t] += mt[t](a, c);
        }
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

bool is_alternating_for(const Matrix& gram, const Matrix& realified) {
  Matrix m = gram * realified;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    if (!m(a, a).is_zero()) return false;
    for (std::size_t c = a + 1; c < m.cols(); ++c)
      if (!(m(a, c) + m(c, a)).is_zero()) return false;
  }
  return true;
}

std::vector<Matrix> alternator_space(const OperatorSpace& s) {
  const Field& F = s.field();
  const std::size_t d = s.algebra()->degree();
  const std::size_t du = s.cols() * d, dv = s.rows() * d;
  // Unknown G(a, b) at index a * dv + b; for each u, G A_u is linear in G.
  std::vector<Vec> rows;
  for (const auto& A : s.realified_basis()) {
    std::vector<Matrix> mt;
    mt.reserve(du * dv);
    for (std::size_t a = 0; a < du; ++a)
      for (std::size_t b = 0; b < dv; ++b) {
        Matrix e(F, du, du);
        for (std::size_t c = 0; c < du; ++c) e(a, c) = A(b, c);
        mt.push_back(std::move(e));
      }
    auto r = alternating_conditions(F, mt);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (std::size_t i = 0; i < du * dv; ++i) sol.push_back(unit_vec(F, du * dv, i));
  } else {
    sol = kernel(Matrix::from_rows(F, rows, du * dv));
  }
  FSubspace canon = FSubspace::span(F, du * dv, sol);
  std::vector<Matrix> out;
  for (const auto& v : canon.basis()) {
    Matrix g(F, du, dv);
    for (std::size_t a = 0; a < du; ++a)
      for (std::size_t b = 0; b < dv; ++b) g(a, b) = v[a * dv + b];
    out.push_back(std::move(g));
  }
  return out;
}

OperatorSpace alternating_maps(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n,
                               bool d_linear) {
  const Field& F = alg->base();
  const std::size_t d = alg->degree();
  if (gram.rows() != m * d || gram.cols() != n * d) fail(Errc::ShapeMismatch, "Gram matrix has the wrong shape");
  std::vector<Matrix> mt;
  if (d_linear) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          DMatrix e(alg, n, m);
          e.set(i, j, alg->basis(k));
          mt.push_back(gram * e.realify());
        }
  } else {
    for (std::size_t i = 0; i < n * d; ++i)
      for (std::size_t j = 0; j < m * d; ++j) {
        Matrix e(F, n * d, m * d);
        e(i, j) = F.one();
        mt.push_back(gram * e);
      }
  }
  auto rows = alternating_conditions(F, mt);
  std::vector<Vec> sol = kernel(Matrix::from_rows(F, rows, mt.size()));
  if (d_linear) return OperatorSpace::from_coords(alg, n, m, FSubspace::span(F, mt.size(), sol));
  return OperatorSpace::from_coords(Algebra::trivial(F), n * d, m * d, FSubspace::span(F, mt.size(), sol));
}

Radicals radicals(const Matrix& gram) {
  const Field& F = gram.field();
  return Radicals{FSubspace::span(F, gram.rows(), left_kernel(gram)), FSubspace::span(F, gram.cols(), kernel(gram))};
}

InducedForm induced_D_form(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n, const Vec& e) {
  const std::size_t d = alg->degree();
  const Field& F = alg->base();
  if (gram.rows() != m * d || gram.cols() != n * d) fail(Errc::ShapeMismatch, "Gram matrix has the wrong shape");
  // E(k, r) = e(e_r e_k), so that e(z a_k) = (E z)_k.
  Matrix E(F, d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) E(k, r) = dot(e, alg->mul(alg->basis(r), alg->basis(k)));
  auto Einv = inverse(E);
  if (!Einv) fail(Errc::SingularDuality, "e does not identify D with its F-dual");
  InducedForm out{alg, m, n, {}};
  for (std::size_t l = 0; l < m * d; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(d);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = gram(l, j * d + k);
      out.table.push_back(*Einv * rhs);
    }
  return out;
}

SesquilinearForm recover_sesquilinear(const Matrix& gram, const AlgebraPtr& alg, std::size_t m, std::size_t n,
                                      const Profile& prof) {
  const std::size_t d = alg->degree();
  InducedForm t = induced_D_form(gram, alg, m, n, prof.e);
  auto B = [&](std::size_t i, const Vec& a, std::size_t j) {
    // B(eps_i a, eps_j) by F-linearity in the first argument.
    Vec acc = alg->zero();
    for (std::size_t s = 0; s < d; ++s)
      if (!a[s].is_zero()) acc = add(acc, scale(a[s], t.at(i * d + s, j)));
    return acc;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t kp = 0; kp < d; ++kp)
      for (std::size_t k = 0; k < d; ++k) {
        Vec ak = alg->basis(k);
        Vec prod = alg->mul(alg->basis(kp), ak);
        Vec sig = prof.sigma * ak;
        for (std::size_t j = 0; j < n; ++j)
          if (B(i, prod, j) != alg->mul(sig, t.at(i * d + kp, j)))
            fail(Errc::NotSesquilinear, "B(x a, y) != sigma(a) B(x, y) at row " + std::to_string(i) + ", basis " +
                                            std::to_string(kp) + ", scalar " + alg->basis_name(k) + ", column " +
                                            std::to_string(j));
      }
  SesquilinearForm out{DMatrix(alg, m, n), prof.sigma};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram.set(i, j, B(i, alg->unit(), j));
  return out;
}

Matrix bilinear_from_sesquilinear(const DMatrix& p, const Profile& prof) {
  const Algebra& alg = *p.algebra();
  const std::size_t d = alg.degree();
  Matrix g(alg.base(), p.rows() * d, p.cols() * d);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t kp = 0; kp < d; ++kp) {
      Vec left = prof.sigma * alg.basis(kp);
      for (std::size_t j = 0; j < p.cols(); ++j) {
        Vec lp = alg.mul(left, p.entry(i, j));
        for (std::size_t k = 0; k < d; ++k) g(i * d + kp, j * d + k) = dot(prof.e, alg.mul(lp, alg.basis(k)));
      }
    }
  return g;
}

QuadraticTypeDetection detect_quadratic_type(const OperatorSpace& s, std::uint64_t budget) {
  const AlgebraPtr& alg = s.algebra();
  const std::size_t d = alg->degree();
  const Field& F = s.field();
  auto alt = alternator_space(s);
  if (alt.size() != 1)
    fail(Errc::AltNotOneDimensional, "alternator space has dimension " + std::to_string(alt.size()));
  const Matrix& G = alt[0];
  std::size_t pr = 0, pc = 0;
  bool found = false;
  for (std::size_t i = 0; i < G.rows() && !found; ++i)
    for (std::size_t j = 0; j < G.cols() && !found; ++j)
      if (!G(i, j).is_zero()) {
        pr = i;
        pc = j;
        found = true;
      }
  auto ratio = [&](const Vec& a) {
    Matrix ga = right_action(*alg, s.cols(), a).transpose() * G * right_action(*alg, s.rows(), a);
    Scalar lam = ga(pr, pc) / G(pr, pc);
    if (ga != G.scaled(lam)) fail(Errc::NotProportional, "b(x a, y a) is not a multiple of b(x, y) for a = " + alg->str(a));
    return lam;
  };
  Matrix q(F, d, d);
  std::vector<Scalar> diag;
  for (std::size_t k = 0; k < d; ++k) diag.push_back(ratio(alg->basis(k)));
  for (std::size_t k = 0; k < d; ++k) {
    q(k, k) = diag[k];
    for (std::size_t l = k + 1; l < d; ++l) q(k, l) = ratio(add(alg->basis(k), alg->basis(l))) - diag[k] - diag[l];
  }
  QuadraticTypeDetection out;
  auto cls = classify_composition_form(*alg, QuadForm{q}, budget);
  out.profile = cls.profile;
  out.norm_nonisotropy = cls.nonisotropy;
  out.alternator = G;
  out.form = recover_sesquilinear(G, alg, s.cols(), s.rows(), out.profile);
  return out;
}

}  // namespace trivspec
