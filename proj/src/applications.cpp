#include "trivspec/applications.hpp"

#include <functional>

#include "trivspec/intransitivity.hpp"

namespace trivspec {

namespace {

DMatrix elementary(const AlgebraPtr& alg, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j,
                   const Vec& a) {
  DMatrix e(alg, rows, cols);
  e.set(i, j, a);
  return e;
}

Vec digits_to_coeffs(const Field& f, std::uint64_t index, std::size_t k) {
  Vec c(k);
  const std::uint64_t q = f.characteristic();
  for (std::size_t i = k; i-- > 0;) {
    c[i] = f.element(index % q);
    index /= q;
  }
  return c;
}

// Visits every element of S (finite F, q^dim within budget) or samples random
// ones.  pred returns false on a bad element, which becomes the witness.
ElementwiseVerdict scan_elements(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples,
                                 const std::function<bool(const DMatrix&)>& pred, const std::string& what) {
  ElementwiseVerdict v;
  const Field& F = s.field();
  std::optional<std::uint64_t> total;
  if (F.is_finite()) total = checked_pow(F.characteristic(), s.dim(), budget + 1);
  if (total && *total <= budget) {
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
      DMatrix m = s.element(digits_to_coeffs(F, idx, s.dim()));
      ++v.checked;
      if (!pred(m)) {
        v.verdict = Verdict::Refuted;
        v.witness = m;
        v.reason = "element that is not " + what;
        return v;
      }
    }
    v.verdict = Verdict::Certified;
    v.reason = "all " + std::to_string(*total) + " elements are " + what;
    return v;
  }
  for (std::size_t t = 0; t < samples; ++t) {
    DMatrix m = s.element(rng.vec(F, s.dim()));
    ++v.checked;
    if (!pred(m)) {
      v.verdict = Verdict::Refuted;
      v.witness = m;
      v.reason = "sampled element that is not " + what;
      return v;
    }
  }
  v.verdict = Verdict::Unknown;
  v.reason = std::to_string(samples) + " sampled elements are " + what;
  return v;
}

std::size_t unit_coordinate(const Algebra& alg) {
  for (std::size_t k = 0; k < alg.degree(); ++k)
    if (!alg.unit()[k].is_zero()) return k;
  fail(Errc::UnitViolation, "zero unit");
}

}  // namespace

AffineSpace build_affine_minrank(const AlgebraPtr& alg, std::size_t n, std::size_t p, std::size_t r,
                                 const std::optional<OperatorSpace>& core) {
  if (r == 0 || r > std::min(n, p)) fail(Errc::InvalidInput, "need 1 <= r <= min(n, p)");
  const std::size_t d = alg->degree();
  OperatorSpace c = core ? *core : construct_triangular_model(alg, r);
  if (c.rows() != r || c.cols() != r) fail(Errc::ShapeMismatch, "core must be r x r");
  AffineSpace a;
  a.base = DMatrix(alg, n, p);
  a.base.set_block(0, 0, DMatrix::identity(alg, r));
  std::vector<DMatrix> gens;
  for (const auto& m : c.basis()) {
    DMatrix g(alg, n, p);
    g.set_block(0, 0, m);
    gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (i < r && j < r) continue;
      for (std::size_t k = 0; k < d; ++k) gens.push_back(elementary(alg, n, p, i, j, alg->basis(k)));
    }
  a.direction = OperatorSpace::span(alg, n, p, gens);
  return a;
}

MinrankVerdict verify_minrank(const AffineSpace& a, std::size_t r, std::uint64_t budget, Rng& rng,
                              std::size_t samples) {
  MinrankVerdict v;
  const OperatorSpace& s = a.direction;
  const Field& F = s.field();
  const std::size_t d = s.algebra()->degree();
  std::optional<std::uint64_t> total;
  if (F.is_finite()) total = checked_pow(F.characteristic(), s.dim(), budget + 1);
  if (total && *total <= budget) {
    auto t = first_combination_below_rank(s.realified_basis(), a.base.realify(), r * d, &v.checked);
    if (t) {
      Vec c;
      for (auto x : *t) c.push_back(F.element(x));
      v.verdict = Verdict::Refuted;
      v.witness = a.element(c);
      v.min_rank_seen = rank_D(*v.witness);
      v.reason = "element of rank " + std::to_string(v.min_rank_seen) + " < " + std::to_string(r);
    } else {
      v.verdict = Verdict::Certified;
      v.reason = "all " + std::to_string(*total) + " elements have rank >= " + std::to_string(r);
    }
    return v;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    DMatrix m = a.element(rng.vec(F, s.dim()));
    ++v.checked;
    std::size_t rk = rank(m.realify()) / d;
    v.min_rank_seen = std::min(v.min_rank_seen, rk);
    if (rk < r) {
      v.verdict = Verdict::Refuted;
      v.witness = m;
      v.reason = "sampled element of rank " + std::to_string(rk);
      return v;
    }
  }
  v.verdict = Verdict::Unknown;
  v.reason = std::to_string(samples) + " sampled elements have rank >= " + std::to_string(r);
  return v;
}

AffineSpace build_affine_nonsingular(const AlgebraPtr& alg, const std::vector<DMatrix>& ps, const Profile& prof,
                                     std::uint64_t budget) {
  std::size_t n = 0;
  std::vector<OperatorSpace> blocks;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const DMatrix& p = ps[i];
    if (p.rows() != p.cols()) fail(Errc::NotSquare, "P_" + std::to_string(i) + " is not square");
    NonisotropyResult iso = is_e_nonisotropic(p, prof, budget);
    if (iso.verdict == Verdict::Refuted) {
      std::string w;
      for (const auto& x : *iso.witness) w += (w.empty() ? "" : ", ") + x.str();
      fail(Errc::NotNonisotropic, "P_" + std::to_string(i) + " is e-isotropic at (" + w + ")");
    }
    blocks.push_back(construct_SH(alg, p.rows(), prof));
    n += p.rows();
  }
  AffineSpace a;
  a.base = DMatrix(alg, n, n);
  std::size_t off = 0;
  for (const auto& p : ps) {
    a.base.set_block(off, off, p);
    off += p.rows();
  }
  a.direction = blocks.empty() ? OperatorSpace(alg, 0, 0) : joint(blocks);
  return a;
}

bool verify_equivalence_certificate(const DMatrix& p, const DMatrix& p2, const Scalar& alpha, const DMatrix& q,
                                    const Profile& prof) {
  if (p.rows() != p.cols() || p2.rows() != p.rows() || p2.cols() != p.cols() || q.rows() != p.rows() ||
      q.cols() != p.cols())
    fail(Errc::ShapeMismatch, "P, P' and Q must be n x n");
  DMatrix diff = p2 - (q.star(prof.sigma) * p * q).scaled(alpha);
  return construct_SH(p.algebra(), p.rows(), prof).contains(diff);
}

std::optional<Scalar> find_equivalence_scalar(const DMatrix& p, const DMatrix& p2, const DMatrix& q,
                                              const Profile& prof) {
  OperatorSpace sh = construct_SH(p.algebra(), p.rows(), prof);
  DMatrix m = q.star(prof.sigma) * p * q;
  std::vector<Vec> cols;
  for (const auto& b : sh.basis()) cols.push_back(b.flat());
  cols.push_back(m.flat());
  auto sol = solve(Matrix::from_cols(p.algebra()->base(), cols, m.flat().size()), p2.flat());
  if (!sol) return std::nullopt;
  return sol->back();
}

OperatorSpace hermitian_space(const AlgebraPtr& alg, std::size_t n, const Profile& prof) {
  const Field& F = alg->base();
  if (F.characteristic() == 2) fail(Errc::CharTwo, "Hermitian spaces need characteristic other than 2");
  if (prof.type == QuadraticType::HyperRadicial) fail(Errc::NotSeparableType, "hyper-radicial profile");
  validate_profile(*alg, prof);
  const std::size_t d = alg->degree(), nu = n * n * d;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * d + k; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec r = zero_vec(F, nu);
        r[at(i, j, k)] += F.one();
        for (std::size_t l = 0; l < d; ++l) r[at(j, i, l)] -= prof.sigma(k, l);
        rows.push_back(std::move(r));
      }
  std::vector<Vec> sol;
  if (rows.empty()) return OperatorSpace(alg, n, n);
  sol = kernel(Matrix::from_rows(F, rows, nu));
  return OperatorSpace::from_coords(alg, n, n, FSubspace::span(F, nu, sol));
}

Scalar inner_product(const DMatrix& a, const DMatrix& b) {
  const Algebra& alg = *a.algebra();
  if (alg.trace(alg.unit()).is_zero()) fail(Errc::DegenerateTrace, "Tr(1) = 0: the characteristic divides d");
  DMatrix ab = a * b;
  Vec tr = alg.zero();
  for (std::size_t i = 0; i < ab.rows() && i < ab.cols(); ++i) tr = add(tr, ab.entry(i, i));
  return alg.trace(tr);
}

OperatorSpace orthogonal_complement(const OperatorSpace& s) {
  const AlgebraPtr& alg = s.algebra();
  const Field& F = s.field();
  const std::size_t d = alg->degree(), n = s.rows(), m = s.cols(), nu = n * m * d;
  if (alg->trace(alg->unit()).is_zero()) fail(Errc::DegenerateTrace, "Tr(1) = 0: the characteristic divides d");
  // <A, B> = sum_{i,j} Tr(a_ij b_ji) with B of shape m x n.
  Matrix t(F, d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) t(k, l) = alg->trace(alg->mul(alg->basis(k), alg->basis(l)));
  std::vector<Vec> rows;
  for (const auto& a : s.basis()) {
    Vec r = zero_vec(F, nu);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec aij = a.entry(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          if (aij[k].is_zero()) continue;
          for (std::size_t l = 0; l < d; ++l) r[(j * n + i) * d + l] += aij[k] * t(k, l);
        }
      }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return OperatorSpace::full(alg, m, n);
  return OperatorSpace::from_coords(alg, m, n, FSubspace::span(F, nu, kernel(Matrix::from_rows(F, rows, nu))));
}

namespace {

// p in S with p x = x and im p in x D, if any.
std::optional<DMatrix> rank1_idempotent_through(const OperatorSpace& s, const Vec& x) {
  const AlgebraPtr& alg = s.algebra();
  const Field& F = s.field();
  const std::size_t n = s.rows();
  DMatrix q = quotient_map(DSubspace::span(alg, n, {x}));
  DMatrix xc = DMatrix::column(alg, x);
  std::vector<Vec> cols;
  for (const auto& b : s.basis()) {
    Vec c = (b * xc).flat();
    Vec k = (q * b).flat();
    c.insert(c.end(), k.begin(), k.end());
    cols.push_back(std::move(c));
  }
  Vec rhs = x;
  Vec zeros = zero_vec(F, (n - 1) * n * alg->degree());
  rhs.insert(rhs.end(), zeros.begin(), zeros.end());
  if (cols.empty()) return std::nullopt;
  auto sol = solve(Matrix::from_cols(F, cols, rhs.size()), rhs);
  if (!sol) return std::nullopt;
  return s.element(*sol);
}

}  // namespace

IdempotentVerdict has_full_rank1_idempotent_property(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  if (!s.square()) fail(Errc::NotSquare, "idempotents need a square space");
  IdempotentVerdict v;
  const AlgebraPtr& alg = s.algebra();
  const Field& F = s.field();
  const std::size_t n = s.rows();
  if (n == 0) {
    v.verdict = Verdict::Certified;
    v.reason = "no lines";
    return v;
  }
  if (F.is_finite()) {
    std::uint64_t count = projective_point_count(*alg, n);
    if (count != UINT64_MAX && count <= budget) {
      bool bad = false;
      for_each_projective_point(*alg, n, [&](const Vec& x) {
        auto p = rank1_idempotent_through(s, x);
        if (!p) {
          v.verdict = Verdict::Refuted;
          v.witness_direction = x;
          v.reason = "no rank 1 idempotent onto this line";
          bad = true;
          return false;
        }
        if (!v.example) v.example = p;
        return true;
      });
      if (!bad) {
        v.verdict = Verdict::Certified;
        v.reason = "all " + std::to_string(count) + " D-lines";
      }
      return v;
    }
  }
  // Hermitian pattern: p = x (x^* x)^{-1} x^* whenever x^* x never vanishes.
  try {
    Profile prof = alg->attached_profile() ? *alg->attached_profile() : standard_profile(*alg);
    if (F.characteristic() != 2 && prof.type != QuadraticType::HyperRadicial &&
        s.contains(hermitian_space(alg, n, prof)) &&
        is_e_nonisotropic(DMatrix::identity(alg, n), prof, budget).verdict == Verdict::Certified) {
      Vec x = rng.vec(F, n * alg->degree());
      if (is_zero_vec(x)) x = unit_vec(F, n * alg->degree(), 0);
      DMatrix xc = DMatrix::column(alg, x);
      DMatrix xs = xc.star(prof.sigma);
      Vec nrm = (xs * xc).entry(0, 0);
      DMatrix p = xc.right_scaled(alg->inv(nrm)) * xs;
      if (s.contains(p) && p * p == p && p * xc == xc) {
        v.verdict = Verdict::Certified;
        v.example = p;
        v.reason = "S contains H_n(D) and x^* x is anisotropic";
        return v;
      }
    }
  } catch (const Error&) {
  }
  for (int t = 0; t < 32; ++t) {
    Vec x = rng.vec(F, n * alg->degree());
    if (is_zero_vec(x)) continue;
    auto p = rank1_idempotent_through(s, x);
    if (!p) {
      v.verdict = Verdict::Refuted;
      v.witness_direction = x;
      v.reason = "no rank 1 idempotent onto a sampled line";
      return v;
    }
    if (!v.example) v.example = p;
  }
  v.verdict = Verdict::Unknown;
  v.reason = "32 sampled lines admit rank 1 idempotents";
  return v;
}

OperatorSpace diag_model_C(const AlgebraPtr& alg, std::size_t n, const Profile& prof) {
  if (prof.type != QuadraticType::SeparableQuadratic || alg->degree() != 2)
    fail(Errc::WrongProfile, "needs a separable quadratic extension");
  const std::size_t u = unit_coordinate(*alg);
  const std::size_t k = 1 - u;
  Vec i = alg->basis(k);
  if (alg->mul(i, i) != scale(-alg->base().one(), alg->unit()))
    fail(Errc::WrongProfile, "the non-unit basis element does not square to -1");
  std::vector<DMatrix> gens{DMatrix::identity(alg, n)};
  OperatorSpace h = hermitian_space(alg, n, prof);
  for (const auto& m : h.basis()) gens.push_back(m.left_scaled(i));
  return OperatorSpace::span(alg, n, n, gens);
}

OperatorSpace semisimple_space_Sb(const Matrix& b, std::uint64_t budget) {
  const Field& F = b.field();
  const std::size_t n = b.rows();
  if (b.cols() != n) fail(Errc::NotSquare, "b must be square");
  NonisotropyResult iso = check_nonisotropic(quadratic_form_of(b), budget);
  if (iso.verdict == Verdict::Refuted) {
    std::string w;
    for (const auto& x : *iso.witness) w += (w.empty() ? "" : ", ") + x.str();
    fail(Errc::Isotropic, "b(x, x) = 0 at x = (" + w + ")");
  }
  // (b U)_{ij} = (b U)_{ji}, unknown U(k, j) at k * n + j.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec r = zero_vec(F, n * n);
      for (std::size_t k = 0; k < n; ++k) {
        r[k * n + j] += b(i, k);
        r[k * n + i] -= b(j, k);
      }
      rows.push_back(std::move(r));
    }
  AlgebraPtr triv = Algebra::trivial(F);
  if (rows.empty()) return OperatorSpace::full(triv, n, n);
  return OperatorSpace::from_coords(triv, n, n, FSubspace::span(F, n * n, kernel(Matrix::from_rows(F, rows, n * n))));
}

ElementwiseVerdict all_semisimple(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples) {
  return scan_elements(s, budget, rng, samples, [](const DMatrix& m) { return is_semisimple(m); }, "semisimple");
}

ElementwiseVerdict all_diagonalisable(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples) {
  return scan_elements(s, budget, rng, samples, [](const DMatrix& m) { return is_F_diagonalisable(m); },
                       "F-diagonalisable");
}

ElementwiseVerdict nilpotent_free(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples) {
  return scan_elements(
      s, budget, rng, samples,
      [](const DMatrix& m) {
        if (m.is_zero()) return true;
        Matrix r = m.realify(), pw = r;
        for (std::size_t k = 1; k < r.rows(); ++k) pw = pw * r;
        return !pw.is_zero();
      },
      "zero or non-nilpotent");
}

MotzkinTausskyReport motzkin_taussky_finite(std::uint64_t q, std::size_t n, std::uint64_t budget) {
  Field F = Field::prime(q);
  AlgebraPtr triv = Algebra::trivial(F);
  MotzkinTausskyReport rep;
  const std::size_t nn = n * n;
  auto count = checked_pow(q, nn, budget + 1);
  if (!count || *count > budget || *count * *count > budget) {
    rep.verdict = Verdict::BudgetExceeded;
    return rep;
  }
  const std::uint64_t N = *count;
  std::vector<Matrix> mats;
  std::vector<std::vector<std::uint64_t>> digits;
  std::vector<bool> diag;
  for (std::uint64_t idx = 0; idx < N; ++idx) {
    Vec c = digits_to_coeffs(F, idx, nn);
    Matrix m(F, n, n);
    std::vector<std::uint64_t> dg(nn);
    for (std::size_t t = 0; t < nn; ++t) {
      m(t / n, t % n) = c[t];
      dg[t] = c[t].mod_value();
    }
    diag.push_back(is_F_diagonalisable(DMatrix::from_flat(triv, n, n, c)));
    mats.push_back(std::move(m));
    digits.push_back(std::move(dg));
  }
  auto index_of = [&](std::uint64_t lam, std::uint64_t u, std::uint64_t v) {
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < nn; ++t) idx = idx * q + (lam * digits[u][t] + digits[v][t]) % q;
    return idx;
  };
  for (std::uint64_t u = 0; u < N; ++u) {
    if (!diag[u]) {
      rep.pairs += N;
      continue;
    }
    for (std::uint64_t v = 0; v < N; ++v) {
      ++rep.pairs;
      bool hyp = true;
      for (std::uint64_t lam = 0; lam < q && hyp; ++lam) hyp = diag[index_of(lam, u, v)];
      if (!hyp) continue;
      ++rep.hypothesis_pairs;
      if (mats[u] * mats[v] != mats[v] * mats[u]) {
        rep.verdict = Verdict::Refuted;
        rep.counterexample = std::make_pair(mats[u], mats[v]);
        return rep;
      }
    }
  }
  rep.verdict = Verdict::Certified;
  return rep;
}

}  // namespace trivspec
