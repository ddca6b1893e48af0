#include "trivspec/trivial_spectrum.hpp"

#include <algorithm>

namespace trivspec {

std::optional<std::vector<std::uint64_t>> first_singular_combination(const std::vector<Matrix>& basis,
                                                                     const Matrix& offset) {
  return first_combination_below_rank(basis, offset, std::min(offset.rows(), offset.cols()));
}

std::optional<std::vector<std::uint64_t>> first_combination_below_rank(const std::vector<Matrix>& basis,
                                                                       const Matrix& offset, std::size_t bound,
                                                                       std::uint64_t* visited) {
  const std::size_t k = basis.size();
  const std::uint64_t p = offset.field().characteristic();
  std::vector<modp::Mat> b;
  b.reserve(k);
  for (const auto& m : basis) b.push_back(modp::from_matrix(m));
  modp::Mat acc = modp::from_matrix(offset);
  std::vector<std::uint64_t> t(k, 0);
  while (true) {
    if (visited) ++*visited;
    if (modp::rank(acc) < bound) return t;
    // Odometer in lexicographic order; a wrap p-1 -> 0 also adds B_i since p B_i = 0.
    std::size_t i = k;
    while (i > 0) {
      --i;
      modp::add_into(acc, b[i]);
      if (++t[i] < p) break;
      t[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

namespace {

Vec to_scalars(const Field& f, const std::vector<std::uint64_t>& t) {
  Vec v;
  v.reserve(t.size());
  for (auto x : t) v.push_back(f.element(x));
  return v;
}

std::size_t unit_coordinate(const Algebra& alg) {
  for (std::size_t k = 0; k < alg.degree(); ++k)
    if (!alg.unit()[k].is_zero()) return k;
  fail(Errc::UnitViolation, "zero unit");
}

}  // namespace

SpectrumVerdict has_trivial_spectrum(const OperatorSpace& s, std::uint64_t budget, Rng& rng,
                                     const std::optional<Matrix>& alternator) {
  if (!s.square()) fail(Errc::NotSquare, "spectrum of a non-square space");
  SpectrumVerdict v;
  const Field& F = s.field();
  const std::size_t nd = s.rows() * s.algebra()->degree();
  const Matrix id = Matrix::identity(F, nd);
  auto refute = [&](const Vec& coeffs) {
    v.verdict = Verdict::Refuted;
    v.element = s.element(coeffs);
    Matrix a = s.realified_element(coeffs) - id;
    v.fixed_vector = kernel(a).front();
    v.reason = "element with a nonzero fixed vector";
  };

  if (F.is_finite()) {
    if (auto total = checked_pow(F.characteristic(), s.dim(), budget + 1); total && *total <= budget) {
      auto t = first_singular_combination(s.realified_basis(), id.scaled(-F.one()));
      if (t) {
        std::uint64_t idx = 0;
        for (auto x : *t) idx = idx * F.characteristic() + x;
        v.checked = idx + 1;
        refute(to_scalars(F, *t));
      } else {
        v.checked = *total;
        v.verdict = Verdict::Certified;
        v.reason = "all " + std::to_string(*total) + " elements checked";
      }
      return v;
    }
  }

  for (int i = 0; i < 64; ++i) {
    Vec c = rng.vec(F, s.dim());
    ++v.checked;
    if (rank(s.realified_element(c) - id) < nd) {
      refute(c);
      return v;
    }
  }

  std::vector<Matrix> candidates;
  if (alternator) {
    for (const auto& a : s.realified_basis())
      if (!is_alternating_for(*alternator, a)) fail(Errc::InvalidInput, "supplied form is not an alternator of S");
    candidates.push_back(*alternator);
  } else if (s.dim() > 0) {
    candidates = alternator_space(s);
    const std::size_t base = candidates.size();
    for (int t = 0; t < 8 && base > 1; ++t) {
      Matrix g = candidates[0].scaled(F.zero());
      for (std::size_t j = 0; j < base; ++j) g = g + candidates[j].scaled(rng.scalar(F));
      candidates.push_back(std::move(g));
    }
  }
  for (const auto& g : candidates) {
    if (g.rows() != nd || g.cols() != nd) fail(Errc::ShapeMismatch, "alternator has the wrong shape");
    if (check_nonisotropic(quadratic_form_of(g), budget).verdict == Verdict::Certified) {
      v.verdict = Verdict::CertifiedByAlternator;
      v.reason = "nonisotropic alternator: u x = x forces b(x, x) = 0";
      return v;
    }
  }
  v.verdict = F.is_finite() ? Verdict::BudgetExceeded : Verdict::Unknown;
  v.reason = std::to_string(v.checked) + " random elements have no fixed vector; no nonisotropic alternator";
  return v;
}

QuadForm quadratic_form_of(const Matrix& g) {
  const std::size_t m = g.rows();
  Matrix c(g.field(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    c(i, i) = g(i, i);
    for (std::size_t j = i + 1; j < m; ++j) c(i, j) = g(i, j) + g(j, i);
  }
  return QuadForm{c};
}

FSubspace default_hyperplane(const Algebra& alg) {
  const std::size_t u = unit_coordinate(alg);
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < alg.degree(); ++k)
    if (k != u) gens.push_back(alg.basis(k));
  return FSubspace::span(alg.base(), alg.degree(), gens);
}

OperatorSpace construct_triangular_model(const AlgebraPtr& alg, std::size_t n,
                                         const std::vector<FSubspace>& hyperplanes) {
  if (hyperplanes.size() != n)
    fail(Errc::DimensionMismatch, std::to_string(hyperplanes.size()) + " hyperplanes for n = " + std::to_string(n));
  std::vector<OperatorSpace> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    const FSubspace& h = hyperplanes[i];
    if (h.ambient() != alg->degree() || h.dim() + 1 != alg->degree())
      fail(Errc::DimensionMismatch, "H_" + std::to_string(i) + " is not an F-hyperplane of D");
    if (h.contains(alg->unit())) fail(Errc::HyperplaneContainsUnit, "H_" + std::to_string(i) + " contains 1");
    blocks.push_back(OperatorSpace::from_coords(alg, 1, 1, h));
  }
  if (n == 0) return OperatorSpace(alg, 0, 0);
  return joint(blocks);
}

OperatorSpace construct_triangular_model(const AlgebraPtr& alg, std::size_t n) {
  return construct_triangular_model(alg, n, std::vector<FSubspace>(n, default_hyperplane(*alg)));
}

OperatorSpace construct_SH(const AlgebraPtr& alg, std::size_t n, const Profile& prof) {
  validate_profile(*alg, prof);
  const Field& F = alg->base();
  const std::size_t d = alg->degree(), nu = n * n * d;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * d + k; };
  std::vector<Vec> rows;
  // m_ij + sigma(m_ji) = 0 for i <= j, and e(m_ii) = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec r = zero_vec(F, nu);
        r[at(i, j, k)] += F.one();
        for (std::size_t l = 0; l < d; ++l) r[at(j, i, l)] += prof.sigma(k, l);
        rows.push_back(std::move(r));
      }
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = zero_vec(F, nu);
    for (std::size_t k = 0; k < d; ++k) r[at(i, i, k)] = prof.e[k];
    rows.push_back(std::move(r));
  }
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (std::size_t t = 0; t < nu; ++t) sol.push_back(unit_vec(F, nu, t));
  } else {
    sol = kernel(Matrix::from_rows(F, rows, nu));
  }
  return OperatorSpace::from_coords(alg, n, n, FSubspace::span(F, nu, sol));
}

OperatorSpace twisted_SH(const DMatrix& p, const Profile& prof) {
  if (p.rows() != p.cols()) fail(Errc::NotSquare, "P must be square");
  DMatrix pinv = inverse_D(p);
  return construct_SH(p.algebra(), p.rows(), prof).transformed(pinv, DMatrix::identity(p.algebra(), p.rows()));
}

QuadForm e_form(const DMatrix& p, const Profile& prof) {
  const Algebra& alg = *p.algebra();
  const Field& F = alg.base();
  const std::size_t m = p.rows() * alg.degree();
  if (p.rows() != p.cols()) fail(Errc::NotSquare, "P must be square");
  SesquilinearForm b{p, prof.sigma};
  auto q = [&](const Vec& x) { return dot(prof.e, b.eval(x, x)); };
  std::vector<Scalar> diag(m);
  for (std::size_t a = 0; a < m; ++a) diag[a] = q(unit_vec(F, m, a));
  Matrix c(F, m, m);
  for (std::size_t a = 0; a < m; ++a) {
    c(a, a) = diag[a];
    for (std::size_t bb = a + 1; bb < m; ++bb) {
      Vec x = unit_vec(F, m, a);
      x[bb] = F.one();
      c(a, bb) = q(x) - diag[a] - diag[bb];
    }
  }
  return QuadForm{c};
}

NonisotropyResult is_e_nonisotropic(const DMatrix& p, const Profile& prof, std::uint64_t budget) {
  return check_nonisotropic(e_form(p, prof), budget);
}

ClassificationReport classify_optimal(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  if (!s.square()) fail(Errc::NotSquare, "classification needs a square space");
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows(), d = alg->degree();
  if (s.dim() != alpha(n, d))
    fail(Errc::NotOptimalDim,
         "dim " + std::to_string(s.dim()) + " != alpha(" + std::to_string(n) + ", " + std::to_string(d) + ")");
  if (auto q = s.field().cardinality(); q && *q < n * d)
    fail(Errc::CardinalityHypothesisFails, "|F| = " + std::to_string(*q) + " < nd = " + std::to_string(n * d));
  if (!s.field().is_finite()) fail(Errc::Unsupported, "invariant subspaces can only be enumerated over finite fields");

  ClassificationReport rep;
  rep.spectrum = has_trivial_spectrum(s, budget, rng);
  if (!is_certified(rep.spectrum.verdict))
    fail(Errc::SpectrumNotTrivial, std::string(verdict_name(rep.spectrum.verdict)) + ": " + rep.spectrum.reason);

  FlagDecomposition fd = flag_decomposition(s, budget);
  rep.flag = fd.flag;
  rep.partition = fd.sizes;
  rep.basis = fd.basis;
  rep.verdict = Verdict::Certified;
  for (std::size_t i = 0; i < fd.blocks.size(); ++i) {
    const OperatorSpace& blk = fd.blocks[i];
    const std::string where = "block " + std::to_string(i) + ": ";
    BlockReport br;
    br.size = fd.sizes[i];
    br.dim = blk.dim();
    br.space = blk;
    if (br.size == 1) {
      if (br.dim + 1 != d || blk.contains(DMatrix::identity(alg, 1)))
        fail(Errc::Internal, where + "1 x 1 block is not an F-hyperplane of D avoiding 1");
      br.tag = "hyperplane";
      br.nonisotropy.verdict = Verdict::Certified;
      br.nonisotropy.reason = "1 is not in the block";
      br.matches_alternating_maps = true;
    } else {
      QuadraticTypeDetection det;
      try {
        det = detect_quadratic_type(blk, budget);
      } catch (const Error& e) {
        throw Error(e.code(), where + e.what());
      }
      br.tag = type_tag(det.profile.type);
      br.profile = det.profile;
      br.bilinear = det.alternator;
      br.form = det.form;
      br.matches_alternating_maps = alternating_maps(det.alternator, alg, br.size, br.size, true) == blk;
      if (!br.matches_alternating_maps) fail(Errc::Internal, where + "block differs from A_{b, D}");
      br.nonisotropy = is_e_nonisotropic(det.form.gram, det.profile, budget);
      if (br.nonisotropy.verdict == Verdict::Refuted)
        fail(Errc::Internal, where + "B is e-isotropic although the spectrum is trivial");
      if (!is_certified(br.nonisotropy.verdict)) rep.verdict = br.nonisotropy.verdict;
    }
    rep.blocks.push_back(std::move(br));
  }
  return rep;
}

OperatorSpace block_space(const DSubspace& w) {
  const AlgebraPtr& alg = w.algebra();
  const std::size_t n = w.ambient(), k = w.dim(), d = alg->degree();
  DMatrix t(alg, n, n);
  t.set_block(0, 0, w.basis_matrix());
  std::vector<bool> piv(n, false);
  for (auto r : w.pivot_rows()) piv[r] = true;
  std::size_t c = k;
  for (std::size_t i = 0; i < n; ++i)
    if (!piv[i]) t.set(i, c++, alg->unit());
  DMatrix tinv = inverse_D(t);
  std::vector<DMatrix> gens;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t col = k; col < n; ++col)
      for (std::size_t a = 0; a < d; ++a) {
        DMatrix e(alg, n, n);
        e.set(r, col, alg->basis(a));
        gens.push_back(t * e * tinv);
      }
  return OperatorSpace::span(alg, n, n, gens);
}

LemmaVerdict verify_invariant_subspace_lemma(const OperatorSpace& s, const DSubspace& w, std::uint64_t budget,
                                             Rng& rng) {
  if (w.ambient() != s.rows() || !s.square()) fail(Errc::ShapeMismatch, "W must live in the space S acts on");
  if (!s.contains(block_space(w))) fail(Errc::HypothesisFails, "S misses some u with im u in W in ker u");
  SpectrumVerdict sp = has_trivial_spectrum(s, budget, rng);
  if (sp.verdict == Verdict::Refuted) fail(Errc::HypothesisFails, "S does not have trivial spectrum");
  LemmaVerdict v;
  for (const auto& u : s.basis()) {
    for (const auto& x : w.basis()) {
      if (!w.contains((u * DMatrix::column(w.algebra(), x)).flat())) {
        v.verdict = Verdict::Refuted;
        v.witness = u;
        v.reason = "u(W) is not contained in W";
        return v;
      }
    }
  }
  v.verdict = is_certified(sp.verdict) ? Verdict::Certified : Verdict::Unknown;
  v.reason = "W is invariant under every basis element; spectrum " + std::string(verdict_name(sp.verdict));
  return v;
}

LemmaVerdict local_maximality(const OperatorSpace& s, std::uint64_t budget) {
  if (!s.square()) fail(Errc::NotSquare, "local maximality needs a square space");
  const Field& F = s.field();
  if (!F.is_finite()) fail(Errc::Unsupported, "local maximality needs a finite field");
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows(), d = alg->degree(), N = n * n * d, nd = n * d;
  const std::uint64_t q = F.characteristic();
  std::vector<std::size_t> free;
  {
    std::vector<bool> piv(N, false);
    for (auto c : s.coords().pivots()) piv[c] = true;
    for (std::size_t c = 0; c < N; ++c)
      if (!piv[c]) free.push_back(c);
  }
  LemmaVerdict v;
  AlgebraPtr triv = Algebra::trivial(F);
  const std::uint64_t reps = projective_point_count(*triv, free.size());
  auto per = checked_pow(q, s.dim(), budget + 1);
  if (reps == UINT64_MAX || !per || *per * (q - 1) > budget || reps > budget / (*per * (q - 1))) {
    v.verdict = Verdict::BudgetExceeded;
    v.reason = "coset enumeration exceeds the budget";
    return v;
  }
  const Matrix minus_id = Matrix::identity(F, nd).scaled(-F.one());
  if (first_singular_combination(s.realified_basis(), minus_id))
    fail(Errc::SpectrumNotTrivial, "S itself has an element with a nonzero fixed vector");
  for_each_projective_point(*triv, free.size(), [&](const Vec& c) {
    Vec flat = zero_vec(F, N);
    for (std::size_t i = 0; i < free.size(); ++i) flat[free[i]] = c[i];
    DMatrix m = DMatrix::from_flat(alg, n, n, flat);
    Matrix mr = m.realify();
    for (std::uint64_t lam = 1; lam < q; ++lam)
      if (first_singular_combination(s.realified_basis(), mr.scaled(F.element(lam)) + minus_id)) return true;
    v.verdict = Verdict::Refuted;
    v.witness = m;
    v.reason = "S + F M has trivial spectrum";
    return false;
  });
  if (v.verdict != Verdict::Refuted) {
    v.verdict = Verdict::Certified;
    v.reason = "each of " + std::to_string(reps) + " coset lines adds an element with a fixed vector";
  }
  return v;
}

}  // namespace trivspec
