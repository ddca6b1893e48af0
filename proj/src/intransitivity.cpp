#include "trivspec/intransitivity.hpp"

#include <algorithm>

namespace trivspec {

IntransitivityVerdict is_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  IntransitivityVerdict v;
  const std::size_t target = s.rows() * s.algebra()->degree();
  RankResult r = transitive_rank(s, budget, rng);
  if (r.value == target) {
    v.verdict = Verdict::Refuted;
    v.witness_vector = r.witness;
    v.reason = "S x = V for the witness x";
  } else if (r.verdict == Verdict::Certified) {
    v.verdict = Verdict::Certified;
    v.reason = "transitive rank " + std::to_string(r.value) + " < " + std::to_string(target);
  } else {
    v.verdict = r.verdict == Verdict::BudgetExceeded ? Verdict::BudgetExceeded : Verdict::Unknown;
    v.reason = "transitive rank at least " + std::to_string(r.value) + " (" + r.reason + ")";
  }
  return v;
}

DMatrix quotient_map(const DSubspace& w) {
  const AlgebraPtr& alg = w.algebra();
  const std::size_t n = w.ambient(), k = w.dim();
  DMatrix red = DMatrix::identity(alg, n) - [&] {
    DMatrix bsel(alg, n, n);
    DMatrix bm = w.basis_matrix();
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < n; ++i) bsel.set(i, w.pivot_rows()[c], bm.entry(i, c));
    return bsel;
  }();
  std::vector<bool> piv(n, false);
  for (auto r : w.pivot_rows()) piv[r] = true;
  DMatrix q(alg, n - k, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (piv[i]) continue;
    q.set_block(row++, 0, red.block(i, 0, 1, n));
  }
  return q;
}

OperatorSpace project(const OperatorSpace& s, const DSubspace& w) {
  return s.transformed(quotient_map(w), DMatrix::identity(s.algebra(), s.cols()));
}

OperatorSpace restrict_target(const OperatorSpace& s, const DSubspace& w) {
  const AlgebraPtr& alg = s.algebra();
  const Field& F = s.field();
  const std::size_t k = w.dim(), m = s.cols();
  if (w.ambient() != s.rows()) fail(Errc::ShapeMismatch, "subspace lives in the wrong space");
  DMatrix q = quotient_map(w);
  std::vector<Vec> cols;
  for (const auto& u : s.basis()) cols.push_back((q * u).flat());
  std::vector<Vec> combos;
  if (cols.empty()) return OperatorSpace(alg, k, m);
  if (cols[0].empty()) {
    for (std::size_t l = 0; l < s.dim(); ++l) combos.push_back(unit_vec(F, s.dim(), l));
  } else {
    combos = kernel(Matrix::from_cols(F, cols, cols[0].size()));
  }
  std::vector<DMatrix> gens;
  for (const auto& c : combos) {
    DMatrix u = s.element(c);
    DMatrix r(alg, k, m);
    for (std::size_t i = 0; i < k; ++i) r.set_block(i, 0, u.block(w.pivot_rows()[i], 0, 1, m));
    gens.push_back(std::move(r));
  }
  return OperatorSpace::span(alg, k, m, gens);
}

namespace {

// Total number of nonzero proper-or-full subspaces with dimension in [lo, hi],
// times the per-space cost, or nullopt when it exceeds budget.
std::optional<std::uint64_t> enumeration_cost(const Algebra& alg, std::size_t n, std::size_t lo, std::size_t hi,
                                              std::uint64_t per_space, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (std::size_t k = lo; k <= hi; ++k) {
    std::uint64_t c = dsubspace_count(alg, n, k);
    if (c == UINT64_MAX || (per_space && c > budget / per_space)) return std::nullopt;
    total += c * std::max<std::uint64_t>(per_space, 1);
    if (total > budget) return std::nullopt;
  }
  return total;
}

std::optional<Matrix> right_nondegenerate_alternator(const OperatorSpace& s, Rng& rng) {
  auto alt = alternator_space(s);
  if (alt.empty()) return std::nullopt;
  for (const auto& g : alt)
    if (radicals(g).right.dim() == 0) return g;
  for (int t = 0; t < 32; ++t) {
    Matrix g = alt[0].scaled(s.field().zero());
    for (const auto& a : alt) g = g + a.scaled(rng.scalar(s.field()));
    if (radicals(g).right.dim() == 0) return g;
  }
  return std::nullopt;
}

}  // namespace

IntransitivityVerdict is_deeply_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  IntransitivityVerdict v;
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows(), d = alg->degree();
  if (n == 0) {
    v.verdict = Verdict::Refuted;
    v.reason = "V = 0 is reached by every vector";
    return v;
  }
  std::optional<std::uint64_t> cost;
  if (s.field().is_finite()) {
    std::uint64_t per = projective_point_count(*alg, s.cols());
    if (per != UINT64_MAX) cost = enumeration_cost(*alg, n, 1, n, per, budget);
  }
  if (cost) {
    bool refuted = false;
    for (std::size_t k = 1; k <= n && !refuted; ++k)
      for_each_dsubspace(alg, n, k, [&](const DSubspace& w) {
        OperatorSpace r = restrict_target(s, w);
        RankResult tr = transitive_rank(r, budget, rng);
        if (tr.value == k * d) {
          v.verdict = Verdict::Refuted;
          v.witness_subspace = w;
          v.witness_vector = tr.witness;
          v.reason = "S restricted to " + w.str() + " is transitive";
          refuted = true;
          return false;
        }
        return true;
      });
    if (!refuted) {
      v.verdict = Verdict::Certified;
      v.reason = "all nonzero D-subspaces enumerated (" + std::to_string(*cost) + " evaluations at most)";
    }
    return v;
  }
  if (right_nondegenerate_alternator(s, rng)) {
    v.verdict = Verdict::CertifiedByAlternator;
    v.reason = "S has a right-nondegenerate alternator";
    return v;
  }
  v.verdict = Verdict::Unknown;
  v.reason = s.field().is_finite() ? "subspace enumeration exceeds the budget and no right-nondegenerate alternator"
                                   : "no right-nondegenerate alternator found";
  return v;
}

IntransitivityVerdict is_primitively_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  IntransitivityVerdict v = is_intransitive(s, budget, rng);
  if (v.verdict != Verdict::Certified) return v;
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows(), d = alg->degree();
  if (!s.field().is_finite()) fail(Errc::Unsupported, "primitivity checks need a finite field");
  std::uint64_t per = projective_point_count(*alg, s.cols());
  if (n > 1 && !enumeration_cost(*alg, n, 1, n - 1, per, budget)) {
    v.verdict = Verdict::BudgetExceeded;
    v.reason = "too many subspaces to enumerate";
    return v;
  }
  for (std::size_t k = 1; k < n; ++k) {
    bool hit = false;
    for_each_dsubspace(alg, n, k, [&](const DSubspace& w) {
      RankResult tr = transitive_rank(project(s, w), budget, rng);
      if (tr.value < (n - k) * d) {
        v.verdict = Verdict::Refuted;
        v.witness_subspace = w;
        v.witness_vector.reset();
        v.reason = "the projection modulo " + w.str() + " is intransitive";
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return v;
  }
  v.verdict = Verdict::Certified;
  v.reason = "intransitive, and every proper quotient projection is transitive";
  return v;
}

IntransitivityVerdict is_weakly_primitively_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  IntransitivityVerdict v;
  const AlgebraPtr& alg = s.algebra();
  const std::size_t n = s.rows(), d = alg->degree();
  if (!s.field().is_finite()) fail(Errc::Unsupported, "primitivity checks need a finite field");
  RankResult trk = transitive_rank(s, budget, rng);
  std::uint64_t per = projective_point_count(*alg, s.cols());
  if (trk.verdict != Verdict::Certified || !enumeration_cost(*alg, n, 1, 1, per, budget)) {
    v.verdict = Verdict::BudgetExceeded;
    v.reason = "enumeration exceeds the budget";
    return v;
  }
  for_each_dsubspace(alg, n, 1, [&](const DSubspace& w) {
    RankResult tr = transitive_rank(project(s, w), budget, rng);
    if (tr.value + d <= trk.value) {
      v.verdict = Verdict::Refuted;
      v.witness_subspace = w;
      v.reason = "trk of the projection modulo " + w.str() + " is " + std::to_string(tr.value) +
                 " <= trk(S) - d = " + std::to_string(trk.value - d);
      return false;
    }
    return true;
  });
  if (v.verdict != Verdict::Refuted) {
    v.verdict = Verdict::Certified;
    v.reason = "no D-line lowers the transitive rank by d";
  }
  return v;
}

AtkinsonReport verify_atkinson_bounds(const OperatorSpace& s, std::uint64_t budget, Rng& rng) {
  AtkinsonReport rep;
  const AlgebraPtr& alg = s.algebra();
  rep.n = s.rows();
  rep.d = alg->degree();
  rep.dim = s.dim();
  rep.alpha = alpha(rep.n, rep.d);
  const std::size_t nd = rep.n * rep.d;
  if (auto q = s.field().cardinality(); q && *q < nd)
    fail(Errc::CardinalityHypothesisFails, "|F| = " + std::to_string(*q) + " < nd = " + std::to_string(nd));
  rep.deep = is_deeply_intransitive(s, budget, rng);
  if (!is_certified(rep.deep.verdict)) fail(Errc::HypothesisFails, "deep intransitivity not certified: " + rep.deep.reason);
  const std::int64_t a = static_cast<std::int64_t>(rep.alpha), n = static_cast<std::int64_t>(rep.n),
                     d = static_cast<std::int64_t>(rep.d), dim = static_cast<std::int64_t>(rep.dim);

  rep.a.applicable = true;
  rep.a.holds = dim <= a;
  rep.a.detail = "dim " + std::to_string(dim) + " <= alpha " + std::to_string(a);
  if (!rep.a.holds) fail(Errc::BoundViolated, "clause (a): " + rep.a.detail);

  RankResult trk = transitive_rank(s, budget, rng);
  rep.trk = trk.value;
  const std::int64_t bound_b = a - n + std::max<std::int64_t>(2 - d, 0);
  if (trk.verdict == Verdict::Certified && static_cast<std::int64_t>(trk.value) < static_cast<std::int64_t>(nd) - 1) {
    rep.b.applicable = true;
    rep.b.holds = dim <= bound_b;
    rep.b.detail = "trk " + std::to_string(trk.value) + " < nd - 1, dim " + std::to_string(dim) + " <= " +
                   std::to_string(bound_b);
    if (!rep.b.holds) fail(Errc::BoundViolated, "clause (b): " + rep.b.detail);
  } else {
    rep.b.detail = trk.verdict == Verdict::Certified ? "trk = nd - 1" : "trk not certified";
  }

  const std::int64_t bound_c = a - n + std::max<std::int64_t>(4 - d, 2);
  auto alt = alternator_space(s);
  rep.alt_dim = alt.size();
  if (dim >= bound_c) {
    rep.c.applicable = true;
    bool nondeg = alt.size() == 1 && radicals(alt[0]).right.dim() == 0;
    rep.c.holds = nondeg;
    rep.c.detail = "dim Alt = " + std::to_string(alt.size()) + (nondeg ? ", generator right-nondegenerate" : "");
    if (!rep.c.holds) fail(Errc::BoundViolated, "clause (c): " + rep.c.detail);
    rep.type = detect_quadratic_type(s, budget);
    rep.c.detail += std::string(", type ") + type_tag(rep.type->profile.type);
  } else {
    rep.c.detail = "dim " + std::to_string(dim) + " < " + std::to_string(bound_c);
  }
  return rep;
}

}  // namespace trivspec
