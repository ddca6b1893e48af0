#include "common.hpp"

using namespace tt;

namespace {

OperatorSpace sh(const AlgebraPtr& a, std::size_t n) { return construct_SH(a, n, standard_profile(*a)); }

// Deep intransitivity by enumerating S, every D-subspace W and every x.
bool deep_bruteforce(const OperatorSpace& s) {
  const AlgebraPtr& a = s.algebra();
  const Field& f = s.field();
  const std::size_t d = a->degree(), N = s.rows() * d;
  std::vector<Matrix> elems;
  for_each_element(s, [&](const DMatrix& m) { elems.push_back(oracle::realify_by_hand(m)); });
  bool deep = true;
  for (std::size_t k = 1; k <= s.rows() && deep; ++k)
    for_each_dsubspace(a, s.rows(), k, [&](const DSubspace& w) {
      std::vector<Matrix> into;
      for (const auto& m : elems) {
        bool ok = true;
        for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = w.contains(m.col(j));
        if (ok) into.push_back(m);
      }
      oracle::for_each_coeffs(f, s.cols() * d, [&](const Vec& x) {
        std::vector<Vec> img;
        for (const auto& m : into) img.push_back(m * x);
        if (FSubspace::span(f, N, img).dim() == w.fspan().dim()) deep = false;
      });
      return deep;
    });
  return deep;
}

}  // namespace

TEST(Intransitive, Examples) {
  Rng rng(1);
  AlgebraPtr f25 = ext2(5);
  EXPECT_EQ(is_intransitive(sh(f25, 2), kDefaultBudget, rng).verdict, Verdict::Certified);
  IntransitivityVerdict full = is_intransitive(OperatorSpace::full(f25, 2, 2), kDefaultBudget, rng);
  EXPECT_EQ(full.verdict, Verdict::Refuted);
  ASSERT_TRUE(full.witness_vector);
  EXPECT_EQ(evaluate(OperatorSpace::full(f25, 2, 2), *full.witness_vector).dim(), 4u);
  EXPECT_EQ(is_intransitive(OperatorSpace(f25, 2, 2), kDefaultBudget, rng).verdict, Verdict::Certified);
}

TEST(RestrictTarget, Examples) {
  AlgebraPtr t = triv(3);
  OperatorSpace up = OperatorSpace::span(t, 2, 2, {dmat(t, 2, 2, {1, 0, 0, 0}), dmat(t, 2, 2, {0, 1, 0, 0}),
                                                   dmat(t, 2, 2, {0, 0, 0, 1})});
  EXPECT_EQ(restrict_target(up, DSubspace::full(t, 2)), up);
  EXPECT_EQ(restrict_target(up, DSubspace::zero(t, 2)).dim(), 0u);
  OperatorSpace r = restrict_target(up, DSubspace::span(t, 2, {el(F(3), {1, 0})}));
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_EQ(r.rows(), 1u);
  OperatorSpace pr = project(up, DSubspace::span(t, 2, {el(F(3), {1, 0})}));
  EXPECT_EQ(pr.dim(), 1u);
  DMatrix q = quotient_map(DSubspace::span(t, 2, {el(F(3), {1, 0})}));
  EXPECT_EQ(q.rows(), 1u);
  EXPECT_TRUE((q * DMatrix::column(t, el(F(3), {1, 0}))).is_zero());
}

TEST(DeepIntransitive, Examples) {
  Rng rng(2);
  AlgebraPtr f25 = ext2(5);
  Profile p = standard_profile(*f25);
  OperatorSpace a = alternating_maps(bilinear_from_sesquilinear(random_invertible(f25, 2, rng), p), f25, 2, 2, true);
  EXPECT_EQ(is_deeply_intransitive(a, kDefaultBudget, rng).verdict, Verdict::Certified);
  // All maps into the hyperplane e_2 = 0.
  AlgebraPtr t = triv(5);
  OperatorSpace into = OperatorSpace::span(t, 2, 2, {dmat(t, 2, 2, {1, 0, 0, 0}), dmat(t, 2, 2, {0, 1, 0, 0})});
  IntransitivityVerdict v = is_deeply_intransitive(into, kDefaultBudget, rng);
  EXPECT_EQ(v.verdict, Verdict::Refuted);
  ASSERT_TRUE(v.witness_subspace);
  EXPECT_EQ(*v.witness_subspace, DSubspace::span(t, 2, {el(F(5), {1, 0})}));
  EXPECT_EQ(is_deeply_intransitive(sh(hamilton(), 2), kDefaultBudget, rng).verdict, Verdict::CertifiedByAlternator);
}

TEST(DeepIntransitive, MatchesEnumeration) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    AlgebraPtr a = seed % 3 == 0 ? ext2(2) : triv(3);
    std::size_t n = a->degree() == 2 ? 2 : 2 + seed % 2;
    OperatorSpace s = random_space_fuzzer(a, n, n, 1, seed, 1 + seed % 4)[0];
    IntransitivityVerdict v = is_deeply_intransitive(s, kDefaultBudget, rng);
    EXPECT_EQ(v.verdict == Verdict::Certified, deep_bruteforce(s)) << "seed " << seed;
    EXPECT_TRUE(v.verdict == Verdict::Certified || v.verdict == Verdict::Refuted);
  }
}

TEST(Primitive, Examples) {
  Rng rng(4);
  AlgebraPtr f25 = ext2(5);
  EXPECT_EQ(is_primitively_intransitive(sh(f25, 2), kDefaultBudget, rng).verdict, Verdict::Certified);
  // Diagonal matrices are transitive.
  AlgebraPtr t = triv(5);
  OperatorSpace one = OperatorSpace::full(t, 1, 1);
  IntransitivityVerdict diag = is_primitively_intransitive(joint({one, one}), kDefaultBudget, rng);
  EXPECT_EQ(diag.verdict, Verdict::Refuted);
  EXPECT_FALSE(diag.witness_subspace);
  // The triangular model projects onto an intransitive space modulo its first line.
  OperatorSpace tri = construct_triangular_model(f25, 2);
  IntransitivityVerdict v = is_primitively_intransitive(tri, kDefaultBudget, rng);
  EXPECT_EQ(v.verdict, Verdict::Refuted);
  ASSERT_TRUE(v.witness_subspace);
  EXPECT_EQ(*v.witness_subspace, DSubspace::span(f25, 2, {el(F(5), {1, 0, 0, 0})}));
  EXPECT_EQ(is_weakly_primitively_intransitive(tri, kDefaultBudget, rng).verdict, Verdict::Refuted);
  EXPECT_NE(is_weakly_primitively_intransitive(sh(f25, 2), kDefaultBudget, rng).verdict, Verdict::Refuted);
}

TEST(Atkinson, Examples) {
  Rng rng(5);
  AlgebraPtr f25 = ext2(5);
  Profile p = standard_profile(*f25);
  OperatorSpace a = alternating_maps(bilinear_from_sesquilinear(random_invertible(f25, 2, rng), p), f25, 2, 2, true);
  AtkinsonReport rep = verify_atkinson_bounds(a, kDefaultBudget, rng);
  EXPECT_TRUE(rep.a.holds && rep.b.holds && rep.c.holds);
  EXPECT_EQ(rep.dim, 4u);
  EXPECT_EQ(rep.alt_dim, 1u);
  ASSERT_TRUE(rep.type);
  EXPECT_EQ(rep.type->profile.type, QuadraticType::SeparableQuadratic);

  AlgebraPtr t = triv(5);
  OperatorSpace small = OperatorSpace::span(t, 2, 2, {dmat(t, 2, 2, {0, 1, -1, 0})});
  AtkinsonReport r2 = verify_atkinson_bounds(small, kDefaultBudget, rng);
  EXPECT_TRUE(r2.a.applicable && r2.a.holds);

  AtkinsonReport rh = verify_atkinson_bounds(sh(hamilton(), 2), kDefaultBudget, rng);
  EXPECT_EQ(rh.dim, 10u);
  EXPECT_TRUE(rh.c.applicable && rh.c.holds);
  ASSERT_TRUE(rh.type);
  EXPECT_EQ(rh.type->profile.type, QuadraticType::Quaternion);
}

TEST(Atkinson, Preconditions) {
  Rng rng(6);
  AlgebraPtr t = triv(5);
  try {
    verify_atkinson_bounds(OperatorSpace::full(t, 2, 2), kDefaultBudget, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisFails);
  }
  // |F| = 2 < nd = 4
  AlgebraPtr f4 = ext2(2);
  try {
    verify_atkinson_bounds(construct_triangular_model(f4, 2), kDefaultBudget, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CardinalityHypothesisFails);
  }
}
