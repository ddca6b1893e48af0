#include "common.hpp"

using namespace tt;

namespace {

std::size_t max_specialised_rank(const PolyMatrix& m) {
  std::size_t best = 0;
  oracle::for_each_coeffs(m.field(), m.nvars(), [&](const Vec& z) { best = std::max(best, rank(m.eval(z))); });
  return best;
}

MPoly z(const Field& f, std::size_t n, std::size_t i) { return MPoly::variable(f, n, i); }

OperatorSpace sh(const AlgebraPtr& a, std::size_t n) { return construct_SH(a, n, standard_profile(*a)); }

}  // namespace

TEST(MPoly, RingIdentities) {
  Field f = F(7);
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    MPoly a(f, 3), b(f, 3), c(f, 3);
    for (int k = 0; k < 4; ++k) {
      a.add_term({unsigned(rng.below(3)), unsigned(rng.below(3)), 0}, rng.scalar(f));
      b.add_term({0, unsigned(rng.below(2)), unsigned(rng.below(3))}, rng.scalar(f));
      c.add_term({unsigned(rng.below(2)), 0, 1}, rng.scalar(f));
    }
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    Vec pt = rng.vec(f, 3);
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    if (!b.is_zero()) {
      auto q = (a * b).exact_div(b);
      ASSERT_TRUE(q);
      EXPECT_EQ(*q, a);
      MPoly qq, r;
      a.divmod(b, qq, r);
      EXPECT_EQ(qq * b + r, a);
    }
  }
}

TEST(GenericOf, Shapes) {
  AlgebraPtr f9 = ext2(3);
  PolyMatrix zero = generic_of(OperatorSpace(f9, 1, 1));
  EXPECT_EQ(zero.cols(), 0u);
  PolyMatrix full = generic_of(OperatorSpace::full(f9, 1, 1));
  EXPECT_EQ(full.rows(), 2u);
  EXPECT_EQ(full.cols(), 2u);
  EXPECT_EQ(full.degree(), 1);
  Rng rng(2);
  EXPECT_EQ(poly_rank(full, rng).rank, 2u);
  // Specialisation at z gives the matrix of u -> u(z).
  OperatorSpace s = random_space_fuzzer(triv(5), 2, 3, 1, 7, 3)[0];
  PolyMatrix g = generic_of(s);
  Vec pt = rng.vec(F(5), 3);
  Matrix ev = g.eval(pt);
  for (std::size_t l = 0; l < s.dim(); ++l) EXPECT_EQ(ev.col(l), s.realified_basis()[l] * pt);
}

TEST(PolyRank, Examples) {
  Rng rng(3);
  AlgebraPtr f25 = ext2(5);
  PolyRank r = poly_rank(generic_of(sh(f25, 2)), rng);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.verdict, Verdict::Certified);
  EXPECT_EQ(poly_rank(PolyMatrix(F(5), 2, 3, 3), rng).rank, 0u);
  EXPECT_EQ(poly_rank(generic_of(OperatorSpace::full(triv(5), 2, 2)), rng).rank, 2u);
}

TEST(PolyRank, MatchesMaxSpecialisedRank) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    OperatorSpace s = random_space_fuzzer(triv(5), 2 + seed % 3, 2 + seed % 2, 1, seed)[0];
    PolyMatrix g = generic_of(s);
    PolyRank exact = poly_rank(g, rng, true), fast = poly_rank(g, rng);
    EXPECT_EQ(exact.rank, max_specialised_rank(g)) << "seed " << seed;
    EXPECT_EQ(fast.rank, exact.rank);
  }
}

TEST(SpanningRank, Examples) {
  Field f = F(5);
  EXPECT_EQ(spanning_rank({z(f, 2, 0), z(f, 2, 1)}), 2u);
  EXPECT_EQ(spanning_rank({z(f, 2, 0), z(f, 2, 0)}), 1u);
  EXPECT_EQ(spanning_rank({z(f, 2, 1), -z(f, 2, 0)}), 2u);
}

TEST(Catchers, Examples) {
  Field f = F(5);
  PolyMatrix col = PolyMatrix::from_entries(f, 2, {{z(f, 2, 0)}, {z(f, 2, 1)}}, 1);
  auto c = catchers(col);
  ASSERT_EQ(c.size(), 1u);
  // (y, -x) up to scalar
  EXPECT_TRUE(c[0](0, 0).is_zero());
  EXPECT_EQ(c[0](0, 1), -c[0](1, 0));
  AlgebraPtr f25 = ext2(5);
  EXPECT_EQ(catchers(generic_of(sh(f25, 2))).size(), 1u);
  // A zero row is caught by every linear form in that position.
  PolyMatrix zr = PolyMatrix::from_entries(f, 2, {{z(f, 2, 0)}, {MPoly(f, 2)}}, 1);
  EXPECT_GE(catchers(zr).size(), 2u);
}

TEST(Catchers, AnnihilateAndMatchAlternators) {
  Rng rng(5);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 20; ++seed) {
    AlgebraPtr a = seed % 4 == 0 ? ext2(3) : triv(5);
    OperatorSpace s = random_space_fuzzer(a, a->degree() == 2 ? 1 + seed % 2 : 2 + seed % 2, 2, 1, seed)[0];
    if (s.dim() == 0 || !is_target_reduced(s)) continue;
    ++checked;
    PolyMatrix g = generic_of(s);
    for (const auto& c : catchers(g)) {
      Vec pt = rng.vec(a->base(), g.nvars());
      Matrix ev = g.eval(pt);
      Vec l = c * pt;
      for (std::size_t j = 0; j < ev.cols(); ++j) EXPECT_TRUE(dot(l, ev.col(j)).is_zero());
    }
    AlternatorCatcherReport rep = alternator_catcher_check(s);
    EXPECT_TRUE(rep.ok()) << "seed " << seed;
    EXPECT_EQ(rep.dim_catch, alternator_space(s).size());
  }
  EXPECT_TRUE(alternator_catcher_check(sh(ext2(5), 2)).ok());
  EXPECT_TRUE(alternator_catcher_check(sh(ext2(3), 1)).ok());
  AlgebraPtr t = triv(3);
  try {
    alternator_catcher_check(OperatorSpace::span(t, 2, 2, {dmat(t, 2, 2, {1, 0, 0, 0})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotTargetReduced);
  }
}

TEST(FactorCollinear, Examples) {
  Field f = F(7);
  auto v = [&](std::size_t i) { return z(f, 3, i); };
  EXPECT_EQ(factor_collinear({v(0), v(1)}, {v(0) * v(2), v(1) * v(2)}), v(2));
  EXPECT_EQ(factor_collinear({v(0), v(1)}, {v(0) * v(0), v(0) * v(1)}), v(0));
  try {
    factor_collinear({v(0), v(0)}, {v(0), v(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SpanningRankTooLow);
  }
  try {
    factor_collinear({v(0), v(1)}, {v(1), v(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCollinear);
  }
}

TEST(FlandersAtkinson, Examples) {
  Field f = F(5);
  AlgebraPtr t = triv(5);
  Rng rng(6);
  OperatorSpace m = OperatorSpace::span(t, 2, 2, {dmat(t, 2, 2, {1, 0, 0, 0}), dmat(t, 2, 2, {1, 0, 1, 0})});
  EXPECT_TRUE(flanders_atkinson_check(m, 1, rng).d_zero);
  OperatorSpace j = OperatorSpace::span(t, 3, 3, {dmat(t, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0})});
  EXPECT_NO_THROW(flanders_atkinson_check(j, 2, rng));
  OperatorSpace big = j.sum(OperatorSpace::span(t, 3, 3, {dmat(t, 3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1})}));
  try {
    flanders_atkinson_check(big, 2, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
  (void)f;
}

TEST(CompressionSpaces, RankBoundedAndContainJ) {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + t % 2, p = 2 + (t / 2) % 2, r = 1;
    OperatorSpace s = random_compression_space(F(3), n, p, r, rng);
    EXPECT_TRUE(s.contains(DMatrix::from_flat(triv(3), n, p, [&] {
      Matrix jm = j_matrix(F(3), n, p, r);
      Vec v;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < p; ++k) v.push_back(jm(i, k));
      return v;
    }())));
    for_each_element(s, [&](const DMatrix& m) { EXPECT_LE(rank(m.realify()), r); });
    EXPECT_NO_THROW(flanders_atkinson_check(s, r, rng));
  }
}
