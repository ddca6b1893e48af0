#include "common.hpp"

using namespace tt;

namespace {

// dim Alt(S) from the pointwise conditions x^T G (u x) = 0 at every x of F_q^N.
std::size_t alt_dim_pointwise(const OperatorSpace& s) {
  const Field& f = s.field();
  const std::size_t m = s.cols() * s.algebra()->degree(), n = s.rows() * s.algebra()->degree();
  std::vector<Vec> rows;
  std::vector<Matrix> real;
  for (const auto& b : s.basis()) real.push_back(oracle::realify_by_hand(b));
  oracle::for_each_coeffs(f, m, [&](const Vec& x) {
    for (const auto& b : real) {
      Vec ux = b * x, r(m * n, f.zero());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] = x[i] * ux[j];
      rows.push_back(std::move(r));
    }
  });
  if (rows.empty()) return m * n;
  return m * n - rank(Matrix::from_rows(f, rows, m * n));
}

bool vanishes_everywhere(const Matrix& g, const OperatorSpace& s) {
  bool ok = true;
  oracle::for_each_coeffs(s.field(), g.rows(), [&](const Vec& x) {
    for (const auto& b : s.basis()) ok = ok && dot(x, g * (oracle::realify_by_hand(b) * x)).is_zero();
  });
  return ok;
}

bool proportional(const Matrix& a, const Matrix& b) {
  std::vector<Vec> rows;
  Vec fa, fb;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      fa.push_back(a(i, j));
      fb.push_back(b(i, j));
    }
  return FSubspace::span(a.field(), fa.size(), {fa, fb}).dim() == 1;
}

OperatorSpace sh(const AlgebraPtr& a, std::size_t n) { return construct_SH(a, n, standard_profile(*a)); }

// tr(x^p y) on F_{p^2}
Matrix frobenius_trace_gram(const AlgebraPtr& a) {
  Matrix g(a->base(), 2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l)
      g(k, l) = a->trace(a->mul(a->pow(a->basis(k), a->base().characteristic()), a->basis(l)));
  return g;
}

}  // namespace

TEST(Alternator, MatchesPointwiseOracleOnFuzz) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    AlgebraPtr a = seed % 3 == 0 ? ext2(2) : triv(seed % 3 == 1 ? 3 : 2);
    const std::size_t rows = a->degree() == 2 ? 1 + seed % 2 : 2 + seed % 2, cols = a->degree() == 2 ? 2 : 2 + seed % 2;
    OperatorSpace s = random_space_fuzzer(a, rows, cols, 1, seed)[0];
    auto alt = alternator_space(s);
    EXPECT_EQ(alt.size(), alt_dim_pointwise(s)) << "seed " << seed;
    for (const auto& g : alt) {
      EXPECT_TRUE(vanishes_everywhere(g, s));
      for (const auto& b : s.realified_basis()) EXPECT_TRUE(is_alternating_for(g, b));
    }
  }
}

TEST(Alternator, Examples) {
  AlgebraPtr t = triv(5);
  EXPECT_EQ(alternator_space(OperatorSpace(t, 1, 1)).size(), 1u);
  AlgebraPtr f25 = ext2(5);
  auto alt = alternator_space(sh(f25, 2));
  ASSERT_EQ(alt.size(), 1u);
  EXPECT_EQ(alt_dim_pointwise(sh(f25, 2)), 1u);
  EXPECT_TRUE(proportional(alt[0], bilinear_from_sesquilinear(DMatrix::identity(f25, 2), standard_profile(*f25))));
  AlgebraPtr f9 = ext2(3);
  auto alt9 = alternator_space(sh(f9, 1));
  ASSERT_EQ(alt9.size(), 1u);
  EXPECT_TRUE(proportional(alt9[0], frobenius_trace_gram(f9)));
}

TEST(AlternatingMaps, Examples) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 4; ++n) {
    Matrix g = random_invertible_F(F(5), n, rng);
    EXPECT_EQ(alternating_maps(g, triv(5), n, n, false).dim(), n * (n - 1) / 2);
    EXPECT_EQ(alternating_maps(g, triv(5), n, n, true).dim(), n * (n - 1) / 2);
  }
  AlgebraPtr f25 = ext2(5);
  Profile p = standard_profile(*f25);
  OperatorSpace a = alternating_maps(bilinear_from_sesquilinear(DMatrix::identity(f25, 2), p), f25, 2, 2, true);
  EXPECT_EQ(a, sh(f25, 2));
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_EQ(alternating_maps(Matrix(F(5), 4, 4), f25, 2, 2, true), OperatorSpace::full(f25, 2, 2));
}

TEST(AlternatingMaps, CharacteristicTwoUsesPointwiseConditions) {
  // Over F_2, x^T M x = 0 for all x needs M alternating, not just a zero diagonal sum.
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    Matrix g = random_matrix(F(2), 3, 3, rng);
    OperatorSpace a = alternating_maps(g, triv(2), 3, 3, true);
    EXPECT_TRUE(vanishes_everywhere(g, a));
    EXPECT_EQ(alt_dim_pointwise(a) >= 1, true);
  }
}

TEST(Radicals, Examples) {
  Radicals r = radicals(Matrix::identity(F(3), 2));
  EXPECT_EQ(r.left.dim(), 0u);
  EXPECT_EQ(r.right.dim(), 0u);
  Matrix one(F(3), 2, 2);
  one(0, 0) = F(3).one();
  r = radicals(one);
  EXPECT_EQ(r.left.dim(), 1u);
  EXPECT_EQ(r.right.dim(), 1u);
  Rng rng(3);
  AlgebraPtr f25 = ext2(5);
  r = radicals(bilinear_from_sesquilinear(random_invertible(f25, 2, rng), standard_profile(*f25)));
  EXPECT_EQ(r.left.dim() + r.right.dim(), 0u);
  // Degenerate B: radicals are D-subspaces of the right size.
  DMatrix deg = dmat(f25, 2, 2, {1, 0, 0, 0, 0, 0, 0, 0});
  r = radicals(bilinear_from_sesquilinear(deg, standard_profile(*f25)));
  EXPECT_EQ(r.left.dim(), 2u);
  EXPECT_EQ(r.right.dim(), 2u);
  for (const auto& v : r.right.basis()) EXPECT_TRUE(r.right.contains(right_scale(*f25, v, el(F(5), {0, 1}))));
}

TEST(Sesquilinear, RecoverExamples) {
  AlgebraPtr t = triv(5);
  Rng rng(4);
  Matrix g = random_matrix(F(5), 3, 3, rng);
  SesquilinearForm b = recover_sesquilinear(g, t, 3, 3, standard_profile(*t));
  EXPECT_EQ(b.gram.realify(), g);
  AlgebraPtr f9 = ext2(3);
  SesquilinearForm b9 = recover_sesquilinear(frobenius_trace_gram(f9), f9, 1, 1, standard_profile(*f9));
  EXPECT_EQ(b9.gram, DMatrix::identity(f9, 1));
  SesquilinearForm z = recover_sesquilinear(Matrix(F(3), 2, 2), f9, 1, 1, standard_profile(*f9));
  EXPECT_TRUE(z.gram.is_zero());
}

TEST(Sesquilinear, RoundTripAndRejection) {
  AlgebraPtr f25 = ext2(5);
  Profile p = standard_profile(*f25);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    DMatrix pm = random_dmatrix(f25, 2, 2, rng);
    Matrix g = bilinear_from_sesquilinear(pm, p);
    SesquilinearForm b = recover_sesquilinear(g, f25, 2, 2, p);
    EXPECT_EQ(b.gram, pm);
    Vec x = rng.vec(F(5), 4), y = rng.vec(F(5), 4);
    EXPECT_EQ(apply_functional(p.e, b.eval(x, y)), dot(x, g * y));
  }
  int rejected = 0;
  for (int t = 0; t < 10; ++t) {
    Matrix g = random_matrix(F(5), 4, 4, rng);
    try {
      SesquilinearForm b = recover_sesquilinear(g, f25, 2, 2, p);
      EXPECT_EQ(bilinear_from_sesquilinear(b.gram, p), g);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotSesquilinear);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 5);
}

TEST(DetectType, Examples) {
  AlgebraPtr f25 = ext2(5);
  QuadraticTypeDetection d = detect_quadratic_type(sh(f25, 2));
  EXPECT_EQ(d.profile.type, QuadraticType::SeparableQuadratic);
  EXPECT_EQ(d.profile.sigma, oracle::frobenius_matrix(*f25));
  // B is a scalar multiple of the identity form.
  const Vec b00 = d.form.gram.entry(0, 0);
  EXPECT_FALSE(is_zero_vec(b00));
  EXPECT_EQ(d.form.gram, DMatrix::identity(f25, 2).right_scaled(b00));
  AlgebraPtr h = hamilton();
  EXPECT_EQ(detect_quadratic_type(sh(h, 2)).profile.type, QuadraticType::Quaternion);
  try {
    detect_quadratic_type(OperatorSpace::full(f25, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AltNotOneDimensional);
  }
}

TEST(DetectType, TwistedSpacesOverGaussianRationals) {
  AlgebraPtr qi = gaussian();
  Profile p = standard_profile(*qi);
  Rng rng(6);
  for (int t = 0; t < 3; ++t) {
    DMatrix pm = random_invertible(qi, 2, rng);
    QuadraticTypeDetection d = detect_quadratic_type(twisted_SH(pm, p));
    EXPECT_EQ(d.profile.type, QuadraticType::SeparableQuadratic);
    EXPECT_EQ(d.profile.sigma, p.sigma);
    EXPECT_TRUE(find_equivalence_scalar(pm, d.form.gram, DMatrix::identity(qi, 2), p).has_value());
  }
}
