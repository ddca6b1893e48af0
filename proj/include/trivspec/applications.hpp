#ifndef TRIVSPEC_APPLICATIONS_HPP
#define TRIVSPEC_APPLICATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "trivspec/trivial_spectrum.hpp"

namespace trivspec {

struct AffineSpace {
  DMatrix base;
  OperatorSpace direction;
  // base + sum_i c_i B_i
  DMatrix element(const Vec& coeffs) const { return base + direction.element(coeffs); }
};

// [[I_r + M, *], [*, *]] with M in the triangular model of Mat_r(D) (or the
// supplied core, a trivial-spectrum subspace of Mat_r(D)).
AffineSpace build_affine_minrank(const AlgebraPtr& alg, std::size_t n, std::size_t p, std::size_t r,
                                 const std::optional<OperatorSpace>& core = std::nullopt);

struct MinrankVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::uint64_t checked = 0;
  std::size_t min_rank_seen = SIZE_MAX;  // tracked while sampling, and for a witness
  std::optional<DMatrix> witness;
};

// Every element has rank at least r over D: exhaustive over finite F within
// budget, otherwise sampled.
MinrankVerdict verify_minrank(const AffineSpace& a, std::size_t r, std::uint64_t budget, Rng& rng,
                              std::size_t samples = 1000);

// (P_1 + SH_{n_1}(D)) v ... v (P_p + SH_{n_p}(D)); throws NotNonisotropic when
// some P_i is e-isotropic.
AffineSpace build_affine_nonsingular(const AlgebraPtr& alg, const std::vector<DMatrix>& ps, const Profile& prof,
                                     std::uint64_t budget);

// P' - alpha Q^* P Q lies in SH_n(D).
bool verify_equivalence_certificate(const DMatrix& p, const DMatrix& p2, const Scalar& alpha, const DMatrix& q,
                                    const Profile& prof);
// Some alpha with P' - alpha Q^* P Q in SH_n(D), if any.
std::optional<Scalar> find_equivalence_scalar(const DMatrix& p, const DMatrix& p2, const DMatrix& q,
                                              const Profile& prof);

// {M : M^* = M}; throws CharTwo or NotSeparableType.
OperatorSpace hermitian_space(const AlgebraPtr& alg, std::size_t n, const Profile& prof);

// Tr_{D/F}(tr(A B)); throws DegenerateTrace when Tr_{D/F}(1) = 0.
Scalar inner_product(const DMatrix& a, const DMatrix& b);
OperatorSpace orthogonal_complement(const OperatorSpace& s);

struct IdempotentVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<Vec> witness_direction;  // x with no suitable p
  std::optional<DMatrix> example;        // p for the first direction
};

// For every D-line x D some p in S has p x = x and im p in x D.
IdempotentVerdict has_full_rank1_idempotent_property(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

// F I_n + i H_n(D) for D = F(i), i^2 = -1; throws WrongProfile.
OperatorSpace diag_model_C(const AlgebraPtr& alg, std::size_t n, const Profile& prof);

// {u : (x, y) -> b(x, u y) symmetric} over F; throws Isotropic.
OperatorSpace semisimple_space_Sb(const Matrix& b, std::uint64_t budget);

struct ElementwiseVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::uint64_t checked = 0;
  std::optional<DMatrix> witness;
};

// Every element semisimple / F-diagonalisable / not nonzero nilpotent.
ElementwiseVerdict all_semisimple(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples = 200);
ElementwiseVerdict all_diagonalisable(const OperatorSpace& s, std::uint64_t budget, Rng& rng,
                                      std::size_t samples = 200);
ElementwiseVerdict nilpotent_free(const OperatorSpace& s, std::uint64_t budget, Rng& rng, std::size_t samples = 200);

struct MotzkinTausskyReport {
  Verdict verdict = Verdict::Unknown;
  std::uint64_t pairs = 0;
  std::uint64_t hypothesis_pairs = 0;  // pairs satisfying the hypothesis
  std::optional<std::pair<Matrix, Matrix>> counterexample;
};

// All pairs (u, v) in Mat_n(F_q): if u and every lambda u + v are diagonalisable
// then u v = v u.  Refuted would contradict the Motzkin-Taussky theorem.
MotzkinTausskyReport motzkin_taussky_finite(std::uint64_t q, std::size_t n, std::uint64_t budget);

}  // namespace trivspec

#endif
