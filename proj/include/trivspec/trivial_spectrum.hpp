#ifndef TRIVSPEC_TRIVIAL_SPECTRUM_HPP
#define TRIVSPEC_TRIVIAL_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "trivspec/alternator.hpp"
#include "trivspec/operator_space.hpp"

namespace trivspec {

struct SpectrumVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::uint64_t checked = 0;        // elements examined
  std::optional<DMatrix> element;   // s with s x = x
  std::optional<Vec> fixed_vector;  // x != 0
};

// No element of S has a nonzero fixed vector.  Exhaustive over finite F within
// budget; otherwise random samples plus a nonisotropic alternator certificate
// (the supplied Gram matrix, or one found in Alt(S)).
SpectrumVerdict has_trivial_spectrum(const OperatorSpace& s, std::uint64_t budget, Rng& rng,
                                     const std::optional<Matrix>& alternator = std::nullopt);

// Enumerates sum_i t_i B_i + C over all t in F_p^k, in lexicographic order of t,
// and returns the first t for which the matrix is singular.
std::optional<std::vector<std::uint64_t>> first_singular_combination(const std::vector<Matrix>& basis,
                                                                     const Matrix& offset);
// Same enumeration, stopping at the first rank below bound.  visited counts the
// matrices examined.
std::optional<std::vector<std::uint64_t>> first_combination_below_rank(const std::vector<Matrix>& basis,
                                                                       const Matrix& offset, std::size_t bound,
                                                                       std::uint64_t* visited = nullptr);

// x -> x^T G x
QuadForm quadratic_form_of(const Matrix& gram);

// Span of the basis vectors other than the unit's coordinate: an F-hyperplane of D avoiding 1.
FSubspace default_hyperplane(const Algebra& alg);

// Upper triangular matrices with diagonal entry i in H_i.
OperatorSpace construct_triangular_model(const AlgebraPtr& alg, std::size_t n, const std::vector<FSubspace>& hyperplanes);
OperatorSpace construct_triangular_model(const AlgebraPtr& alg, std::size_t n);

// {M : M^* = -M, e(m_ii) = 0}
OperatorSpace construct_SH(const AlgebraPtr& alg, std::size_t n, const Profile& prof);
// P^{-1} SH_n(D); throws Singular.
OperatorSpace twisted_SH(const DMatrix& p, const Profile& prof);

// x -> e(X^* P X) as a quadratic form on the F-coordinates of D^n.
QuadForm e_form(const DMatrix& p, const Profile& prof);

// e(X^* P X) != 0 for X != 0.
NonisotropyResult is_e_nonisotropic(const DMatrix& p, const Profile& prof, std::uint64_t budget);

struct BlockReport {
  std::size_t size = 0;
  std::size_t dim = 0;
  std::string tag;  // "hyperplane" or a quadratic type tag
  OperatorSpace space;
  std::optional<Profile> profile;
  std::optional<Matrix> bilinear;           // alternator b_i
  std::optional<SesquilinearForm> form;     // B_i
  NonisotropyResult nonisotropy;
  bool matches_alternating_maps = false;    // S_i = A_{b_i, D}
};

struct ClassificationReport {
  std::vector<DSubspace> flag;
  std::vector<std::size_t> partition;
  DMatrix basis;
  std::vector<BlockReport> blocks;
  SpectrumVerdict spectrum;
  Verdict verdict = Verdict::Unknown;
};

// Throws NotOptimalDim, SpectrumNotTrivial, CardinalityHypothesisFails, or
// any error of the block analysis.
ClassificationReport classify_optimal(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

struct LemmaVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<DMatrix> witness;
};

// With S containing every u such that im u in W in ker u, W is S-invariant.
// Throws HypothesisFails.
LemmaVerdict verify_invariant_subspace_lemma(const OperatorSpace& s, const DSubspace& w, std::uint64_t budget,
                                             Rng& rng);

// No S + F M with M outside S has trivial spectrum.  Refuted carries the
// extending matrix M.  Throws SpectrumNotTrivial when S itself fails.
LemmaVerdict local_maximality(const OperatorSpace& s, std::uint64_t budget);

// Maps u with im u in W in ker u, as an operator space.
OperatorSpace block_space(const DSubspace& w);

}  // namespace trivspec

#endif
