#ifndef TRIVSPEC_INTRANSITIVITY_HPP
#define TRIVSPEC_INTRANSITIVITY_HPP

#include <optional>
#include <string>

#include "trivspec/alternator.hpp"
#include "trivspec/operator_space.hpp"

namespace trivspec {

struct IntransitivityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<DSubspace> witness_subspace;
  std::optional<Vec> witness_vector;  // x with S x = V (or the relevant target)
};

// trk(S) < dn.
IntransitivityVerdict is_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

// S intersected with Hom(U, V'), written in the canonical basis of V'.
OperatorSpace restrict_target(const OperatorSpace& s, const DSubspace& w);
// The quotient map V -> V/V' as a D-matrix: coordinates outside the pivot rows
// after reducing by the canonical basis of V'.
DMatrix quotient_map(const DSubspace& w);
// pi S for pi : V -> V/V'.
OperatorSpace project(const OperatorSpace& s, const DSubspace& w);

IntransitivityVerdict is_deeply_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng);
IntransitivityVerdict is_primitively_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng);
IntransitivityVerdict is_weakly_primitively_intransitive(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

struct ClauseResult {
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct AtkinsonReport {
  std::size_t n = 0, d = 0, dim = 0, trk = 0;
  std::uint64_t alpha = 0;
  IntransitivityVerdict deep;
  ClauseResult a, b, c;
  std::size_t alt_dim = 0;
  std::optional<QuadraticTypeDetection> type;
};

// Checks the dimension bounds and the alternator clause on a deeply intransitive
// space with |F| >= nd.  Throws HypothesisFails when deep intransitivity is not
// certified, CardinalityHypothesisFails, or BoundViolated.
AtkinsonReport verify_atkinson_bounds(const OperatorSpace& s, std::uint64_t budget, Rng& rng);

}  // namespace trivspec

#endif
