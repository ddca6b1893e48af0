#ifndef TRIVSPEC_ORACLE_HPP
#define TRIVSPEC_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trivspec/operator_space.hpp"

namespace trivspec {

struct OracleResult {
  std::size_t max_dim = 0;
  std::optional<OperatorSpace> witness;  // lexicographically least of maximal dimension
  Verdict verdict = Verdict::Unknown;    // Certified, or BudgetExceeded with a lower bound
  std::uint64_t element_checks = 0;
  std::uint64_t spaces_visited = 0;
  std::uint64_t predicted_checks = 0;  // upper bound reported before the search
};

// Largest F-subspace of Mat_n(D) all of whose elements pass pred (evaluated on
// the realified matrix).  pred must hold on 0 and be inherited by subspaces.
// Depth-first search over reduced echelon bases, one row at a time, checking
// only the new coset layer.
OracleResult exhaustive_max_subspace(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget,
                                     const std::function<bool(const Matrix&)>& pred);

OracleResult exhaustive_max_trivspec(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget);
OracleResult exhaustive_max_diagonalisable(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget);
OracleResult exhaustive_max_semisimple(const AlgebraPtr& alg, std::size_t n, std::uint64_t budget);

struct SubspaceCount {
  std::uint64_t total = 0;    // k-dimensional subspaces visited
  std::uint64_t passing = 0;  // with trivial spectrum
  std::optional<OperatorSpace> first;
};

// Plain enumeration of every k-dimensional F-subspace of Mat_n(D), testing the
// spectrum of each by determinants.  Throws BudgetExceeded.
SubspaceCount count_trivspec_subspaces(const AlgebraPtr& alg, std::size_t n, std::size_t k, std::uint64_t budget);

// Number of k-dimensional subspaces of F_q^N, or UINT64_MAX on overflow.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t N, std::size_t k);

// Seeded random subspaces of Mat_{rows, cols}(D): dimension uniform in
// [0, N] (or fixed), pivot set uniform, free entries uniform.
std::vector<OperatorSpace> random_space_fuzzer(const AlgebraPtr& alg, std::size_t rows, std::size_t cols,
                                               std::size_t count, std::uint64_t seed,
                                               std::optional<std::size_t> dim = std::nullopt);

}  // namespace trivspec

#endif
