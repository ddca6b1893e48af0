#ifndef TRIVSPEC_VERDICT_HPP
#define TRIVSPEC_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace trivspec {

enum class Verdict {
  Certified,
  CertifiedByAlternator,
  CertifiedProbabilistic,
  Unknown,
  BudgetExceeded,
  Refuted,
};

const char* verdict_name(Verdict v);
// 0 certified, 1 refuted, 2 unknown or out of budget.
int exit_code(Verdict v);
bool is_certified(Verdict v);

// Default cap on the number of elements visited by exhaustive checks.
inline constexpr std::uint64_t kDefaultBudget = 1ULL << 22;

}  // namespace trivspec

#endif
