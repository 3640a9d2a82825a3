#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iecp/graph.hpp"
#include "iecp/stable_sets.hpp"

namespace iecp {

struct FeasibilityOptions {
  /// Check S2 inequalities only on the reduced family instead of all of S2.
  bool use_reduced = false;
  /// Collect every violated condition, not only the first.
  bool all_witnesses = false;
  int enumeration_bound = kDefaultEnumerationBound;
};

/// One stable-set condition: sum of c^2 over S against the sum over N(S).
/// S1 sets require equality, S2 sets strict inequality lhs < rhs.
struct Condition {
  StableSetRecord record;
  Rational lhs;
  Rational rhs;

  bool holds() const;
};

struct FeasibilityVerdict {
  bool feasible = true;
  /// First violated condition in enumeration order; present iff infeasible.
  std::optional<Condition> witness;
  /// Number of conditions in the checked system (S1 plus S2 or reduced S2).
  std::size_t conditions_checked = 0;
  bool used_reduced = false;
  /// Every violated condition, in enumeration order (all_witnesses mode only).
  std::vector<Condition> violations;
};

/// The conditions to check, in enumeration order: every S1 set and either all
/// S2 sets or the reduced family.
std::vector<StableSetRecord> condition_sets(const Graph& g, bool use_reduced,
                                            int enumeration_bound = kDefaultEnumerationBound);

Condition evaluate_condition(const CentralityTarget& c, const StableSetRecord& record);

/// Decides realizability of c by exact evaluation of all stable-set
/// conditions. Conditions are evaluated in parallel; the reported witness is
/// the first violation in enumeration order regardless of thread count.
FeasibilityVerdict check_feasibility(const Graph& g, const CentralityTarget& c,
                                     const FeasibilityOptions& options = {});

/// Sequential reference for check_feasibility; stops at the first violation
/// unless all_witnesses is set.
FeasibilityVerdict check_feasibility_serial(const Graph& g, const CentralityTarget& c,
                                            const FeasibilityOptions& options = {});

/// Human-readable account of a verdict.
std::string explain(const FeasibilityVerdict& verdict);

}  // namespace iecp
