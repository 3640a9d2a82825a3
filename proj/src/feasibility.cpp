#include "iecp/feasibility.hpp"

#include <limits>
#include <sstream>

namespace iecp {

bool Condition::holds() const {
  return record.family == Family::S1 ? lhs == rhs : lhs < rhs;
}

std::vector<StableSetRecord> condition_sets(const Graph& g, bool use_reduced, int enumeration_bound) {
  auto all = enumerate_stable_sets(g, enumeration_bound);
  if (!use_reduced) return all;
  std::vector<StableSetRecord> out;
  for (const auto& r : all)
    if (r.family == Family::S1 ||
        (!splits_into_disjoint_neighborhoods(g, r.set) && !has_equal_neighborhood_extension(g, r.set)))
      out.push_back(r);
  return out;
}

Condition evaluate_condition(const CentralityTarget& c, const StableSetRecord& record) {
  return Condition{record, c.sum_squares(record.set), c.sum_squares(record.neighborhood)};
}

FeasibilityVerdict check_feasibility(const Graph& g, const CentralityTarget& c,
                                     const FeasibilityOptions& options) {
  require_matching(g, c);
  const auto sets = condition_sets(g, options.use_reduced, options.enumeration_bound);
  const long count = static_cast<long>(sets.size());

  FeasibilityVerdict verdict;
  verdict.conditions_checked = sets.size();
  verdict.used_reduced = options.use_reduced;

  std::vector<char> violated(options.all_witnesses ? sets.size() : 0, 0);
  long first = std::numeric_limits<long>::max();

#pragma omp parallel for schedule(static) reduction(min : first) if (count > 4096)
  for (long k = 0; k < count; ++k) {
    if (!options.all_witnesses && k > first) continue;
    if (!evaluate_condition(c, sets[k]).holds()) {
      if (k < first) first = k;
      if (options.all_witnesses) violated[k] = 1;
    }
  }

  if (first == std::numeric_limits<long>::max()) return verdict;
  verdict.feasible = false;
  verdict.witness = evaluate_condition(c, sets[first]);
  if (options.all_witnesses)
    for (long k = 0; k < count; ++k)
      if (violated[k]) verdict.violations.push_back(evaluate_condition(c, sets[k]));
  return verdict;
}

FeasibilityVerdict check_feasibility_serial(const Graph& g, const CentralityTarget& c,
                                            const FeasibilityOptions& options) {
  require_matching(g, c);
  const auto sets = condition_sets(g, options.use_reduced, options.enumeration_bound);
  FeasibilityVerdict verdict;
  verdict.conditions_checked = sets.size();
  verdict.used_reduced = options.use_reduced;
  for (const auto& record : sets) {
    Condition cond = evaluate_condition(c, record);
    if (cond.holds()) continue;
    if (verdict.feasible) {
      verdict.feasible = false;
      verdict.witness = cond;
    }
    if (!options.all_witnesses) break;
    verdict.violations.push_back(std::move(cond));
  }
  return verdict;
}

namespace {

void describe(std::ostream& out, const Condition& cond) {
  const auto& r = cond.record;
  out << "S=" << r.set.to_string() << " (" << to_string(r.family) << "), N(S)="
      << r.neighborhood.to_string() << ": sum_S c^2 = " << to_string(cond.lhs)
      << ", sum_N(S) c^2 = " << to_string(cond.rhs) << "; ";
  if (r.family == Family::S1)
    out << "equality violated (" << to_string(cond.lhs) << " ≠ " << to_string(cond.rhs) << ")";
  else
    out << "strict inequality violated (" << to_string(cond.lhs) << " ≮ " << to_string(cond.rhs)
        << ")";
}

}  // namespace

std::string explain(const FeasibilityVerdict& verdict) {
  std::ostringstream out;
  const char* family = verdict.used_reduced ? "S1 + reduced S2" : "S1 + S2";
  if (verdict.feasible) {
    out << "feasible: all " << verdict.conditions_checked << " conditions hold (" << family << ")\n";
    return out.str();
  }
  out << "infeasible: ";
  describe(out, *verdict.witness);
  out << "\nchecked " << verdict.conditions_checked << " conditions (" << family << ")\n";
  if (verdict.violations.size() > 1) {
    out << verdict.violations.size() << " violated conditions:\n";
    for (const auto& v : verdict.violations) {
      out << "  ";
      describe(out, v);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace iecp
