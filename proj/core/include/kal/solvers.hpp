#ifndef KAL_SOLVERS_HPP
#define KAL_SOLVERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kal/model.hpp"

namespace kal {

enum class SolveMethod { Dp, BranchBound, Enumeration, Simplex, Greedy };

std::string to_string(SolveMethod m);

/// An exact optimum together with a point attaining it and the backend that
/// produced it. value == objective·argmax always holds exactly.
struct SolveResult {
  Rational value;
  Point argmax;
  SolveMethod method = SolveMethod::Enumeration;
};

struct SolveOptions {
  /// DP is used when the denominator-cleared capacity is at most this;
  /// larger instances fall to branch-and-bound.
  std::uint64_t dp_capacity_bound = 10'000'000;
  /// Branch-and-bound node budget; exhausting it raises BudgetError rather
  /// than returning a value nobody verified.
  std::uint64_t node_budget = 1'000'000;
};

/// Exact max of c·x over {x ∈ {0,1}^n : weights·x ≤ capacity}.
///
/// Weights and capacity are cleared to integers by their denominator LCM;
/// small capacities run a DP over capacity with rational profits, the rest
/// branch-and-bound with the fractional-relaxation bound. Requires c ≥ 0
/// (callers clamp; see rounding::round_objective).
SolveResult knapsack_opt(const KnapsackInstance& inst, const Objective& c,
                         const SolveOptions& opts = {});

/// All feasible 0/1 points, in increasing bitmask order (bit i = item i).
/// Oracle-grade: no pruning beyond feasibility. Throws ParamError when
/// n exceeds n_limit.
std::vector<Point> enumerate_feasible(const KnapsackInstance& inst, std::size_t n_limit = 20);

/// Exact optimum of the single-knapsack-constraint box LP
///   max{c·x : weights·x ≤ capacity, 0 ≤ x ≤ 1}
/// by the classic greedy: free items first, then profit/weight order with
/// one fractional item. Ties on equal ratios break toward the lower index.
SolveResult greedy_fractional_max(const Objective& c, const std::vector<Rational>& weights,
                                  const Rational& capacity);

enum class RowSense { LessEq, Eq };

struct SimplexRow {
  std::vector<Rational> coeffs;
  Rational rhs;
  RowSense sense = RowSense::LessEq;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  Point x;
};

/// Two-phase primal simplex over exact rationals with Bland's least-index
/// anti-cycling rule, on max{c·x : rows, x ≥ 0}. Dense tableau; fine at the
/// row counts used here (≤ ~700).
LpResult simplex_max(std::size_t n_vars, const std::vector<SimplexRow>& rows, const Objective& c);

/// max{c·x : sys rows, 0 ≤ x ≤ 1}, exact. The implicit box is added here.
/// Throws SolveError on infeasible/unbounded (impossible for well-formed
/// inputs since the box bounds everything).
SolveResult lp_max(const DownMonotoneSystem& sys, const Objective& c);

/// Same, for a general row list over x ≥ 0 (no implicit box; callers supply
/// every bound they need).
SolveResult lp_max(const LinearSystem& sys, const Objective& c);

} // namespace kal

#endif // KAL_SOLVERS_HPP
