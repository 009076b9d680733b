#ifndef KAL_MODEL_HPP
#define KAL_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kal/rational.hpp"

namespace kal {

/// A 0/1 knapsack: item weights plus a capacity. Its integer hull
/// conv{x ∈ {0,1}^n : weights·x ≤ capacity} is the polytope under study;
/// nonnegative weights make that hull down-monotone.
struct KnapsackInstance {
  std::vector<Rational> weights;
  Rational capacity;

  std::size_t n() const { return weights.size(); }
};

/// One inequality coeffs·x ≤ rhs.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// A list of inequalities over x ≥ 0 with no sign restrictions on the
/// coefficients. Used as the generic wire format for systems.
struct LinearSystem {
  std::size_t n_vars = 0;
  std::vector<LinearRow> rows;
};

/// Inequality description of a down-monotone region: all coefficients and
/// right-hand sides nonnegative, box constraints 0 ≤ x ≤ 1 implicit.
struct DownMonotoneSystem {
  std::size_t n_vars = 0;
  std::vector<LinearRow> rows;
};

struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
};

struct Objective {
  std::vector<Rational> coeffs;

  std::size_t dim() const { return coeffs.size(); }
};

Rational dot(const Objective& c, const Point& x);

/// Outcome of a structural validation pass. `ok` is false iff an invariant
/// is violated; warnings do not affect `ok`.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  std::size_t n = 0;
  Rational total_weight;
  Rational capacity;
};

/// Confirms the nonnegativity invariants and reports n, total weight and
/// capacity. Never throws; violations land in the report.
ValidationReport validate_instance(const KnapsackInstance& inst);

/// Throws ParamError if the instance violates its invariants.
void require_valid(const KnapsackInstance& inst);

/// Checks coefficient/rhs nonnegativity for a down-monotone system.
ValidationReport validate_system(const DownMonotoneSystem& sys);
void require_valid(const DownMonotoneSystem& sys);

/// weights·x for a point of matching dimension.
Rational instance_weight(const KnapsackInstance& inst, const Point& x);

/// x ∈ [0,1]^n and weights·x ≤ capacity, exactly.
bool instance_feasible(const KnapsackInstance& inst, const Point& x);

/// x ∈ [0,1]^n and every row satisfied, exactly.
bool system_feasible(const DownMonotoneSystem& sys, const Point& x);

} // namespace kal

#endif // KAL_MODEL_HPP
