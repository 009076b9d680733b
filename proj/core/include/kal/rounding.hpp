#ifndef KAL_ROUNDING_HPP
#define KAL_ROUNDING_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "kal/model.hpp"
#include "kal/solvers.hpp"

namespace kal {

/// The geometric coefficient grid {0} ∪ {⌊(1+γ/2)^ℓ⌋ : ℓ = 0..ell_max} with
/// γ = ε/(1−ε) and ell_max the largest ℓ with (1+γ/2)^ℓ ≤ 5n/γ. Built by
/// exact repeated multiplication and comparison — no logarithms anywhere, so
/// the set is deterministic.
struct CoeffSet {
  Rational epsilon;
  Rational gamma;
  std::uint64_t n = 0;
  long ell_max = -1;
  std::vector<mpz_class> values;   // sorted, deduplicated, values[0] == 0
  std::vector<long> value_witness; // canonical (lowest) ℓ per value; -1 for 0
  std::vector<Rational> powers;    // (1+γ/2)^ℓ for ℓ = 0..ell_max+1

  bool contains(const mpz_class& v) const;
  Rational base() const { return Rational(1) + gamma / Rational(2); }
  /// 5n/γ = 5n(1−ε)/ε, the grid ceiling.
  Rational ceiling() const;
};

/// Requires 0 < ε ≤ 1/2 and n ≥ 1.
CoeffSet coeff_set(std::uint64_t n, const Rational& epsilon);

/// An objective after coefficient rounding: threshold K = ‖c‖∞·γ/(5n),
/// dropped indices G = {i : cᵢ < K}, and integer surrogate c̃ with
/// c̃ᵢ = ⌊(1+γ/2)^⌊log(cᵢ/K)⌋⌋ ∈ CoeffSet for i ∉ G. Exponents come from
/// exact power bracketing.
struct RoundedObjective {
  Objective clamped;               // input with negatives clamped to 0
  std::vector<std::size_t> clamped_indices;
  bool trivial = false;            // clamped input was all zero; K undefined
  Rational K;
  std::vector<std::size_t> G;
  std::vector<mpz_class> c_tilde;
  Rational beta_tilde;             // β/K, set once β is known
};

RoundedObjective round_objective(const Objective& c, std::uint64_t n, const Rational& epsilon);

/// The certified approximation ratio for one objective:
/// verdict ⇔ β ≥ (1−ε)·bound, where bound is the single-constraint LP value
/// max{c·x : c̃·x ≤ β̃, 0 ≤ x ≤ 1} that upper-bounds max over Q.
struct RatioCheck {
  Rational epsilon;
  Rational gamma;
  Rational K;
  Rational beta;
  Rational bound;
  Rational ratio; // β / bound, 1 when bound = 0
  bool verdict = false;
  bool trivial = false;
  std::vector<mpz_class> c_tilde;
  std::vector<std::size_t> G;
  std::vector<std::size_t> clamped_indices;
};

/// β is the exact integer-hull optimum (knapsack_opt).
RatioCheck certify_ratio(const KnapsackInstance& P, const Objective& c, const Rational& epsilon,
                         const SolveOptions& opts = {});
/// β is the exact LP optimum over the system (lp_max).
RatioCheck certify_ratio(const DownMonotoneSystem& P, const Objective& c, const Rational& epsilon);

/// Asserts c̃·y ≤ β̃ for every sample point, exactly. Throws ParamError if a
/// sample point is not feasible in P.
bool validity_check(const KnapsackInstance& P, const RoundedObjective& rounded,
                    std::span<const Point> sample);
bool validity_check(const DownMonotoneSystem& P, const RoundedObjective& rounded,
                    std::span<const Point> sample);

/// The true optimum over Q: every c̃ ∈ S^n becomes an inequality
/// c̃·x ≤ max{c̃·y : y ∈ P}, and the resulting polytope (plus box) is solved
/// exactly. |S|^n must stay under the cap — tiny-n oracle only.
SolveResult exhaustive_q_opt(const KnapsackInstance& P, const Objective& c,
                             const Rational& epsilon, std::uint64_t cap = 100'000);
SolveResult exhaustive_q_opt(const DownMonotoneSystem& P, const Objective& c,
                             const Rational& epsilon, std::uint64_t cap = 100'000);

/// Same oracle with the baseline integer grid {0, ..., ⌈n/ε⌉}.
SolveResult van_vyve_q_opt(const KnapsackInstance& P, const Objective& c, const Rational& epsilon,
                           std::uint64_t cap = 100'000);
SolveResult van_vyve_q_opt(const DownMonotoneSystem& P, const Objective& c,
                           const Rational& epsilon, std::uint64_t cap = 100'000);

/// Grid ceiling ⌈n/ε⌉ of the baseline scheme.
mpz_class van_vyve_grid_max(std::uint64_t n, const Rational& epsilon);

} // namespace kal

#endif // KAL_ROUNDING_HPP
