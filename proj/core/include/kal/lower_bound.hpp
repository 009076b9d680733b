#ifndef KAL_LOWER_BOUND_HPP
#define KAL_LOWER_BOUND_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kal/model.hpp"
#include "kal/set_system.hpp"
#include "kal/solvers.hpp"

namespace kal {

/// Parameters of the hard family. n = p² items plus one heavy item.
///
/// Strict mode enforces the construction's regime: ε < 2/27, n > 1/ε,
/// n ≥ 130, degree ⌊p/2 − 4⌋ ≥ 0 and b − d > 0 (so the dominating-point
/// family is nonempty at every admissible intersection size). Relaxed mode
/// builds anything well-defined and lets verdicts fall where they may;
/// negative tests and tiny oracles need it.
struct LowerBoundParams {
  std::uint64_t p = 0;
  Rational epsilon;
  bool strict = true;
  std::optional<int> degree; // relaxed-mode override; default ⌊p/2 − 4⌋

  std::uint64_t n() const { return p * p; }
  int default_degree() const; // ⌊p/2 − 4⌋, may be negative for small p
  int effective_degree() const;

  /// 1/(2εp), the weight shared by the n small items.
  Rational item_weight() const;
  /// n + 1/(2ε) − 1.
  Rational capacity() const;
  /// b = ⌊(1−2ε)p⌋, the small-item budget alongside item n+1. Can be
  /// negative outside the regime.
  std::int64_t cardinality_bound() const;

  /// Hard violations (always fatal) and regime violations (fatal in strict
  /// mode, warnings otherwise).
  std::vector<std::string> hard_errors() const;
  std::vector<std::string> regime_violations() const;
};

/// The knapsack instance over sqrt_n² + 1 items, without any regime or
/// primality requirement: small weights 1/(2ε·sqrt_n), heavy weight n,
/// capacity n + 1/(2ε) − 1. The extension module reuses this for perfect
/// squares whose root is not prime.
KnapsackInstance hard_instance(std::uint64_t sqrt_n, const Rational& epsilon);

/// hard_instance under the params' regime checks. Throws ParamError on a
/// strict violation; relaxed runs report violations through `warnings`.
KnapsackInstance build_instance(const LowerBoundParams& params,
                                std::vector<std::string>* warnings = nullptr);

/// The point x^S: 4/5 on the heavy coordinate, 1 − ε/2 on S, 0 elsewhere.
Point build_witness(std::span<const std::uint64_t> set, const Rational& epsilon, std::uint64_t n);

/// The objective separating x^S: 1 on the heavy coordinate, 1/(2εp) on S,
/// 0 elsewhere.
Objective separation_objective(std::span<const std::uint64_t> set, const Rational& epsilon,
                               std::uint64_t n);

struct GapCheck {
  std::vector<std::uint64_t> set;
  Rational witness_objective; // c·x^S
  Rational optimum;           // max{c·x : x ∈ P}
  bool verdict = false;       // (1−ε)·c·x^S > optimum
};

/// Evaluates the separation gap for one set. The knapsack solve is
/// restricted to the support S ∪ {n+1} (every other objective coefficient
/// is zero, and weights are nonnegative); full_solve forces the
/// whole-instance solve for paranoia runs.
GapCheck verify_gap(const KnapsackInstance& inst, std::span<const std::uint64_t> set,
                    const Rational& epsilon, bool full_solve = false,
                    const SolveOptions& opts = {});

/// The symmetry-averaged dominating point from the midpoint proof:
/// 1 on S ∩ S', 4/5 on the heavy coordinate, and
/// (4/5)·(b−α)/(2p−2α) + 1/5 on S △ S'. The underlying set family is never
/// enumerated; each element of S △ S' appears in exactly (b−α)/(2p−2α) of
/// its members. Throws ParamError when b − α ≤ 0.
Point dominating_point(std::span<const std::uint64_t> set_a, std::span<const std::uint64_t> set_b,
                       const Rational& epsilon, std::uint64_t p);

struct DominanceCheck {
  std::uint64_t alpha = 0;     // |S ∩ S'|
  std::int64_t b = 0;          // ⌊(1−2ε)p⌋
  Rational symdiff_coordinate; // value of the dominating point on S △ S'
  bool verdict = false;
  std::string failure; // first violated condition, when verdict is false
};

/// Verifies that the midpoint ½x^S + ½x^{S'} lies in P: the two convex-
/// combination ingredients are feasible 0/1 points and the dominating point
/// exceeds the midpoint coordinate-wise, all exactly.
DominanceCheck verify_midpoint(const KnapsackInstance& inst, std::span<const std::uint64_t> set_a,
                               std::span<const std::uint64_t> set_b, const Rational& epsilon);

} // namespace kal

#endif // KAL_LOWER_BOUND_HPP
