#ifndef KAL_BALAS_HPP
#define KAL_BALAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kal/model.hpp"
#include "kal/solvers.hpp"

namespace kal {

/// Balas union of the two fixed-heavy-coordinate pieces of the hard
/// instance. Variables are [x⁰ (n), x¹ (n), λ]; the projection back to the
/// instance space is x = x⁰ + x¹, x_{n+1} = λ.
///
/// Because all n small items share one weight, each piece's integer hull is
/// exactly a cardinality slice {0 ≤ x ≤ 1, Σx ≤ b_k}, with
/// b_k = min(n, ⌊2ε√n·(capacity − k·n)⌋). The piece descriptions are a
/// reconstruction; the LP = IP tests in verify_extension are what vouch for
/// them.
struct BalasExtension {
  std::uint64_t n = 0; // base items (a perfect square)
  Rational epsilon;
  std::int64_t b0 = 0;
  std::int64_t b1 = 0;
  bool piece1_empty = false; // b1 < 0: no feasible point has x_{n+1} = 1
  LinearSystem rows;         // over [x⁰, x¹, λ], x ≥ 0 implicit

  std::size_t num_vars() const { return 2 * n + 1; }
  std::vector<std::string> var_names() const;

  /// Lifts an instance objective (n+1 coords) to the extension variables.
  Objective lift_objective(const Objective& c) const;
  /// Projects an extension point back to instance space.
  Point project(const Point& ext_point) const;
};

/// Requires sqrt_n ≥ 1 and 0 < ε < 1. A negative b1 is representable (the
/// piece is dropped by forcing λ = 0) and flagged via piece1_empty.
BalasExtension build_balas_extension(std::uint64_t sqrt_n, const Rational& epsilon);

struct ExtensionReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t lift_checks = 0;
  std::uint64_t lift_failures = 0;
  bool verdict = false;
};

/// For `trials` seeded random objectives (negatives clamped to 0): the LP
/// optimum over the extension must equal the exact IP optimum over the
/// instance. Every IP argmax is also lifted into the extension and checked
/// feasible; when n ≤ 16 every feasible 0/1 point is lift-checked once.
ExtensionReport verify_extension(const BalasExtension& ext, const KnapsackInstance& inst,
                                 std::uint64_t trials, std::uint64_t seed, int jobs = 1);

/// Lifts a feasible 0/1 instance point into the extension (λ = x_{n+1},
/// items routed to the matching piece) and reports whether the lift
/// satisfies every extension row.
bool lift_is_feasible(const BalasExtension& ext, const Point& instance_point);

/// Exact membership of a 0/1 point in the projection of the extension,
/// decided by a feasibility LP with equality rows x⁰ + x¹ = y, λ = y_{n+1}.
/// Independent of the cardinality shortcut, so it can serve as an oracle.
bool projection_contains(const BalasExtension& ext, const Point& instance_point);

} // namespace kal

#endif // KAL_BALAS_HPP
