#include "kal/lower_bound.hpp"

#include <algorithm>

#include "kal/error.hpp"
#include "kal/field.hpp"

namespace kal {

int LowerBoundParams::default_degree() const {
  // ⌊p/2 − 4⌋ = ⌊(p − 8)/2⌋; exact for all p via floor division.
  const Rational d = Rational(static_cast<long>(p), 2) - Rational(4);
  return static_cast<int>(d.floor_int().get_si());
}

int LowerBoundParams::effective_degree() const {
  return degree.value_or(default_degree());
}

Rational LowerBoundParams::item_weight() const {
  return Rational(1) / (Rational(2) * epsilon * Rational(static_cast<long>(p)));
}

Rational LowerBoundParams::capacity() const {
  return Rational(static_cast<long>(n())) + Rational(1) / (Rational(2) * epsilon) - Rational(1);
}

std::int64_t LowerBoundParams::cardinality_bound() const {
  const Rational b = (Rational(1) - Rational(2) * epsilon) * Rational(static_cast<long>(p));
  return b.floor_int().get_si();
}

std::vector<std::string> LowerBoundParams::hard_errors() const {
  std::vector<std::string> errs;
  if (!is_prime(p)) errs.push_back("p = " + std::to_string(p) + " is not prime");
  if (epsilon.sign() <= 0) errs.push_back("epsilon must be positive");
  if (degree && *degree < 0) errs.push_back("degree override must be nonnegative");
  if (degree && static_cast<std::uint64_t>(*degree) >= p)
    errs.push_back("degree override must be < p");
  if (!degree && default_degree() < 0)
    errs.push_back("default degree ⌊p/2 − 4⌋ = " + std::to_string(default_degree()) +
                   " is negative; pass an explicit degree for p < 8");
  return errs;
}

std::vector<std::string> LowerBoundParams::regime_violations() const {
  std::vector<std::string> v;
  if (epsilon.sign() <= 0) return v; // hard error already
  if (!(epsilon < Rational(2, 27)))
    v.push_back("epsilon = " + epsilon.str() + " is not < 2/27");
  if (!(Rational(static_cast<long>(n())) * epsilon > Rational(1)))
    v.push_back("n = " + std::to_string(n()) + " is not > 1/epsilon");
  if (n() < 130) v.push_back("n = " + std::to_string(n()) + " is < 130");
  if (degree && *degree != default_degree())
    v.push_back("degree override " + std::to_string(*degree) + " differs from ⌊p/2 − 4⌋ = " +
                std::to_string(default_degree()));
  const std::int64_t b = cardinality_bound();
  const int d = effective_degree();
  if (d >= 0 && b - d <= 0)
    v.push_back("b − d = " + std::to_string(b - d) +
                " is not positive; dominating points are undefined at maximal intersections");
  return v;
}

KnapsackInstance hard_instance(std::uint64_t sqrt_n, const Rational& epsilon) {
  if (sqrt_n == 0) throw ParamError("hard_instance: sqrt_n must be positive");
  if (epsilon.sign() <= 0) throw ParamError("hard_instance: epsilon must be positive");
  const auto n = sqrt_n * sqrt_n;
  const Rational small = Rational(1) / (Rational(2) * epsilon * Rational(static_cast<long>(sqrt_n)));
  KnapsackInstance inst;
  inst.weights.assign(n, small);
  inst.weights.push_back(Rational(static_cast<long>(n)));
  inst.capacity =
      Rational(static_cast<long>(n)) + Rational(1) / (Rational(2) * epsilon) - Rational(1);
  return inst;
}

KnapsackInstance build_instance(const LowerBoundParams& params,
                                std::vector<std::string>* warnings) {
  const auto hard = params.hard_errors();
  if (!hard.empty()) throw ParamError("build_instance: " + hard.front());
  const auto regime = params.regime_violations();
  if (params.strict && !regime.empty())
    throw ParamError("build_instance (strict): " + regime.front());
  if (warnings != nullptr) {
    for (const auto& w : regime) warnings->push_back(w);
  }
  return hard_instance(params.p, params.epsilon);
}

namespace {

void check_set_range(std::span<const std::uint64_t> set, std::uint64_t n) {
  for (auto e : set) {
    if (e >= n)
      throw ParamError("set element " + std::to_string(e) + " out of range [0, " +
                       std::to_string(n) + ")");
  }
}

} // namespace

Point build_witness(std::span<const std::uint64_t> set, const Rational& epsilon, std::uint64_t n) {
  check_set_range(set, n);
  Point x;
  x.coords.assign(n + 1, Rational(0));
  const Rational in_set = Rational(1) - epsilon / Rational(2);
  for (auto e : set) x.coords[e] = in_set;
  x.coords[n] = Rational(4, 5);
  return x;
}

Objective separation_objective(std::span<const std::uint64_t> set, const Rational& epsilon,
                               std::uint64_t n) {
  check_set_range(set, n);
  // 1/(2ε√n) with √n recovered from the ambient dimension is wrong for
  // non-square n, so take p = |S| directly: the construction has |S| = p.
  Objective c;
  c.coeffs.assign(n + 1, Rational(0));
  const Rational in_set =
      Rational(1) / (Rational(2) * epsilon * Rational(static_cast<long>(set.size())));
  for (auto e : set) c.coeffs[e] = in_set;
  c.coeffs[n] = Rational(1);
  return c;
}

GapCheck verify_gap(const KnapsackInstance& inst, std::span<const std::uint64_t> set,
                    const Rational& epsilon, bool full_solve, const SolveOptions& opts) {
  const std::uint64_t n = inst.n() - 1;
  check_set_range(set, n);

  const Objective c = separation_objective(set, epsilon, n);
  const Point witness = build_witness(set, epsilon, n);

  GapCheck check;
  check.set.assign(set.begin(), set.end());
  check.witness_objective = dot(c, witness);

  if (full_solve) {
    check.optimum = knapsack_opt(inst, c, opts).value;
  } else {
    // Restrict to the support S ∪ {n+1}: all other objective coefficients
    // are zero and weights are nonnegative, so dropping those items cannot
    // change the optimum.
    KnapsackInstance sub;
    Objective sub_c;
    for (auto e : set) {
      sub.weights.push_back(inst.weights[e]);
      sub_c.coeffs.push_back(c.coeffs[e]);
    }
    sub.weights.push_back(inst.weights[n]);
    sub_c.coeffs.push_back(c.coeffs[n]);
    sub.capacity = inst.capacity;
    check.optimum = knapsack_opt(sub, sub_c, opts).value;
  }

  check.verdict = (Rational(1) - epsilon) * check.witness_objective > check.optimum;
  return check;
}

namespace {

struct PairSplit {
  std::vector<std::uint64_t> both;    // S ∩ S'
  std::vector<std::uint64_t> symdiff; // S △ S'
};

PairSplit split_pair(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  PairSplit out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.both));
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out.symdiff));
  return out;
}

Rational symdiff_value(std::int64_t b, std::uint64_t alpha, std::uint64_t p) {
  // (4/5)·(b−α)/(2p−2α) + 1/5
  const long num = static_cast<long>(b) - static_cast<long>(alpha);
  const long den = 2 * static_cast<long>(p) - 2 * static_cast<long>(alpha);
  return Rational(4, 5) * Rational(num, den) + Rational(1, 5);
}

} // namespace

Point dominating_point(std::span<const std::uint64_t> set_a, std::span<const std::uint64_t> set_b,
                       const Rational& epsilon, std::uint64_t p) {
  const std::uint64_t n = p * p;
  check_set_range(set_a, n);
  check_set_range(set_b, n);
  const PairSplit parts = split_pair(set_a, set_b);
  if (parts.symdiff.empty()) throw ParamError("dominating_point: sets are identical");
  const auto alpha = static_cast<std::uint64_t>(parts.both.size());

  LowerBoundParams params;
  params.p = p;
  params.epsilon = epsilon;
  const std::int64_t b = params.cardinality_bound();
  if (b - static_cast<std::int64_t>(alpha) <= 0)
    throw ParamError("dominating_point: b − α = " + std::to_string(b - static_cast<std::int64_t>(alpha)) +
                     " must be positive (regime violation)");

  Point x;
  x.coords.assign(n + 1, Rational(0));
  for (auto e : parts.both) x.coords[e] = Rational(1);
  const Rational sym = symdiff_value(b, alpha, p);
  for (auto e : parts.symdiff) x.coords[e] = sym;
  x.coords[n] = Rational(4, 5);
  return x;
}

DominanceCheck verify_midpoint(const KnapsackInstance& inst, std::span<const std::uint64_t> set_a,
                               std::span<const std::uint64_t> set_b, const Rational& epsilon) {
  const std::uint64_t n = inst.n() - 1;
  check_set_range(set_a, n);
  check_set_range(set_b, n);
  const PairSplit parts = split_pair(set_a, set_b);

  DominanceCheck check;
  check.alpha = parts.both.size();

  const auto p = static_cast<std::uint64_t>(set_a.size());
  LowerBoundParams params;
  params.p = p;
  params.epsilon = epsilon;
  check.b = params.cardinality_bound();

  if (parts.symdiff.empty()) {
    check.failure = "sets are identical";
    return check;
  }
  if (set_a.size() != set_b.size()) {
    check.failure = "sets have different sizes";
    return check;
  }
  if (check.b - static_cast<std::int64_t>(check.alpha) <= 0) {
    check.failure = "b − α not positive";
    return check;
  }

  // All small items share one weight; the two feasibility conditions below
  // rely on that, so pin it down first.
  const Rational w = inst.weights.front();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (inst.weights[i] != w) {
      check.failure = "small-item weights are not uniform";
      return check;
    }
  }

  // (1) A member of the dominating family is feasible:
  //     heavy item + b small items, weight n·x_{n+1} + b·w ≤ capacity.
  const Rational member_weight =
      inst.weights[n] + Rational(static_cast<long>(check.b)) * w;
  if (!(member_weight <= inst.capacity)) {
    check.failure = "family member infeasible: " + member_weight.str() + " > " +
                    inst.capacity.str();
    return check;
  }

  // (2) The union S ∪ S' is feasible: (2p − α)·w ≤ capacity.
  const Rational union_weight =
      Rational(2 * static_cast<long>(p) - static_cast<long>(check.alpha)) * w;
  if (!(union_weight <= inst.capacity)) {
    check.failure = "union point infeasible: " + union_weight.str() + " > " +
                    inst.capacity.str();
    return check;
  }

  // (3) Coordinate-wise domination of the midpoint ½x^S + ½x^{S'}.
  check.symdiff_coordinate = symdiff_value(check.b, check.alpha, p);
  const Rational mid_in_both = Rational(1) - epsilon / Rational(2);     // both halves contribute
  const Rational mid_in_symdiff = mid_in_both / Rational(2);            // one half contributes
  if (!(Rational(1) >= mid_in_both)) {
    check.failure = "intersection coordinate violated";
    return check;
  }
  if (!(check.symdiff_coordinate >= mid_in_symdiff)) {
    check.failure = "symmetric-difference coordinate violated: " +
                    check.symdiff_coordinate.str() + " < " + mid_in_symdiff.str();
    return check;
  }
  // Heavy coordinate: both sides are exactly 4/5; off-support both are 0.

  check.verdict = true;
  return check;
}

} // namespace kal
