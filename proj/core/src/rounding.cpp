#include "kal/rounding.hpp"

#include <algorithm>

#include "kal/error.hpp"

namespace kal {

bool CoeffSet::contains(const mpz_class& v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

Rational CoeffSet::ceiling() const {
  return Rational(5) * Rational(static_cast<long>(n)) / gamma;
}

CoeffSet coeff_set(std::uint64_t n, const Rational& epsilon) {
  if (n == 0) throw ParamError("coeff_set: n must be positive");
  if (epsilon.sign() <= 0 || epsilon > Rational(1, 2))
    throw ParamError("coeff_set: epsilon must satisfy 0 < epsilon <= 1/2 (the scheme is stated "
                     "for that range)");
  CoeffSet s;
  s.epsilon = epsilon;
  s.gamma = epsilon / (Rational(1) - epsilon);
  s.n = n;

  const Rational base = s.base();
  const Rational limit = s.ceiling();

  // Exact power ladder: climb while (1+γ/2)^ℓ ≤ 5n/γ. One extra power is
  // kept so bracketing searches have a strict upper fence.
  Rational power(1);
  while (power <= limit) {
    s.powers.push_back(power);
    power *= base;
  }
  s.powers.push_back(power);
  s.ell_max = static_cast<long>(s.powers.size()) - 2; // powers[ell_max] ≤ limit < powers[ell_max+1]

  s.values.push_back(0);
  s.value_witness.push_back(-1);
  for (long ell = 0; ell <= s.ell_max; ++ell) {
    mpz_class v = s.powers[static_cast<std::size_t>(ell)].floor_int();
    if (v != s.values.back()) {
      s.values.push_back(v);
      s.value_witness.push_back(ell);
    }
  }
  return s;
}

RoundedObjective round_objective(const Objective& c, std::uint64_t n, const Rational& epsilon) {
  if (c.dim() != n) throw ParamError("round_objective: dimension mismatch");
  const CoeffSet s = coeff_set(n, epsilon);

  RoundedObjective r;
  r.clamped = c;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.clamped.coeffs[i].sign() < 0) {
      r.clamped.coeffs[i] = Rational(0);
      r.clamped_indices.push_back(i);
    }
  }

  Rational max_c;
  for (const auto& ci : r.clamped.coeffs) max_c = std::max(max_c, ci);
  if (max_c.is_zero()) {
    r.trivial = true;
    r.c_tilde.assign(n, mpz_class(0));
    return r;
  }

  r.K = max_c * s.gamma / (Rational(5) * Rational(static_cast<long>(n)));
  r.c_tilde.assign(n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& ci = r.clamped.coeffs[i];
    if (ci < r.K) {
      r.G.push_back(i);
      continue;
    }
    // Largest k with (1+γ/2)^k ≤ cᵢ/K, found on the exact power ladder.
    // cᵢ/K ≤ ‖c‖∞/K = 5n/γ keeps k ≤ ell_max.
    const Rational target = ci / r.K;
    auto it = std::upper_bound(s.powers.begin(), s.powers.end(), target);
    const long k = static_cast<long>(it - s.powers.begin()) - 1;
    if (k < 0 || k > s.ell_max)
      throw SolveError("round_objective: exponent bracketing escaped the grid");
    r.c_tilde[i] = s.powers[static_cast<std::size_t>(k)].floor_int();
    if (!s.contains(r.c_tilde[i]))
      throw SolveError("round_objective: rounded coefficient left the coefficient set");
  }
  return r;
}

namespace {

RatioCheck certify_ratio_impl(const Objective& c, const Rational& epsilon, std::uint64_t n,
                              const std::function<Rational(const Objective&)>& maximize) {
  RatioCheck check;
  check.epsilon = epsilon;

  RoundedObjective rounded = round_objective(c, n, epsilon);
  check.gamma = epsilon / (Rational(1) - epsilon);
  check.clamped_indices = rounded.clamped_indices;

  if (rounded.trivial) {
    check.trivial = true;
    check.verdict = true;
    check.ratio = Rational(1);
    check.c_tilde = rounded.c_tilde;
    return check;
  }

  check.K = rounded.K;
  check.c_tilde = rounded.c_tilde;
  check.G = rounded.G;

  check.beta = maximize(rounded.clamped);
  rounded.beta_tilde = check.beta / rounded.K;

  std::vector<Rational> tilde_weights;
  tilde_weights.reserve(n);
  for (const auto& v : rounded.c_tilde) tilde_weights.emplace_back(v);
  check.bound =
      greedy_fractional_max(rounded.clamped, tilde_weights, rounded.beta_tilde).value;

  check.verdict = check.beta >= (Rational(1) - epsilon) * check.bound;
  check.ratio = check.bound.is_zero() ? Rational(1) : check.beta / check.bound;
  return check;
}

} // namespace

RatioCheck certify_ratio(const KnapsackInstance& P, const Objective& c, const Rational& epsilon,
                         const SolveOptions& opts) {
  return certify_ratio_impl(c, epsilon, P.n(), [&](const Objective& obj) {
    return knapsack_opt(P, obj, opts).value;
  });
}

RatioCheck certify_ratio(const DownMonotoneSystem& P, const Objective& c,
                         const Rational& epsilon) {
  return certify_ratio_impl(c, epsilon, P.n_vars, [&](const Objective& obj) {
    return lp_max(P, obj).value;
  });
}

namespace {

Rational tilde_dot(const std::vector<mpz_class>& c_tilde, const Point& y) {
  Rational acc;
  for (std::size_t i = 0; i < c_tilde.size(); ++i) {
    if (c_tilde[i] == 0 || y.coords[i].is_zero()) continue;
    acc += Rational(c_tilde[i]) * y.coords[i];
  }
  return acc;
}

template <typename Feasible>
bool validity_check_impl(const RoundedObjective& rounded, std::span<const Point> sample,
                         const Feasible& feasible) {
  if (rounded.trivial) return true;
  for (const auto& y : sample) {
    if (!feasible(y)) throw ParamError("validity_check: sample point is not feasible in P");
    if (!(tilde_dot(rounded.c_tilde, y) <= rounded.beta_tilde)) return false;
  }
  return true;
}

// Enumerates every tuple over `grid` (odometer order, last coordinate
// fastest), forming one inequality per tuple with the exact P-optimum as
// right-hand side.
std::vector<LinearRow> q_rows(const std::vector<mpz_class>& grid, std::uint64_t n,
                              std::uint64_t cap,
                              const std::function<Rational(const Objective&)>& maximize) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(grid.size()),
                static_cast<unsigned long>(n));
  if (total > cap)
    throw BudgetError("q_opt: " + total.get_str() + " tuples exceed cap " + std::to_string(cap));

  std::vector<LinearRow> rows;
  rows.reserve(total.get_ui());
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Objective tilde;
    tilde.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) tilde.coeffs.emplace_back(grid[idx[i]]);
    LinearRow row;
    row.coeffs = tilde.coeffs;
    row.rhs = maximize(tilde);
    rows.push_back(std::move(row));

    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < grid.size()) break;
      idx[pos] = 0;
      if (pos == 0) return rows;
    }
    if (n == 0) return rows;
  }
}

SolveResult q_opt_impl(const std::vector<mpz_class>& grid, const Objective& c, std::uint64_t n,
                       std::uint64_t cap,
                       const std::function<Rational(const Objective&)>& maximize) {
  DownMonotoneSystem q;
  q.n_vars = n;
  q.rows = q_rows(grid, n, cap, maximize);
  SolveResult res = lp_max(q, c);
  return res;
}

std::function<Rational(const Objective&)> hull_maximizer(const KnapsackInstance& P) {
  return [&P](const Objective& obj) { return knapsack_opt(P, obj).value; };
}

std::function<Rational(const Objective&)> lp_maximizer(const DownMonotoneSystem& P) {
  return [&P](const Objective& obj) { return lp_max(P, obj).value; };
}

std::vector<mpz_class> van_vyve_grid(std::uint64_t n, const Rational& epsilon) {
  const mpz_class top = van_vyve_grid_max(n, epsilon);
  std::vector<mpz_class> grid;
  for (mpz_class v = 0; v <= top; ++v) grid.push_back(v);
  return grid;
}

} // namespace

bool validity_check(const KnapsackInstance& P, const RoundedObjective& rounded,
                    std::span<const Point> sample) {
  return validity_check_impl(rounded, sample,
                             [&](const Point& y) { return instance_feasible(P, y); });
}

bool validity_check(const DownMonotoneSystem& P, const RoundedObjective& rounded,
                    std::span<const Point> sample) {
  return validity_check_impl(rounded, sample,
                             [&](const Point& y) { return system_feasible(P, y); });
}

SolveResult exhaustive_q_opt(const KnapsackInstance& P, const Objective& c,
                             const Rational& epsilon, std::uint64_t cap) {
  const CoeffSet s = coeff_set(P.n(), epsilon);
  return q_opt_impl(s.values, c, P.n(), cap, hull_maximizer(P));
}

SolveResult exhaustive_q_opt(const DownMonotoneSystem& P, const Objective& c,
                             const Rational& epsilon, std::uint64_t cap) {
  const CoeffSet s = coeff_set(P.n_vars, epsilon);
  return q_opt_impl(s.values, c, P.n_vars, cap, lp_maximizer(P));
}

SolveResult van_vyve_q_opt(const KnapsackInstance& P, const Objective& c, const Rational& epsilon,
                           std::uint64_t cap) {
  return q_opt_impl(van_vyve_grid(P.n(), epsilon), c, P.n(), cap, hull_maximizer(P));
}

SolveResult van_vyve_q_opt(const DownMonotoneSystem& P, const Objective& c,
                           const Rational& epsilon, std::uint64_t cap) {
  return q_opt_impl(van_vyve_grid(P.n_vars, epsilon), c, P.n_vars, cap, lp_maximizer(P));
}

mpz_class van_vyve_grid_max(std::uint64_t n, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw ParamError("van_vyve_grid_max: epsilon must be positive");
  return (Rational(static_cast<long>(n)) / epsilon).ceil_int();
}

} // namespace kal
