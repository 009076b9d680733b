#include "kal/balas.hpp"

#include <atomic>

#include "kal/error.hpp"
#include "kal/lower_bound.hpp"
#include "kal/parallel.hpp"
#include "kal/rng.hpp"

namespace kal {

std::vector<std::string> BalasExtension::var_names() const {
  std::vector<std::string> names;
  names.reserve(num_vars());
  for (std::uint64_t i = 0; i < n; ++i) names.push_back("x0_" + std::to_string(i));
  for (std::uint64_t i = 0; i < n; ++i) names.push_back("x1_" + std::to_string(i));
  names.push_back("lambda");
  return names;
}

Objective BalasExtension::lift_objective(const Objective& c) const {
  if (c.dim() != n + 1) throw ParamError("lift_objective: expected n+1 coordinates");
  Objective out;
  out.coeffs.reserve(num_vars());
  for (std::uint64_t i = 0; i < n; ++i) out.coeffs.push_back(c.coeffs[i]);
  for (std::uint64_t i = 0; i < n; ++i) out.coeffs.push_back(c.coeffs[i]);
  out.coeffs.push_back(c.coeffs[n]);
  return out;
}

Point BalasExtension::project(const Point& ext_point) const {
  if (ext_point.dim() != num_vars()) throw ParamError("project: wrong dimension");
  Point out;
  out.coords.reserve(n + 1);
  for (std::uint64_t i = 0; i < n; ++i)
    out.coords.push_back(ext_point.coords[i] + ext_point.coords[n + i]);
  out.coords.push_back(ext_point.coords[2 * n]);
  return out;
}

BalasExtension build_balas_extension(std::uint64_t sqrt_n, const Rational& epsilon) {
  if (sqrt_n == 0) throw ParamError("build_balas_extension: sqrt_n must be positive");
  if (epsilon.sign() <= 0 || epsilon >= Rational(1))
    throw ParamError("build_balas_extension: epsilon must lie in (0, 1)");

  BalasExtension ext;
  ext.n = sqrt_n * sqrt_n;
  ext.epsilon = epsilon;

  const KnapsackInstance inst = hard_instance(sqrt_n, epsilon);
  const Rational two_eps_s = Rational(2) * epsilon * Rational(static_cast<long>(sqrt_n));
  const auto n_rat = Rational(static_cast<long>(ext.n));
  const auto piece_bound = [&](int k) {
    const Rational slack = inst.capacity - Rational(k) * n_rat;
    const mpz_class raw = (two_eps_s * slack).floor_int();
    const mpz_class capped = std::min(raw, mpz_class(static_cast<unsigned long>(ext.n)));
    return static_cast<std::int64_t>(capped.get_si());
  };
  ext.b0 = piece_bound(0);
  ext.b1 = piece_bound(1);
  ext.piece1_empty = ext.b1 < 0;

  const std::size_t nv = ext.num_vars();
  const std::size_t lambda = 2 * ext.n;
  ext.rows.n_vars = nv;
  auto zero_row = [&] {
    LinearRow r;
    r.coeffs.assign(nv, Rational(0));
    return r;
  };

  // Piece 0 (λ = 0 side): 0 ≤ x⁰ ≤ (1−λ)·1, Σx⁰ ≤ b0(1−λ).
  for (std::uint64_t i = 0; i < ext.n; ++i) {
    LinearRow r = zero_row();
    r.coeffs[i] = Rational(1);
    r.coeffs[lambda] = Rational(1);
    r.rhs = Rational(1);
    ext.rows.rows.push_back(std::move(r));
  }
  {
    LinearRow r = zero_row();
    for (std::uint64_t i = 0; i < ext.n; ++i) r.coeffs[i] = Rational(1);
    r.coeffs[lambda] = Rational(static_cast<long>(ext.b0));
    r.rhs = Rational(static_cast<long>(ext.b0));
    ext.rows.rows.push_back(std::move(r));
  }

  if (ext.piece1_empty) {
    // No feasible solution has x_{n+1} = 1; drop the piece by pinning λ and
    // x¹ to zero.
    LinearRow r = zero_row();
    r.coeffs[lambda] = Rational(1);
    r.rhs = Rational(0);
    ext.rows.rows.push_back(std::move(r));
    for (std::uint64_t i = 0; i < ext.n; ++i) {
      LinearRow ri = zero_row();
      ri.coeffs[ext.n + i] = Rational(1);
      ri.rhs = Rational(0);
      ext.rows.rows.push_back(std::move(ri));
    }
    return ext;
  }

  // Piece 1 (λ = 1 side): 0 ≤ x¹ ≤ λ·1, Σx¹ ≤ b1·λ, λ ≤ 1.
  for (std::uint64_t i = 0; i < ext.n; ++i) {
    LinearRow r = zero_row();
    r.coeffs[ext.n + i] = Rational(1);
    r.coeffs[lambda] = Rational(-1);
    r.rhs = Rational(0);
    ext.rows.rows.push_back(std::move(r));
  }
  {
    LinearRow r = zero_row();
    for (std::uint64_t i = 0; i < ext.n; ++i) r.coeffs[ext.n + i] = Rational(1);
    r.coeffs[lambda] = Rational(-static_cast<long>(ext.b1));
    r.rhs = Rational(0);
    ext.rows.rows.push_back(std::move(r));
  }
  {
    LinearRow r = zero_row();
    r.coeffs[lambda] = Rational(1);
    r.rhs = Rational(1);
    ext.rows.rows.push_back(std::move(r));
  }
  return ext;
}

bool lift_is_feasible(const BalasExtension& ext, const Point& instance_point) {
  if (instance_point.dim() != ext.n + 1) throw ParamError("lift: wrong dimension");
  const Rational& last = instance_point.coords[ext.n];
  if (!last.is_zero() && last != Rational(1))
    throw ParamError("lift: heavy coordinate must be 0/1");
  Point lifted;
  lifted.coords.assign(ext.num_vars(), Rational(0));
  const bool heavy = last == Rational(1);
  for (std::uint64_t i = 0; i < ext.n; ++i) {
    lifted.coords[(heavy ? ext.n : 0) + i] = instance_point.coords[i];
  }
  lifted.coords[2 * ext.n] = last;

  for (const auto& row : ext.rows.rows) {
    Rational acc;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      if (row.coeffs[i].is_zero() || lifted.coords[i].is_zero()) continue;
      acc += row.coeffs[i] * lifted.coords[i];
    }
    if (acc > row.rhs) return false;
  }
  for (const auto& v : lifted.coords) {
    if (v.sign() < 0) return false;
  }
  return true;
}

bool projection_contains(const BalasExtension& ext, const Point& instance_point) {
  if (instance_point.dim() != ext.n + 1) throw ParamError("projection_contains: wrong dimension");
  const std::size_t nv = ext.num_vars();
  std::vector<SimplexRow> rows;
  rows.reserve(ext.rows.rows.size() + ext.n + 1);
  for (const auto& r : ext.rows.rows) rows.push_back({r.coeffs, r.rhs, RowSense::LessEq});
  for (std::uint64_t i = 0; i < ext.n; ++i) {
    SimplexRow eq;
    eq.coeffs.assign(nv, Rational(0));
    eq.coeffs[i] = Rational(1);
    eq.coeffs[ext.n + i] = Rational(1);
    eq.rhs = instance_point.coords[i];
    eq.sense = RowSense::Eq;
    rows.push_back(std::move(eq));
  }
  {
    SimplexRow eq;
    eq.coeffs.assign(nv, Rational(0));
    eq.coeffs[2 * ext.n] = Rational(1);
    eq.rhs = instance_point.coords[ext.n];
    eq.sense = RowSense::Eq;
    rows.push_back(std::move(eq));
  }
  Objective zero;
  zero.coeffs.assign(nv, Rational(0));
  return simplex_max(nv, rows, zero).status == LpStatus::Optimal;
}

ExtensionReport verify_extension(const BalasExtension& ext, const KnapsackInstance& inst,
                                 std::uint64_t trials, std::uint64_t seed, int jobs) {
  if (inst.n() != ext.n + 1)
    throw ParamError("verify_extension: instance does not match the extension");

  ExtensionReport rep;
  rep.trials = trials;

  std::atomic<std::uint64_t> failures{0};
  std::atomic<std::uint64_t> lift_failures{0};
  std::atomic<std::uint64_t> lift_checks{0};

  parallel_for(trials, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      SplitMix64 rng(SplitMix64::derive(seed, t));
      Objective c;
      c.coeffs.reserve(inst.n());
      for (std::size_t i = 0; i < inst.n(); ++i) {
        // Random rational in [-8, 24]/den, clamped to ≥ 0 below.
        Rational v(rng.range(-8, 24), rng.range(1, 8));
        if (v.sign() < 0) v = Rational(0);
        c.coeffs.push_back(std::move(v));
      }
      const SolveResult ip = knapsack_opt(inst, c);
      const SolveResult lp = lp_max(ext.rows, ext.lift_objective(c));
      if (lp.value != ip.value) {
        failures.fetch_add(1);
        continue;
      }
      lift_checks.fetch_add(1);
      if (!lift_is_feasible(ext, ip.argmax)) lift_failures.fetch_add(1);
    }
  });

  // One exhaustive lift sweep at desk scale.
  if (ext.n + 1 <= 17) {
    for (const auto& y : enumerate_feasible(inst, 17)) {
      lift_checks.fetch_add(1);
      if (!lift_is_feasible(ext, y)) lift_failures.fetch_add(1);
    }
  }

  rep.failures = failures.load();
  rep.lift_failures = lift_failures.load();
  rep.lift_checks = lift_checks.load();
  rep.verdict = rep.failures == 0 && rep.lift_failures == 0;
  return rep;
}

} // namespace kal
