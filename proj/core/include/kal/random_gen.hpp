#ifndef KAL_RANDOM_GEN_HPP
#define KAL_RANDOM_GEN_HPP

#include "kal/model.hpp"
#include "kal/rng.hpp"

namespace kal {

/// Seeded random knapsack instance with small rational weights, scaled the
/// way the approximation scheme assumes: every single item fits on its own
/// (P touches each facet of the unit box), which is what "suppose P ⊆
/// [0,1]^n" means after coordinate scaling. Denominators stay small so the
/// denominator-cleared capacity remains in DP range.
inline KnapsackInstance random_scaled_instance(SplitMix64& rng, std::size_t n) {
  KnapsackInstance inst;
  inst.weights.reserve(n);
  Rational max_w;
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    Rational w(rng.range(0, 12), rng.range(1, 4));
    max_w = std::max(max_w, w);
    total += w;
    inst.weights.push_back(std::move(w));
  }
  // Capacity in [max weight, total weight]: singletons feasible, the
  // all-ones point usually not.
  const Rational spread = total - max_w;
  inst.capacity = max_w + spread * Rational(rng.range(0, 16), 16);
  return inst;
}

/// Random objective with a controlled share of zero coefficients.
inline Objective random_objective(SplitMix64& rng, std::size_t n) {
  Objective c;
  c.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(8) == 0) {
      c.coeffs.emplace_back(0);
    } else {
      c.coeffs.push_back(rng.rational(24, 6));
    }
  }
  return c;
}

/// Seeded random down-monotone system whose unit vectors are all feasible
/// (each rhs is at least the largest coefficient in its row).
inline DownMonotoneSystem random_scaled_system(SplitMix64& rng, std::size_t n,
                                               std::size_t n_rows) {
  DownMonotoneSystem sys;
  sys.n_vars = n;
  for (std::size_t r = 0; r < n_rows; ++r) {
    LinearRow row;
    Rational max_c;
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = rng.below(3) == 0 ? Rational(0) : rng.rational(12, 4);
      max_c = std::max(max_c, v);
      row.coeffs.push_back(std::move(v));
    }
    row.rhs = max_c + rng.rational(8, 4);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

} // namespace kal

#endif // KAL_RANDOM_GEN_HPP
