#include <algorithm>
#include <numeric>

#include "kal/error.hpp"
#include "kal/solvers.hpp"

namespace kal {

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Dp: return "dp";
    case SolveMethod::BranchBound: return "branch-bound";
    case SolveMethod::Enumeration: return "enumeration";
    case SolveMethod::Simplex: return "simplex";
    case SolveMethod::Greedy: return "greedy";
  }
  return "?";
}

namespace {

struct ScaledInstance {
  std::vector<mpz_class> weights;
  mpz_class capacity;
};

// Clears all denominators by their LCM; feasibility is preserved exactly.
ScaledInstance clear_denominators(const KnapsackInstance& inst) {
  mpz_class lcm = inst.capacity.den();
  for (const auto& w : inst.weights) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.den().get_mpz_t());
  }
  ScaledInstance s;
  s.weights.reserve(inst.n());
  const Rational scale{lcm};
  for (const auto& w : inst.weights) {
    s.weights.push_back((w * scale).num());
  }
  s.capacity = (inst.capacity * scale).num();
  return s;
}

void check_preconditions(const KnapsackInstance& inst, const Objective& c) {
  if (c.dim() != inst.n()) throw ParamError("knapsack_opt: objective dimension mismatch");
  require_valid(inst);
  for (const auto& ci : c.coeffs) {
    if (ci.sign() < 0)
      throw ParamError("knapsack_opt: negative objective coefficient (clamp first)");
  }
}

SolveResult solve_dp(const KnapsackInstance& inst, const Objective& c, const ScaledInstance& s) {
  const std::size_t n = inst.n();
  const auto cap = s.capacity.get_ui();
  std::vector<Rational> best(cap + 1);
  // choice[i][r]: item i improved the budget-r entry during its pass.
  std::vector<std::vector<bool>> choice(n, std::vector<bool>(cap + 1, false));

  for (std::size_t i = 0; i < n; ++i) {
    if (c.coeffs[i].is_zero()) continue;
    if (s.weights[i] > s.capacity) continue; // never fits
    const auto w = s.weights[i].get_ui();
    if (w == 0) {
      for (std::uint64_t r = 0; r <= cap; ++r) {
        best[r] += c.coeffs[i];
        choice[i][r] = true;
      }
      continue;
    }
    for (std::uint64_t r = cap; r >= w; --r) {
      Rational cand = best[r - w] + c.coeffs[i];
      if (cand > best[r]) {
        best[r] = std::move(cand);
        choice[i][r] = true;
      }
      if (r == w) break; // unsigned guard
    }
  }

  SolveResult res;
  res.method = SolveMethod::Dp;
  res.value = best[cap];
  res.argmax.coords.assign(n, Rational(0));
  std::uint64_t r = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (choice[i][r]) {
      res.argmax.coords[i] = Rational(1);
      r -= s.weights[i].get_ui();
    }
  }
  return res;
}

struct BbItem {
  std::size_t index;
  Rational profit;
  mpz_class weight;
  Rational ratio; // profit / weight, weight > 0
};

struct BbState {
  const std::vector<BbItem>* items;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  Rational best_value;
  std::vector<bool> best_take;
  std::vector<bool> cur_take;
};

// Fractional-relaxation bound for items k.. with residual capacity r.
// Items are already in ratio order, so the greedy fill is the LP optimum.
Rational fractional_bound(const BbState& st, std::size_t k, const mpz_class& r) {
  Rational bound;
  mpz_class rem = r;
  for (std::size_t t = k; t < st.items->size(); ++t) {
    const auto& it = (*st.items)[t];
    if (it.weight <= rem) {
      bound += it.profit;
      rem -= it.weight;
    } else {
      if (rem > 0) bound += it.profit * Rational(rem, it.weight);
      break;
    }
  }
  return bound;
}

void bb_search(BbState& st, std::size_t k, const mpz_class& r, const Rational& value) {
  if (++st.nodes > st.budget)
    throw BudgetError("knapsack branch-and-bound exceeded node budget " +
                      std::to_string(st.budget));
  if (k == st.items->size()) {
    if (value > st.best_value) {
      st.best_value = value;
      st.best_take = st.cur_take;
    }
    return;
  }
  // Prune branches that cannot strictly improve the incumbent. The all-zero
  // solution (value 0) is always feasible, so a never-updated incumbent is
  // still a correct answer.
  if (value + fractional_bound(st, k, r) <= st.best_value) return;
  const auto& it = (*st.items)[k];
  if (it.weight <= r) {
    st.cur_take[k] = true;
    mpz_class r2 = r - it.weight;
    bb_search(st, k + 1, r2, value + it.profit);
    st.cur_take[k] = false;
  }
  bb_search(st, k + 1, r, value);
}

SolveResult solve_branch_bound(const KnapsackInstance& inst, const Objective& c,
                               const ScaledInstance& s, const SolveOptions& opts) {
  const std::size_t n = inst.n();
  SolveResult res;
  res.method = SolveMethod::BranchBound;
  res.argmax.coords.assign(n, Rational(0));

  Rational base; // profit from free (zero-weight) items
  std::vector<BbItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.coeffs[i].sign() <= 0) continue;
    if (s.weights[i] > s.capacity) continue;
    if (s.weights[i] == 0) {
      base += c.coeffs[i];
      res.argmax.coords[i] = Rational(1);
      continue;
    }
    BbItem it;
    it.index = i;
    it.profit = c.coeffs[i];
    it.weight = s.weights[i];
    it.ratio = c.coeffs[i] / Rational(s.weights[i]);
    items.push_back(std::move(it));
  }
  std::stable_sort(items.begin(), items.end(), [](const BbItem& a, const BbItem& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.index < b.index;
  });

  BbState st;
  st.items = &items;
  st.budget = opts.node_budget;
  st.cur_take.assign(items.size(), false);
  bb_search(st, 0, s.capacity, Rational(0));

  res.value = base + st.best_value;
  for (std::size_t t = 0; t < items.size(); ++t) {
    if (!st.best_take.empty() && st.best_take[t]) res.argmax.coords[items[t].index] = Rational(1);
  }
  return res;
}

} // namespace

SolveResult knapsack_opt(const KnapsackInstance& inst, const Objective& c,
                         const SolveOptions& opts) {
  check_preconditions(inst, c);
  const ScaledInstance s = clear_denominators(inst);
  if (s.capacity <= opts.dp_capacity_bound) return solve_dp(inst, c, s);
  return solve_branch_bound(inst, c, s, opts);
}

std::vector<Point> enumerate_feasible(const KnapsackInstance& inst, std::size_t n_limit) {
  require_valid(inst);
  const std::size_t n = inst.n();
  if (n > n_limit)
    throw ParamError("enumerate_feasible: n = " + std::to_string(n) + " exceeds limit " +
                     std::to_string(n_limit));
  std::vector<Point> out;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Rational w;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (1ULL << i)) {
        w += inst.weights[i];
        if (w > inst.capacity) ok = false;
      }
    }
    if (!ok) continue;
    Point p;
    p.coords.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) p.coords[i] = Rational(1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

SolveResult greedy_fractional_max(const Objective& c, const std::vector<Rational>& weights,
                                  const Rational& capacity) {
  if (c.dim() != weights.size()) throw ParamError("greedy: dimension mismatch");
  if (capacity.sign() < 0) throw ParamError("greedy: negative capacity");
  const std::size_t n = c.dim();
  SolveResult res;
  res.method = SolveMethod::Greedy;
  res.argmax.coords.assign(n, Rational(0));

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.coeffs[i].sign() < 0) throw ParamError("greedy: negative objective coefficient");
    if (weights[i].sign() < 0) throw ParamError("greedy: negative weight");
    if (c.coeffs[i].is_zero()) continue;
    if (weights[i].is_zero()) {
      res.argmax.coords[i] = Rational(1); // free item
      res.value += c.coeffs[i];
    } else {
      order.push_back(i);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational ra = c.coeffs[a] / weights[a];
    const Rational rb = c.coeffs[b] / weights[b];
    if (ra != rb) return ra > rb;
    return a < b;
  });

  Rational rem = capacity;
  for (std::size_t i : order) {
    if (rem.is_zero()) break;
    if (weights[i] <= rem) {
      res.argmax.coords[i] = Rational(1);
      res.value += c.coeffs[i];
      rem -= weights[i];
    } else {
      res.argmax.coords[i] = rem / weights[i];
      res.value += c.coeffs[i] * res.argmax.coords[i];
      rem = Rational(0);
    }
  }
  return res;
}

} // namespace kal
