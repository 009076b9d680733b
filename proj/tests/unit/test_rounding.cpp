#include <doctest.h>

#include "kal/lower_bound.hpp"
#include "kal/random_gen.hpp"
#include "kal/rounding.hpp"
#include "kal/set_system.hpp"

using kal::Objective;
using kal::Rational;

TEST_CASE("coefficient set n=4 eps=1/2") {
  const auto s = kal::coeff_set(4, Rational(1, 2));
  CHECK(s.gamma == Rational(1));
  CHECK(s.ell_max == 7); // (3/2)^7 = 2187/128 <= 20 < (3/2)^8
  const std::vector<mpz_class> expected{0, 1, 2, 3, 5, 7, 11, 17};
  CHECK(s.values == expected);
  // Every value is an integer in [0, 5n(1-eps)/eps] = [0, 20].
  CHECK(s.values.back() <= 20);
  CHECK(s.ceiling() == Rational(20));
  // Every value has a power witness.
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    const long ell = s.value_witness[i];
    CHECK(s.powers[static_cast<std::size_t>(ell)].floor_int() == s.values[i]);
  }
}

TEST_CASE("coefficient set n=1 eps=1/2") {
  const auto s = kal::coeff_set(1, Rational(1, 2));
  CHECK(s.ell_max == 3); // (3/2)^3 = 27/8 <= 5 < (3/2)^4 = 81/16
  const std::vector<mpz_class> expected{0, 1, 2, 3};
  CHECK(s.values == expected);
}

TEST_CASE("coefficient set cardinality and ceiling across the sweep grid") {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (const auto& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
      const auto s = kal::coeff_set(n, eps);
      // Exact bracketing of ell_max and the cardinality bound
      // |S| <= 1 + (ell_max + 1).
      CHECK(s.powers[static_cast<std::size_t>(s.ell_max)] <= s.ceiling());
      CHECK(s.powers[static_cast<std::size_t>(s.ell_max) + 1] > s.ceiling());
      CHECK(s.values.size() <= static_cast<std::size_t>(s.ell_max) + 2);
      CHECK(Rational(s.values.back()) <= s.ceiling());
      CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    }
  }
}

TEST_CASE("epsilon range is enforced") {
  CHECK_THROWS_AS(kal::coeff_set(4, Rational(3, 4)), kal::ParamError);
  CHECK_THROWS_AS(kal::coeff_set(4, Rational(0)), kal::ParamError);
  CHECK_THROWS_AS(kal::coeff_set(0, Rational(1, 2)), kal::ParamError);
}

TEST_CASE("rounding the worked example") {
  Objective c;
  c.coeffs = {Rational(10), Rational(3), Rational(2, 5), Rational(1, 25)};
  const auto r = kal::round_objective(c, 4, Rational(1, 2));
  CHECK_FALSE(r.trivial);
  CHECK(r.K == Rational(1, 2));
  CHECK(r.G == std::vector<std::size_t>{2, 3});
  CHECK(r.c_tilde == std::vector<mpz_class>{17, 5, 0, 0});
}

TEST_CASE("uniform objectives have empty G") {
  Objective c;
  c.coeffs.assign(6, Rational(7, 3));
  const auto r = kal::round_objective(c, 6, Rational(1, 4));
  CHECK(r.G.empty());
  for (const auto& v : r.c_tilde) CHECK(v > 0);
}

TEST_CASE("single nonzero coefficient rounds to the top bracket") {
  Objective c;
  c.coeffs = {Rational(0), Rational(9, 2), Rational(0)};
  const auto r = kal::round_objective(c, 3, Rational(1, 2));
  const auto s = kal::coeff_set(3, Rational(1, 2));
  // c_i/K = 5n/gamma = 15 exactly; the bracket floor is the largest grid
  // value <= 15.
  CHECK(r.c_tilde[1] == 11);
  CHECK(s.contains(r.c_tilde[1]));
  CHECK(r.c_tilde[0] == 0);
  CHECK(r.c_tilde[2] == 0);
}

TEST_CASE("rounding sandwich holds on random objectives") {
  kal::SplitMix64 rng(99);
  const std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                       Rational(2, 5), Rational(1, 8)};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(16);
    const Rational eps = epsilons[rng.below(epsilons.size())];
    Objective c = kal::random_objective(rng, n);
    const auto r = kal::round_objective(c, n, eps);
    if (r.trivial) continue;
    const Rational gamma = eps / (Rational(1) - eps);
    const Rational lo_factor = Rational(2) / (Rational(2) + gamma);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ci = std::max(c.coeffs[i], Rational(0));
      const Rational kc = r.K * Rational(r.c_tilde[i]);
      const bool in_g = std::find(r.G.begin(), r.G.end(), i) != r.G.end();
      if (in_g) {
        CHECK(r.c_tilde[i] == 0);
        CHECK(ci < r.K);
      } else {
        CHECK(kc <= ci);
        CHECK(kc >= lo_factor * ci - r.K);
      }
    }
  }
}

TEST_CASE("zero objective short-circuits to a trivially true certificate") {
  kal::KnapsackInstance inst;
  inst.weights = {Rational(1), Rational(2)};
  inst.capacity = Rational(2);
  Objective c;
  c.coeffs = {Rational(0), Rational(0)};
  const auto check = kal::certify_ratio(inst, c, Rational(1, 2));
  CHECK(check.trivial);
  CHECK(check.verdict);
  CHECK(check.ratio == Rational(1));
}

TEST_CASE("negative coefficients are clamped and recorded") {
  kal::KnapsackInstance inst;
  inst.weights = {Rational(1), Rational(1)};
  inst.capacity = Rational(1);
  Objective c;
  c.coeffs = {Rational(-3), Rational(2)};
  const auto check = kal::certify_ratio(inst, c, Rational(1, 4));
  CHECK(check.clamped_indices == std::vector<std::size_t>{0});
  CHECK(check.verdict);
}

TEST_CASE("certify_ratio on the hard instance with its separation objective") {
  kal::LowerBoundParams params;
  params.p = 13;
  params.epsilon = Rational(1, 16);
  const auto inst = kal::build_instance(params);
  const auto family = kal::build_nw_family(13, 2);
  const auto c = kal::separation_objective(family.sets[0].elements, params.epsilon, 169);

  const auto check = kal::certify_ratio(inst, c, Rational(1, 2));
  CHECK(check.beta == Rational(8));
  CHECK(check.verdict);
}

TEST_CASE("certify_ratio sweep over random instances and systems") {
  kal::SplitMix64 rng(123);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(12);
    const auto inst = kal::random_scaled_instance(rng, n);
    const auto c = kal::random_objective(rng, n);
    for (const auto& eps : {Rational(1, 2), Rational(1, 4)}) {
      const auto check = kal::certify_ratio(inst, c, eps);
      CHECK(check.verdict);
      if (!check.trivial) CHECK(check.beta >= (Rational(1) - eps) * check.bound);
    }
  }
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const auto sys = kal::random_scaled_system(rng, n, 1 + rng.below(3));
    const auto c = kal::random_objective(rng, n);
    const auto check = kal::certify_ratio(sys, c, Rational(1, 4));
    CHECK(check.verdict);
  }
}

TEST_CASE("validity: feasible points satisfy the rounded inequality") {
  kal::SplitMix64 rng(321);
  const auto inst = kal::random_scaled_instance(rng, 6);
  const auto c = kal::random_objective(rng, 6);
  auto rounded = kal::round_objective(c, 6, Rational(1, 4));
  if (rounded.trivial) return;
  const Rational beta = kal::knapsack_opt(inst, rounded.clamped).value;
  rounded.beta_tilde = beta / rounded.K;

  const auto points = kal::enumerate_feasible(inst);
  CHECK(kal::validity_check(inst, rounded, points));

  kal::Point origin;
  origin.coords.assign(6, Rational(0));
  CHECK(kal::validity_check(inst, rounded, std::span(&origin, 1)));

  kal::Point infeasible;
  infeasible.coords.assign(6, Rational(2));
  CHECK_THROWS_AS(kal::validity_check(inst, rounded, std::span(&infeasible, 1)),
                  kal::ParamError);
}

TEST_CASE("exhaustive Q oracle chain at n=2") {
  kal::KnapsackInstance inst;
  inst.weights = {Rational(1), Rational(1)};
  inst.capacity = Rational(1);
  Objective c;
  c.coeffs = {Rational(1), Rational(1)};
  const Rational eps(1, 2);

  const auto check = kal::certify_ratio(inst, c, eps);
  const auto q = kal::exhaustive_q_opt(inst, c, eps);
  CHECK(check.beta <= q.value);
  CHECK(q.value <= check.bound);
  CHECK((Rational(1) - eps) * q.value <= check.beta);
}

TEST_CASE("vacuous constraint: Q collapses to the box") {
  kal::KnapsackInstance inst;
  inst.weights = {Rational(0), Rational(0), Rational(0)};
  inst.capacity = Rational(5);
  Objective c;
  c.coeffs = {Rational(2), Rational(3), Rational(4)};
  const auto q = kal::exhaustive_q_opt(inst, c, Rational(1, 2));
  CHECK(q.value == Rational(9)); // sum of coefficients; Q = P = box
  CHECK(kal::knapsack_opt(inst, c).value == Rational(9));
}

TEST_CASE("van vyve grid size") {
  CHECK(kal::van_vyve_grid_max(2, Rational(1, 2)) == 4); // grid {0..4}: 25 tuples
  CHECK(kal::van_vyve_grid_max(3, Rational(1, 2)) == 6);
  CHECK(kal::van_vyve_grid_max(3, Rational(2, 7)) == 11); // ceil(21/2)
}

TEST_CASE("tuple caps raise budget errors") {
  kal::KnapsackInstance inst;
  inst.weights.assign(4, Rational(1));
  inst.capacity = Rational(2);
  Objective c;
  c.coeffs.assign(4, Rational(1));
  CHECK_THROWS_AS(kal::exhaustive_q_opt(inst, c, Rational(1, 2), 10), kal::BudgetError);
  CHECK_THROWS_AS(kal::van_vyve_q_opt(inst, c, Rational(1, 2), 10), kal::BudgetError);
}
