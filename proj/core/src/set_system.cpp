#include "kal/set_system.hpp"

#include <algorithm>
#include <atomic>

#include "kal/parallel.hpp"
#include "kal/rng.hpp"

namespace kal {

mpz_class SetSystem::expected_count() const {
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d) + 1);
  return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> select_pairs(std::size_t n,
                                                                  const PairPolicy& policy) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (n < 2) return pairs;
  if (policy.mode == PairPolicy::Mode::All) {
    pairs.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
  }
  SplitMix64 rng(policy.seed);
  pairs.reserve(policy.count);
  for (std::uint64_t k = 0; k < policy.count; ++k) {
    auto i = static_cast<std::uint32_t>(rng.below(n));
    auto j = static_cast<std::uint32_t>(rng.below(n - 1));
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    pairs.emplace_back(i, j);
  }
  return pairs;
}

SetSystem build_nw_family(std::uint64_t p, int d, std::uint64_t family_cap) {
  const PrimeField field(p); // throws unless p is prime
  if (d < 0) throw ParamError("degree must be nonnegative");
  if (static_cast<std::uint64_t>(d) >= p)
    throw ParamError("degree " + std::to_string(d) + " must be < p = " + std::to_string(p));

  SetSystem sys;
  sys.p = p;
  sys.d = d;
  const mpz_class count = sys.expected_count();
  if (count > family_cap)
    throw BudgetError("family size " + count.get_str() + " exceeds cap " +
                      std::to_string(family_cap));
  const auto total = count.get_ui();

  sys.sets.reserve(total);
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d) + 1, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    PolySet s;
    s.coeffs = coeffs;
    s.elements.reserve(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      s.elements.push_back(a * p + poly_eval(s.coeffs, a, field));
    }
    sys.sets.push_back(std::move(s));
    // Advance the coefficient tuple lexicographically: coeffs[0] (the
    // constant term) is the most significant digit, so the highest-degree
    // coefficient varies fastest.
    for (std::size_t pos = coeffs.size(); pos-- > 0;) {
      if (++coeffs[pos] < p) break;
      coeffs[pos] = 0;
    }
  }
  return sys;
}

std::uint64_t intersection_size(const std::vector<std::uint64_t>& a,
                                const std::vector<std::uint64_t>& b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

SetSystemReport verify_set_system(const SetSystem& sys, const PairPolicy& policy, int jobs) {
  SetSystemReport rep;
  rep.count = sys.sets.size();
  rep.count_ok = sys.expected_count() == static_cast<unsigned long>(rep.count);

  rep.sizes_ok = true;
  for (const auto& s : sys.sets) {
    if (s.elements.size() != sys.p || !std::is_sorted(s.elements.begin(), s.elements.end())) {
      rep.sizes_ok = false;
      break;
    }
  }

  {
    std::vector<const std::vector<std::uint64_t>*> sorted;
    sorted.reserve(sys.sets.size());
    for (const auto& s : sys.sets) sorted.push_back(&s.elements);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    rep.distinct_ok = std::adjacent_find(sorted.begin(), sorted.end(),
                                         [](const auto* a, const auto* b) { return *a == *b; }) ==
                      sorted.end();
  }

  const auto pairs = select_pairs(sys.sets.size(), policy);
  rep.pairs_checked = pairs.size();
  std::atomic<std::uint64_t> max_int{0};
  parallel_for(pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const auto [i, j] = pairs[k];
      local = std::max(local, intersection_size(sys.sets[i].elements, sys.sets[j].elements));
    }
    std::uint64_t seen = max_int.load();
    while (local > seen && !max_int.compare_exchange_weak(seen, local)) {
    }
  });
  rep.max_intersection = max_int.load();
  rep.intersection_ok = rep.max_intersection <= static_cast<std::uint64_t>(sys.d);

  rep.verdict = rep.count_ok && rep.sizes_ok && rep.distinct_ok && rep.intersection_ok;
  return rep;
}

} // namespace kal
