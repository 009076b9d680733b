#ifndef KAL_SET_SYSTEM_HPP
#define KAL_SET_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "kal/field.hpp"

namespace kal {

/// The graph of one polynomial over F_p, embedded in the universe [0, p²)
/// through the row-major pairing (a, b) ↦ a·p + b. Elements are sorted.
struct PolySet {
  std::vector<std::uint64_t> coeffs;   // coeffs[k] multiplies a^k; empty when loaded from disk
  std::vector<std::uint64_t> elements; // {a·p + π(a) : a ∈ F_p}, strictly increasing
};

/// The polynomial-graph set system: p^(d+1) subsets of [0, p²), each of size
/// p, pairwise intersecting in at most d points. Sets are kept in
/// lexicographic coefficient order, constant coefficient most significant,
/// so the family is byte-reproducible.
struct SetSystem {
  std::uint64_t p = 0;
  int d = 0;
  std::vector<PolySet> sets;

  mpz_class expected_count() const; // p^(d+1)
};

/// Which pairs a pairwise check visits: every pair, or a seeded sample.
struct PairPolicy {
  enum class Mode { All, Sample };
  Mode mode = Mode::All;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static PairPolicy all() { return PairPolicy{}; }
  static PairPolicy sample(std::uint64_t seed, std::uint64_t count) {
    return PairPolicy{Mode::Sample, seed, count};
  }
};

/// Enumerates the pair indices a policy visits over a family of n sets.
/// All-pairs order is (0,1), (0,2), ..., lexicographic; samples are drawn
/// from SplitMix64(seed) and kept in draw order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> select_pairs(std::size_t n,
                                                                  const PairPolicy& policy);

/// Builds one set per coefficient tuple in F_p^(d+1).
///
/// Requires p prime and 0 ≤ d < p (a degree-≤d polynomial is determined by
/// d+1 point evaluations only when d < p). Throws BudgetError when p^(d+1)
/// exceeds family_cap.
SetSystem build_nw_family(std::uint64_t p, int d, std::uint64_t family_cap = 1'000'000);

struct SetSystemReport {
  std::uint64_t count = 0;
  bool count_ok = false;        // count == p^(d+1)
  bool sizes_ok = false;        // |S| == p for every set
  bool distinct_ok = false;     // no duplicated sets
  std::uint64_t max_intersection = 0;
  bool intersection_ok = false; // max over checked pairs ≤ d
  std::uint64_t pairs_checked = 0;
  bool verdict = false;         // conjunction of the above
};

/// Verifies the family properties: uniform size p, distinctness, count
/// p^(d+1), and |S ∩ S'| ≤ d over the pairs the policy selects.
SetSystemReport verify_set_system(const SetSystem& sys, const PairPolicy& policy = PairPolicy::all(),
                                  int jobs = 1);

/// |a ∩ b| for sorted element lists.
std::uint64_t intersection_size(const std::vector<std::uint64_t>& a,
                                const std::vector<std::uint64_t>& b);

} // namespace kal

#endif // KAL_SET_SYSTEM_HPP
