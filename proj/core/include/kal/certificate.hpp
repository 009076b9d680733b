#ifndef KAL_CERTIFICATE_HPP
#define KAL_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kal/json_io.hpp"
#include "kal/lower_bound.hpp"

namespace kal {

/// One witness: its set, the sparse nonzero values of the witness point and
/// separating objective, and the verified gap. The dense vectors are
/// recoverable from (set, values, n), which keeps certificates small without
/// giving up self-containedness.
struct WitnessRecord {
  std::vector<std::uint64_t> set;
  Rational witness_in;    // x^S on S
  Rational witness_last;  // x^S on the heavy coordinate
  Rational objective_in;  // c on S
  Rational objective_last;
  Rational objective_dot; // c·x^S
  Rational optimum;       // max{c·x : x ∈ P}
  bool gap_ok = false;
};

/// One checked pair, referencing witnesses by index.
struct PairRecord {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint64_t alpha = 0;
  Rational dom_symdiff; // dominating point on S △ S'
  bool dominance_ok = false;
};

/// Everything needed to re-verify the construction from scratch: the
/// instance, every witness with its gap data, and the checked pairs with
/// their domination data.
struct WitnessCertificate {
  std::uint64_t p = 0;
  Rational epsilon;
  bool strict = true;
  int degree = 0;
  std::int64_t cardinality_bound = 0;
  std::uint64_t witness_count = 0;
  KnapsackInstance instance;
  PairPolicy pair_policy;
  std::vector<WitnessRecord> witnesses;
  std::vector<PairRecord> pairs;
  bool verdict = false;
};

struct CertifyOptions {
  int jobs = 1;
  bool full_solve = false;
  SolveOptions solve;
  std::uint64_t family_cap = 1'000'000;
};

/// Builds the family, all witnesses and gap checks, and the domination
/// checks the policy selects. The overall verdict is the conjunction of
/// every recorded verdict plus the witness-count identity p^(d+1).
WitnessCertificate certify(const LowerBoundParams& params, const PairPolicy& policy,
                           const CertifyOptions& opts = {});

struct CheckReport {
  bool ok = false;
  std::string detail; // first mismatch, for diagnostics
};

/// Recomputes every stored value and verdict from the stored raw data
/// (instance, sets, policy) and compares exactly. True iff everything
/// reproduces, including the overall verdict.
CheckReport check_certificate(const WitnessCertificate& cert, const CertifyOptions& opts = {});

/// Deterministic serialization. The writer emits a fixed byte layout (keys,
/// order, newlines), so identical runs produce identical files; all-pairs
/// certificates stream without building a DOM.
std::string certificate_to_json_text(const WitnessCertificate& cert);
WitnessCertificate certificate_from_json(const Json& j);

void save_certificate(const std::string& path, const WitnessCertificate& cert);
WitnessCertificate load_certificate(const std::string& path);

/// "LOWERBOUND p=<p> eps=<p/q> witnesses=<k> pairs=<m> verdict=<PASS|FAIL>"
std::string certificate_summary(const WitnessCertificate& cert);

} // namespace kal

#endif // KAL_CERTIFICATE_HPP
