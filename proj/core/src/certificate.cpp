#include "kal/certificate.hpp"

#include <atomic>
#include <mutex>
#include <sstream>

#include "kal/parallel.hpp"

namespace kal {

WitnessCertificate certify(const LowerBoundParams& params, const PairPolicy& policy,
                           const CertifyOptions& opts) {
  WitnessCertificate cert;
  cert.p = params.p;
  cert.epsilon = params.epsilon;
  cert.strict = params.strict;
  cert.degree = params.effective_degree();
  cert.cardinality_bound = params.cardinality_bound();
  cert.pair_policy = policy;
  cert.instance = build_instance(params);

  const SetSystem family = build_nw_family(params.p, cert.degree, opts.family_cap);
  cert.witness_count = family.sets.size();

  cert.witnesses.resize(family.sets.size());
  parallel_for(family.sets.size(), opts.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& elems = family.sets[k].elements;
      const GapCheck gap =
          verify_gap(cert.instance, elems, params.epsilon, opts.full_solve, opts.solve);
      WitnessRecord rec;
      rec.set = elems;
      rec.witness_in = Rational(1) - params.epsilon / Rational(2);
      rec.witness_last = Rational(4, 5);
      rec.objective_in = params.item_weight(); // 1/(2εp), same value as the small weights
      rec.objective_last = Rational(1);
      rec.objective_dot = gap.witness_objective;
      rec.optimum = gap.optimum;
      rec.gap_ok = gap.verdict;
      cert.witnesses[k] = std::move(rec);
    }
  });

  const auto pair_indices = select_pairs(family.sets.size(), policy);
  cert.pairs.resize(pair_indices.size());
  parallel_for(pair_indices.size(), opts.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [i, j] = pair_indices[k];
      const DominanceCheck dom = verify_midpoint(cert.instance, family.sets[i].elements,
                                                 family.sets[j].elements, params.epsilon);
      PairRecord rec;
      rec.i = i;
      rec.j = j;
      rec.alpha = dom.alpha;
      rec.dom_symdiff = dom.symdiff_coordinate;
      rec.dominance_ok = dom.verdict;
      cert.pairs[k] = std::move(rec);
    }
  });

  bool all_ok = true;
  for (const auto& w : cert.witnesses) all_ok = all_ok && w.gap_ok;
  for (const auto& pr : cert.pairs) all_ok = all_ok && pr.dominance_ok;
  // The family must realize exactly p^(d+1) distinct witnesses.
  const mpz_class expected = family.expected_count();
  all_ok = all_ok && (expected == static_cast<unsigned long>(cert.witness_count));
  cert.verdict = all_ok;
  return cert;
}

namespace {

// Shared across verification workers; the first failure wins.
struct Mismatch {
  std::atomic<bool> found{false};
  std::mutex mu;
  std::string detail;

  void note(const std::string& d) {
    const std::lock_guard<std::mutex> lock(mu);
    if (!found.load()) {
      detail = d;
      found.store(true);
    }
  }
};

} // namespace

CheckReport check_certificate(const WitnessCertificate& cert, const CertifyOptions& opts) {
  CheckReport report;

  LowerBoundParams params;
  params.p = cert.p;
  params.epsilon = cert.epsilon;
  params.strict = cert.strict;
  params.degree = cert.degree;

  const auto hard = params.hard_errors();
  if (!hard.empty()) {
    report.detail = "parameters: " + hard.front();
    return report;
  }
  if (cert.strict && !params.regime_violations().empty()) {
    report.detail = "strict certificate outside the strict regime: " +
                    params.regime_violations().front();
    return report;
  }

  // Instance must be exactly the constructed one.
  const KnapsackInstance expected_inst = hard_instance(cert.p, cert.epsilon);
  if (expected_inst.n() != cert.instance.n() ||
      expected_inst.capacity != cert.instance.capacity ||
      expected_inst.weights != cert.instance.weights) {
    report.detail = "instance does not match the construction";
    return report;
  }

  if (cert.cardinality_bound != params.cardinality_bound()) {
    report.detail = "cardinality bound mismatch";
    return report;
  }

  // Family must be exactly the deterministic construction, in order.
  SetSystem family;
  try {
    family = build_nw_family(cert.p, cert.degree, opts.family_cap);
  } catch (const Error& e) {
    report.detail = std::string("family rebuild failed: ") + e.what();
    return report;
  }
  if (family.sets.size() != cert.witnesses.size() ||
      cert.witness_count != cert.witnesses.size()) {
    report.detail = "witness count mismatch";
    return report;
  }
  if (family.expected_count() != static_cast<unsigned long>(cert.witness_count)) {
    report.detail = "witness count is not p^(d+1)";
    return report;
  }

  const std::uint64_t n = params.n();
  Mismatch mismatch;

  parallel_for(cert.witnesses.size(), opts.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end && !mismatch.found.load(); ++k) {
      const auto& rec = cert.witnesses[k];
      if (rec.set != family.sets[k].elements) {
        mismatch.note("witness " + std::to_string(k) + ": set differs from the family");
        return;
      }
      const Objective c = separation_objective(rec.set, cert.epsilon, n);
      const Rational expected_in = Rational(1) - cert.epsilon / Rational(2);
      if (rec.witness_in != expected_in || rec.witness_last != Rational(4, 5) ||
          (!rec.set.empty() && rec.objective_in != c.coeffs[rec.set.front()]) ||
          rec.objective_last != Rational(1)) {
        mismatch.note("witness " + std::to_string(k) + ": stored point/objective values differ");
        return;
      }
      const GapCheck gap = verify_gap(cert.instance, rec.set, cert.epsilon, opts.full_solve,
                                      opts.solve);
      if (gap.witness_objective != rec.objective_dot || gap.optimum != rec.optimum ||
          gap.verdict != rec.gap_ok) {
        mismatch.note("witness " + std::to_string(k) + ": gap data does not reproduce");
        return;
      }
    }
  });
  if (mismatch.found.load()) {
    report.detail = mismatch.detail;
    return report;
  }

  // The stored pair list must be exactly what the recorded policy selects.
  const auto pair_indices = select_pairs(cert.witnesses.size(), cert.pair_policy);
  if (pair_indices.size() != cert.pairs.size()) {
    report.detail = "pair list length does not match the policy";
    return report;
  }
  parallel_for(cert.pairs.size(), opts.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end && !mismatch.found.load(); ++k) {
      const auto& rec = cert.pairs[k];
      if (rec.i != pair_indices[k].first || rec.j != pair_indices[k].second) {
        mismatch.note("pair " + std::to_string(k) + ": indices differ from the policy");
        return;
      }
      if (rec.i >= cert.witnesses.size() || rec.j >= cert.witnesses.size()) {
        mismatch.note("pair " + std::to_string(k) + ": witness index out of range");
        return;
      }
      const DominanceCheck dom =
          verify_midpoint(cert.instance, cert.witnesses[rec.i].set, cert.witnesses[rec.j].set,
                          cert.epsilon);
      if (dom.alpha != rec.alpha || dom.symdiff_coordinate != rec.dom_symdiff ||
          dom.verdict != rec.dominance_ok) {
        mismatch.note("pair " + std::to_string(k) + ": domination data does not reproduce");
        return;
      }
    }
  });
  if (mismatch.found.load()) {
    report.detail = mismatch.detail;
    return report;
  }

  bool all_ok = true;
  for (const auto& w : cert.witnesses) all_ok = all_ok && w.gap_ok;
  for (const auto& pr : cert.pairs) all_ok = all_ok && pr.dominance_ok;
  if (all_ok != cert.verdict) {
    report.detail = "overall verdict does not match the recorded checks";
    return report;
  }

  report.ok = true;
  return report;
}

std::string certificate_to_json_text(const WitnessCertificate& cert) {
  // Hand-rolled writer: fixed key order and layout make reruns byte-identical
  // and keep all-pairs certificates (millions of pair records) out of a DOM.
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"kal-certificate\",\n";
  out << "  \"version\": 1,\n";
  out << "  \"p\": " << cert.p << ",\n";
  out << "  \"epsilon\": \"" << cert.epsilon.str() << "\",\n";
  out << "  \"strict\": " << (cert.strict ? "true" : "false") << ",\n";
  out << "  \"degree\": " << cert.degree << ",\n";
  out << "  \"cardinality_bound\": " << cert.cardinality_bound << ",\n";
  out << "  \"witness_count\": " << cert.witness_count << ",\n";
  out << "  \"instance\": " << to_json(cert.instance).dump() << ",\n";
  out << "  \"pair_policy\": " << to_json(cert.pair_policy).dump() << ",\n";
  out << "  \"witnesses\": [";
  for (std::size_t k = 0; k < cert.witnesses.size(); ++k) {
    const auto& w = cert.witnesses[k];
    out << (k == 0 ? "\n" : ",\n") << "    {\"set\": [";
    for (std::size_t t = 0; t < w.set.size(); ++t) out << (t == 0 ? "" : ",") << w.set[t];
    out << "], \"witness_in\": \"" << w.witness_in.str() << "\", \"witness_last\": \""
        << w.witness_last.str() << "\", \"objective_in\": \"" << w.objective_in.str()
        << "\", \"objective_last\": \"" << w.objective_last.str() << "\", \"objective_dot\": \""
        << w.objective_dot.str() << "\", \"optimum\": \"" << w.optimum.str()
        << "\", \"gap_ok\": " << (w.gap_ok ? "true" : "false") << "}";
  }
  out << "\n  ],\n";
  out << "  \"pairs\": [";
  for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
    const auto& pr = cert.pairs[k];
    out << (k == 0 ? "\n" : ",\n") << "    {\"i\": " << pr.i << ", \"j\": " << pr.j
        << ", \"alpha\": " << pr.alpha << ", \"dom_symdiff\": \"" << pr.dom_symdiff.str()
        << "\", \"dominance_ok\": " << (pr.dominance_ok ? "true" : "false") << "}";
  }
  out << "\n  ],\n";
  out << "  \"verdict\": " << (cert.verdict ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

WitnessCertificate certificate_from_json(const Json& j) {
  WitnessCertificate cert;
  if (j.value("format", "") != "kal-certificate")
    throw ParseError("not a kal certificate file");
  cert.p = j.at("p").get<std::uint64_t>();
  cert.epsilon = rational_from_json(j.at("epsilon"));
  cert.strict = j.at("strict").get<bool>();
  cert.degree = j.at("degree").get<int>();
  cert.cardinality_bound = j.at("cardinality_bound").get<std::int64_t>();
  cert.witness_count = j.at("witness_count").get<std::uint64_t>();
  cert.instance = instance_from_json(j.at("instance"));
  cert.pair_policy = pair_policy_from_json(j.at("pair_policy"));
  for (const auto& jw : j.at("witnesses")) {
    WitnessRecord w;
    for (const auto& e : jw.at("set")) w.set.push_back(e.get<std::uint64_t>());
    w.witness_in = rational_from_json(jw.at("witness_in"));
    w.witness_last = rational_from_json(jw.at("witness_last"));
    w.objective_in = rational_from_json(jw.at("objective_in"));
    w.objective_last = rational_from_json(jw.at("objective_last"));
    w.objective_dot = rational_from_json(jw.at("objective_dot"));
    w.optimum = rational_from_json(jw.at("optimum"));
    w.gap_ok = jw.at("gap_ok").get<bool>();
    cert.witnesses.push_back(std::move(w));
  }
  for (const auto& jp : j.at("pairs")) {
    PairRecord pr;
    pr.i = jp.at("i").get<std::uint32_t>();
    pr.j = jp.at("j").get<std::uint32_t>();
    pr.alpha = jp.at("alpha").get<std::uint64_t>();
    pr.dom_symdiff = rational_from_json(jp.at("dom_symdiff"));
    pr.dominance_ok = jp.at("dominance_ok").get<bool>();
    cert.pairs.push_back(std::move(pr));
  }
  cert.verdict = j.at("verdict").get<bool>();
  return cert;
}

void save_certificate(const std::string& path, const WitnessCertificate& cert) {
  write_text_file(path, certificate_to_json_text(cert));
}

WitnessCertificate load_certificate(const std::string& path) {
  return certificate_from_json(load_json(path));
}

std::string certificate_summary(const WitnessCertificate& cert) {
  std::ostringstream out;
  out << "LOWERBOUND p=" << cert.p << " eps=" << cert.epsilon.str()
      << " witnesses=" << cert.witness_count << " pairs=" << cert.pairs.size()
      << " verdict=" << (cert.verdict ? "PASS" : "FAIL");
  return out.str();
}

} // namespace kal
