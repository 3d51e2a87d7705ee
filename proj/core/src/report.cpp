#include "mag/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mag/codec.hpp"
#include "mag/generator.hpp"

namespace mag {
namespace {

const char* state_name(VerdictState s) {
  switch (s) {
    case VerdictState::Pass: return "pass";
    case VerdictState::Fail: return "fail";
    default: return "undecided";
  }
}

std::uint32_t aspect_coord(const MagSignature& sig, std::uint64_t idx, std::uint32_t aspect) {
  std::uint64_t stride = 1;
  for (std::uint32_t i = 1; i < aspect; ++i) stride *= sig.aspect_size(i);
  return static_cast<std::uint32_t>(idx / stride % sig.aspect_size(aspect));
}

WitnessSweep run_witness_sweep(const Mag& g, std::uint32_t aspect, const AnalyzeConfig& config) {
  const MagSignature& sig = g.signature();
  const std::uint64_t n = sig.n_composite();
  WitnessSweep sweep;
  sweep.aspect = aspect;

  std::vector<std::uint32_t> coord(n);
  for (std::uint64_t v = 0; v < n; ++v) coord[v] = aspect_coord(sig, v, aspect);

  for (std::uint64_t b = 1; b < n; ++b)
    for (std::uint64_t a = 0; a < b; ++a) {
      const std::uint32_t ca = coord[a], cb = coord[b];
      if ((ca > cb ? ca - cb : cb - ca) > 2) ++sweep.total_queries;
    }
  if (sweep.total_queries == 0) return sweep;

  sweep.sampled = sweep.total_queries > config.witness_exhaustive_cap;
  // deterministic thinning: keep a pair iff its per-pair counter value falls
  // under the sampling fraction
  const double keep = sweep.sampled
                          ? static_cast<double>(config.witness_sample) /
                                static_cast<double>(sweep.total_queries)
                          : 1.0;
  const auto keep_threshold =
      static_cast<std::uint64_t>(keep * 18446744073709551615.0);

  std::uint64_t k = 0;
  for (std::uint64_t b = 1; b < n; ++b)
    for (std::uint64_t a = 0; a < b; ++a, ++k) {
      const std::uint32_t ca = coord[a], cb = coord[b];
      if ((ca > cb ? ca - cb : cb - ca) <= 2) continue;
      if (sweep.sampled && counter_mix(config.sample_seed, k) > keep_threshold) continue;
      ++sweep.queries_run;
      const std::uint64_t lo = ca < cb ? a : b;
      const std::uint64_t hi = ca < cb ? b : a;
      NoncontiguityQuery q{sig.vertex_at(lo), sig.vertex_at(hi), aspect};
      try {
        WitnessResult w = find_noncontiguous_witness(g, q);
        const bool ok = is_noncontiguous_edge(w.edge, sig, aspect) && g.has_edge(w.edge.a, w.edge.b);
        if (ok)
          ++sweep.witnesses_found;
        else
          ++sweep.failures;
      } catch (const NoWitnessError&) {
        ++sweep.failures;
      }
    }
  return sweep;
}

}  // namespace

std::string content_hash(const std::vector<std::uint8_t>& bytes) {
  // FNV-1a 64
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport analyze(const Mag& g, const AnalyzeConfig& config) {
  const MagSignature& sig = g.signature();
  AnalysisReport r;
  r.config = config;
  r.graph_id = content_hash(serialize(g));
  r.aspect_sizes = sig.aspect_sizes();
  r.time_aspect = sig.time_aspect();

  r.certificate = deficiency_certificate(g);
  r.topology = topology_report(g, config.c_degree, config.rigidity_budget);

  for (std::uint32_t h = 2; h <= sig.order(); ++h) {
    r.temporal.snapshot.emplace_back(h, snapshot_loss(g, h));
    if (check_size_hypothesis(sig, h))
      r.temporal.sweeps.push_back(run_witness_sweep(g, h, config));
  }

  const double n = static_cast<double>(sig.n_composite());
  const double slack = std::sqrt(n * std::log2(n));

  r.verdicts.push_back({"degree_concentration",
                        r.topology.max_degree_deviation <= r.topology.degree_bound
                            ? VerdictState::Pass
                            : VerdictState::Fail,
                        r.topology.max_degree_deviation, r.topology.degree_bound});
  r.verdicts.push_back({"disjoint_length2_paths",
                        static_cast<double>(r.topology.min_common_neighbors) >= n / 4.0 - slack
                            ? VerdictState::Pass
                            : VerdictState::Fail,
                        static_cast<double>(r.topology.min_common_neighbors), n / 4.0 - slack});
  r.verdicts.push_back({"diameter_2",
                        r.topology.diameter.connected && r.topology.diameter.value == 2
                            ? VerdictState::Pass
                            : VerdictState::Fail,
                        r.topology.diameter.connected
                            ? static_cast<double>(r.topology.diameter.value)
                            : -1.0,
                        2.0});
  VerdictState rigid_state;
  switch (r.topology.rigidity.status) {
    case RigidityStatus::Rigid: rigid_state = VerdictState::Pass; break;
    case RigidityStatus::NonRigid: rigid_state = VerdictState::Fail; break;
    default: rigid_state = VerdictState::Undecided; break;
  }
  r.verdicts.push_back({"rigidity", rigid_state,
                        r.topology.rigidity.status == RigidityStatus::Rigid ? 1.0 : 0.0, 1.0});
  r.verdicts.push_back(
      {"log_randomness_not_refuted",
       passes_log_randomness_test(r.certificate, {config.c_deficiency}) ? VerdictState::Pass
                                                                        : VerdictState::Fail,
       static_cast<double>(r.certificate.deficiency_lb), config.c_deficiency * std::log2(n)});
  return r;
}

BatchSummary batch_summary(const std::vector<AnalysisReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("batch_summary: empty report list");
  for (const AnalysisReport& r : reports)
    if (r.aspect_sizes != reports.front().aspect_sizes)
      throw std::invalid_argument("batch_summary: reports have mixed signatures");

  BatchSummary s;
  s.report_count = reports.size();
  for (const AnalysisReport& r : reports)
    if (r.seed) s.seeds.push_back(*r.seed);

  const std::size_t nv = reports.front().verdicts.size();
  for (std::size_t i = 0; i < nv; ++i) {
    BatchSummary::PerVerdict pv;
    pv.name = reports.front().verdicts[i].name;
    std::vector<double> measured;
    for (const AnalysisReport& r : reports) {
      const Verdict& v = r.verdicts.at(i);
      switch (v.state) {
        case VerdictState::Pass: ++pv.pass; break;
        case VerdictState::Fail: ++pv.fail; break;
        default: ++pv.undecided; break;
      }
      measured.push_back(v.measured);
    }
    std::sort(measured.begin(), measured.end());
    pv.measured_min = measured.front();
    pv.measured_max = measured.back();
    const std::size_t m = measured.size();
    pv.measured_median =
        m % 2 ? measured[m / 2] : (measured[m / 2 - 1] + measured[m / 2]) / 2.0;
    s.verdicts.push_back(std::move(pv));
  }
  return s;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["graph_id"] = r.graph_id;
  j["signature"]["aspect_sizes"] = r.aspect_sizes;
  if (r.time_aspect)
    j["signature"]["time_aspect"] = *r.time_aspect;
  else
    j["signature"]["time_aspect"] = nullptr;

  j["deficiency_certificate"] = {{"raw_len", r.certificate.raw_len},
                                 {"compressed_len", r.certificate.compressed_len},
                                 {"deficiency_lb", r.certificate.deficiency_lb},
                                 {"compressor_id", r.certificate.compressor_id},
                                 {"n_composite", r.certificate.n_composite}};

  const TopologyReport& t = r.topology;
  j["topology"] = {{"n_composite", t.n_composite},
                   {"min_degree", t.min_degree},
                   {"max_degree", t.max_degree},
                   {"max_degree_deviation", t.max_degree_deviation},
                   {"degree_bound", t.degree_bound},
                   {"degree_bound_coefficient", t.degree_bound_coefficient},
                   {"min_common_neighbors", t.min_common_neighbors},
                   {"diameter", t.diameter.connected
                                    ? nlohmann::ordered_json(t.diameter.value)
                                    : nlohmann::ordered_json("infinite")},
                   {"connectivity_lb", t.connectivity_lb.value},
                   {"connectivity_lb_valid", t.connectivity_lb.is_connectivity_bound},
                   {"rigidity", t.rigidity.status == RigidityStatus::Rigid      ? "rigid"
                                : t.rigidity.status == RigidityStatus::NonRigid ? "non-rigid"
                                                                                : "undecided"}};
  if (t.rigidity.witness) j["topology"]["rigidity_witness"] = *t.rigidity.witness;

  nlohmann::ordered_json snap = nlohmann::ordered_json::array();
  for (const auto& [aspect, loss] : r.temporal.snapshot)
    snap.push_back({{"aspect", aspect},
                    {"total_edges", loss.total_edges},
                    {"noncontiguous_edges", loss.noncontiguous_edges},
                    {"fraction", loss.fraction}});
  j["temporal"]["snapshot_loss"] = snap;
  nlohmann::ordered_json sweeps = nlohmann::ordered_json::array();
  for (const WitnessSweep& w : r.temporal.sweeps)
    sweeps.push_back({{"aspect", w.aspect},
                      {"total_queries", w.total_queries},
                      {"queries_run", w.queries_run},
                      {"witnesses_found", w.witnesses_found},
                      {"failures", w.failures},
                      {"sampled", w.sampled}});
  j["temporal"]["witness_sweeps"] = sweeps;

  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const Verdict& v : r.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"state", state_name(v.state)},
                        {"measured", v.measured},
                        {"threshold", v.threshold}});
  j["corollary_verdicts"] = verdicts;

  j["config"] = {{"c_deficiency", r.config.c_deficiency},
                 {"c_degree", r.config.c_degree},
                 {"rigidity_budget", r.config.rigidity_budget},
                 {"witness_exhaustive_cap", r.config.witness_exhaustive_cap},
                 {"witness_sample", r.config.witness_sample},
                 {"sample_seed", r.config.sample_seed}};
  if (r.seed)
    j["seed"] = *r.seed;
  else
    j["seed"] = nullptr;
  return j;
}

nlohmann::ordered_json to_json(const BatchSummary& s) {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["report_count"] = s.report_count;
  j["seeds"] = s.seeds;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& pv : s.verdicts)
    verdicts.push_back({{"name", pv.name},
                        {"pass", pv.pass},
                        {"fail", pv.fail},
                        {"undecided", pv.undecided},
                        {"measured_min", pv.measured_min},
                        {"measured_median", pv.measured_median},
                        {"measured_max", pv.measured_max}});
  j["verdicts"] = verdicts;
  return j;
}

}  // namespace mag
