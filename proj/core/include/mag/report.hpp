#ifndef MAG_REPORT_HPP
#define MAG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mag/certificate.hpp"
#include "mag/mag.hpp"
#include "mag/temporal.hpp"
#include "mag/topology.hpp"

#include "json.hpp"

namespace mag {

struct AnalyzeConfig {
  double c_deficiency = 3.0;  // delta(N) = c * log2 N
  double c_degree = 2.0;      // degree deviation bound coefficient
  std::uint64_t rigidity_budget = 50'000'000;
  std::uint64_t witness_exhaustive_cap = 1'000'000;
  std::uint64_t witness_sample = 100'000;
  std::uint64_t sample_seed = 0;
};

enum class VerdictState { Pass, Fail, Undecided };

// Every verdict carries the measured value and the threshold that produced
// it; no bare booleans.
struct Verdict {
  std::string name;
  VerdictState state = VerdictState::Fail;
  double measured = 0;
  double threshold = 0;
};

struct WitnessSweep {
  std::uint32_t aspect = 2;
  std::uint64_t total_queries = 0;  // hypothesis-satisfying pairs
  std::uint64_t queries_run = 0;
  std::uint64_t witnesses_found = 0;
  std::uint64_t failures = 0;
  bool sampled = false;
};

struct TemporalSummary {
  std::vector<std::pair<std::uint32_t, SnapshotLoss>> snapshot;  // per aspect >= 2
  std::vector<WitnessSweep> sweeps;  // aspects with tau_h > 8
};

struct AnalysisReport {
  std::string graph_id;  // content hash of the .magc bytes
  std::vector<std::uint32_t> aspect_sizes;
  std::optional<std::uint32_t> time_aspect;
  DeficiencyCertificate certificate;
  TopologyReport topology;
  TemporalSummary temporal;
  std::vector<Verdict> verdicts;
  AnalyzeConfig config;
  std::optional<std::uint64_t> seed;  // set when the graph came from a generator
};

struct BatchSummary {
  std::uint64_t report_count = 0;
  std::vector<std::uint64_t> seeds;
  struct PerVerdict {
    std::string name;
    std::uint64_t pass = 0, fail = 0, undecided = 0;
    double measured_min = 0, measured_median = 0, measured_max = 0;
  };
  std::vector<PerVerdict> verdicts;
};

std::string content_hash(const std::vector<std::uint8_t>& bytes);

AnalysisReport analyze(const Mag& g, const AnalyzeConfig& config = {});
BatchSummary batch_summary(const std::vector<AnalysisReport>& reports);

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const BatchSummary& s);

}  // namespace mag

#endif
