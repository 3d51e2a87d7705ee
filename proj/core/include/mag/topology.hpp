#ifndef MAG_TOPOLOGY_HPP
#define MAG_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mag/mag.hpp"

namespace mag {

// Bit-packed adjacency rows over composite-vertex indices.
class DenseAdjacency {
 public:
  explicit DenseAdjacency(const Mag& g);

  std::uint64_t n() const { return n_; }
  bool at(std::uint64_t a, std::uint64_t b) const {
    return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1;
  }
  std::uint64_t degree(std::uint64_t a) const;
  // |{w not in {a,b} : a~w and w~b}| = internally-disjoint length-2 paths
  std::uint64_t common_neighbors(std::uint64_t a, std::uint64_t b) const;

  const std::uint64_t* row(std::uint64_t a) const { return rows_.data() + a * words_; }
  std::uint64_t words() const { return words_; }

 private:
  std::uint64_t n_;
  std::uint64_t words_;
  std::vector<std::uint64_t> rows_;
};

struct DegreeConcentration {
  double max_deviation = 0;  // max over v of |d(v) - (N-1)/2|
  double bound = 0;          // c * sqrt(N * log2 N)
  bool holds = false;
};

struct DiameterResult {
  bool connected = false;
  std::uint64_t value = 0;  // meaningful only when connected
};

struct ConnectivityBound {
  std::uint64_t value = 0;
  // min-over-pairs disjoint short paths bounds vertex connectivity only
  // when the diameter is at most 2
  bool is_connectivity_bound = false;
};

enum class RigidityStatus { Rigid, NonRigid, Undecided };

struct RigidityResult {
  RigidityStatus status = RigidityStatus::Undecided;
  std::optional<std::vector<std::uint32_t>> witness;  // non-identity automorphism
  std::uint64_t nodes_explored = 0;
};

struct TopologyReport {
  std::uint64_t n_composite = 0;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  double max_degree_deviation = 0;
  double degree_bound = 0;
  double degree_bound_coefficient = 0;
  std::uint64_t min_common_neighbors = 0;
  DiameterResult diameter;
  ConnectivityBound connectivity_lb;
  RigidityResult rigidity;
};

DegreeConcentration degree_concentration(const DenseAdjacency& adj, double c);
DegreeConcentration degree_concentration(const Mag& g, double c);

std::uint64_t common_neighbor_count(const Mag& g, const CompositeVertex& u,
                                    const CompositeVertex& v);

DiameterResult composite_diameter(const DenseAdjacency& adj);
DiameterResult composite_diameter(const Mag& g);

ConnectivityBound connectivity_lower_bound(const DenseAdjacency& adj);
ConnectivityBound connectivity_lower_bound(const Mag& g);

// Exact: color refinement then backtracking over the first moved vertex.
// Budget exhaustion yields Undecided, never a wrong verdict.
RigidityResult is_rigid(const DenseAdjacency& adj, std::uint64_t node_budget = 50'000'000);
RigidityResult is_rigid(const Mag& g, std::uint64_t node_budget = 50'000'000);

TopologyReport topology_report(const Mag& g, double c_degree = 2.0,
                               std::uint64_t rigidity_budget = 50'000'000);

}  // namespace mag

#endif
