#ifndef MAG_TEMPORAL_HPP
#define MAG_TEMPORAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mag/mag.hpp"

namespace mag {

// Pair of composite vertices whose aspect-h coordinates are separated by more
// than 2 (the witness theorems' hypothesis j > i + 2).
struct NoncontiguityQuery {
  CompositeVertex u;
  CompositeVertex v;
  std::uint32_t aspect = 2;  // 1-based position h, 2 <= h <= p

  std::uint32_t coord_u() const { return u.coords[aspect - 1]; }
  std::uint32_t coord_v() const { return v.coords[aspect - 1]; }
};

NoncontiguityQuery make_noncontiguity_query(const MagSignature& sig, CompositeVertex u,
                                            CompositeVertex v, std::uint32_t aspect);

enum class WitnessKind { Direct, ViaIntermediate };

struct WitnessResult {
  CompositeEdge edge;
  WitnessKind kind = WitnessKind::Direct;
  std::optional<CompositeVertex> intermediate;
  std::uint32_t aspect = 2;
};

// True iff the endpoints' aspect-h coordinates differ by at least 2:
// transtemporal when h is the time aspect, crosslayer otherwise.
bool is_noncontiguous_edge(const CompositeEdge& e, const MagSignature& sig, std::uint32_t aspect);

// Finds the noncontiguous edge guaranteed for query pairs with j > i + 2 on
// graphs of composite diameter 2. Deterministic: direct edge first, otherwise
// the first common neighbor in ascending composite-index order. Throws
// NoWitnessError when the graph has neither (it is outside the theorem's
// hypothesis class).
WitnessResult find_noncontiguous_witness(const Mag& g, const NoncontiguityQuery& q);

class NoWitnessError : public std::runtime_error {
 public:
  NoWitnessError() : std::runtime_error("no direct edge and no common neighbor for query pair") {}
};

// tau_h > 8, the witness theorems' size hypothesis on aspect h.
bool check_size_hypothesis(const MagSignature& sig, std::uint32_t aspect);

struct SnapshotLoss {
  std::uint64_t total_edges = 0;
  std::uint64_t noncontiguous_edges = 0;
  double fraction = 0;  // 0 when total_edges == 0
};

// Counts edges a per-instant snapshot sequence cannot represent.
SnapshotLoss snapshot_loss(const Mag& g, std::uint32_t aspect);

}  // namespace mag

#endif
