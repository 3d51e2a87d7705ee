#ifndef MAG_MAG_HPP
#define MAG_MAG_HPP

#include <cstdint>
#include <utility>

#include "mag/bitstring.hpp"
#include "mag/signature.hpp"

namespace mag {

// Simple (undirected, loop-free) MAG: a signature plus the characteristic
// bitstring of the edge set over the C(N,2) unordered-pair space.
// Immutable once built; queries are pure reads.
class Mag {
 public:
  static Mag from_characteristic(MagSignature sig, Bitstring bits);

  const MagSignature& signature() const { return sig_; }
  const Bitstring& characteristic() const { return bits_; }
  std::uint64_t n_composite() const { return sig_.n_composite(); }
  std::uint64_t edge_count() const { return bits_.popcount(); }

  bool has_edge_by_index(std::uint64_t a, std::uint64_t b) const;
  bool has_edge(const CompositeVertex& u, const CompositeVertex& v) const;

  std::uint64_t degree_by_index(std::uint64_t a) const;
  std::uint64_t degree(const CompositeVertex& v) const;

  bool operator==(const Mag& o) const { return sig_ == o.sig_ && bits_ == o.bits_; }

 private:
  Mag(MagSignature sig, Bitstring bits) : sig_(std::move(sig)), bits_(std::move(bits)) {}
  friend class MagBuilder;

  MagSignature sig_;
  Bitstring bits_;
};

// Single-writer edge accumulator; freeze() yields the immutable Mag.
class MagBuilder {
 public:
  explicit MagBuilder(MagSignature sig)
      : sig_(std::move(sig)), bits_(sig_.pair_space_size()) {}

  void add_edge_by_index(std::uint64_t a, std::uint64_t b);
  void add_edge(const CompositeVertex& u, const CompositeVertex& v);
  void set_bit(std::uint64_t pair_idx, bool v) { bits_.set(pair_idx, v); }

  Mag freeze() && { return Mag(std::move(sig_), std::move(bits_)); }

 private:
  MagSignature sig_;
  Bitstring bits_;
};

}  // namespace mag

#endif
