#include "mag/mag.hpp"

#include <stdexcept>

namespace mag {

Mag Mag::from_characteristic(MagSignature sig, Bitstring bits) {
  if (bits.size() != sig.pair_space_size())
    throw std::invalid_argument("from_characteristic: bit length does not match C(N,2)");
  return Mag(std::move(sig), std::move(bits));
}

bool Mag::has_edge_by_index(std::uint64_t a, std::uint64_t b) const {
  if (a == b) throw std::invalid_argument("has_edge: self-loop query on a simple MAG");
  return bits_.get(pair_index(a, b, sig_.n_composite()));
}

bool Mag::has_edge(const CompositeVertex& u, const CompositeVertex& v) const {
  return has_edge_by_index(sig_.composite_index(u), sig_.composite_index(v));
}

std::uint64_t Mag::degree_by_index(std::uint64_t a) const {
  const std::uint64_t n = sig_.n_composite();
  if (a >= n) throw std::out_of_range("degree: vertex index out of range");
  std::uint64_t d = 0;
  for (std::uint64_t b = 0; b < n; ++b)
    if (b != a && bits_.get(pair_index(a, b, n))) ++d;
  return d;
}

std::uint64_t Mag::degree(const CompositeVertex& v) const {
  return degree_by_index(sig_.composite_index(v));
}

void MagBuilder::add_edge_by_index(std::uint64_t a, std::uint64_t b) {
  bits_.set(pair_index(a, b, sig_.n_composite()), true);
}

void MagBuilder::add_edge(const CompositeVertex& u, const CompositeVertex& v) {
  add_edge_by_index(sig_.composite_index(u), sig_.composite_index(v));
}

}  // namespace mag
