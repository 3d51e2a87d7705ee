#include "mag/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace mag {

Bitstring Bitstring::from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t nbits) {
  if (bytes.size() != (nbits + 7) / 8)
    throw std::invalid_argument("Bitstring::from_bytes: byte count does not match bit length");
  Bitstring b;
  b.bytes_ = std::move(bytes);
  b.nbits_ = nbits;
  // zero the padding so equality is well defined
  if (nbits & 7) b.bytes_.back() &= static_cast<std::uint8_t>((1u << (nbits & 7)) - 1);
  return b;
}

std::uint64_t Bitstring::popcount() const {
  std::uint64_t c = 0;
  for (std::uint8_t b : bytes_) c += static_cast<std::uint64_t>(std::popcount(b));
  return c;
}

}  // namespace mag
