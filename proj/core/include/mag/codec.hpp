#ifndef MAG_CODEC_HPP
#define MAG_CODEC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mag/mag.hpp"

namespace mag {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class MagcPayload { Bits, Edges };

// .magc on-disk format, bit-exact: ASCII header lines
//   MAGC 1
//   p <order>
//   tau <tau_1> ... <tau_p>
//   time-aspect <h|none>
//   payload bits            (or: payload edges / m <count>)
// a blank line, then the characteristic bitstring packed
// little-endian-bit-in-byte, zero-padded to a byte boundary.
std::vector<std::uint8_t> serialize(const Mag& g, MagcPayload payload = MagcPayload::Bits);
Mag deserialize(const std::vector<std::uint8_t>& bytes);

void write_magc_file(const Mag& g, const std::string& path,
                     MagcPayload payload = MagcPayload::Bits);
Mag read_magc_file(const std::string& path);

}  // namespace mag

#endif
