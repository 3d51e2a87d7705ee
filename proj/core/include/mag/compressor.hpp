#ifndef MAG_COMPRESSOR_HPP
#define MAG_COMPRESSOR_HPP

#include <string>

#include "mag/bitstring.hpp"

namespace mag {

// Lossless bit-level compressor. Output lengths upper-bound conditional plain
// complexity up to the fixed model constant, so shorter output certifies a
// larger randomness deficiency.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual Bitstring compress(const Bitstring& x) const = 0;
  virtual Bitstring decompress(const Bitstring& c) const = 0;
  virtual std::string id() const = 0;
};

// Built-in reference pipeline: run-length coding with Elias-gamma run lengths,
// then a sliding-window repeated-substring pass; a leading flag bit selects
// the shorter of {raw, pipeline}, so output never exceeds |x| + 1.
class ReferenceCompressor final : public Compressor {
 public:
  Bitstring compress(const Bitstring& x) const override;
  Bitstring decompress(const Bitstring& c) const override;
  std::string id() const override { return "rle-gamma+lz/1"; }
};

const Compressor& reference_compressor();

}  // namespace mag

#endif
