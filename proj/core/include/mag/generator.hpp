#ifndef MAG_GENERATOR_HPP
#define MAG_GENERATOR_HPP

#include <cstdint>

#include "mag/mag.hpp"

namespace mag {

enum class GenKind { UniformHalf, Empty, Complete, Banded, Periodic };

struct GeneratorSpec {
  MagSignature sig;
  GenKind kind = GenKind::UniformHalf;
  std::uint64_t seed = 0;
  std::uint32_t window = 1;   // banded: max time-aspect gap
  std::uint64_t period = 1;   // periodic: tiled pattern length in bits
};

// Counter-based bit stream keyed by (seed, pair index): any bit is
// addressable directly, so generation is order-independent and bit-exact
// across runs and platforms.
std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t counter);
bool counter_bit(std::uint64_t seed, std::uint64_t counter);

Mag generate(const GeneratorSpec& spec);

}  // namespace mag

#endif
