#include "mag/generator.hpp"

#include <stdexcept>

namespace mag {
namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

std::uint32_t time_coord(const MagSignature& sig, std::uint64_t idx, std::uint32_t aspect) {
  std::uint64_t stride = 1;
  for (std::uint32_t i = 1; i < aspect; ++i) stride *= sig.aspect_size(i);
  return static_cast<std::uint32_t>(idx / stride % sig.aspect_size(aspect));
}

}  // namespace

std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t counter) {
  return splitmix(seed ^ splitmix(counter + 0x9e3779b97f4a7c15ull));
}

bool counter_bit(std::uint64_t seed, std::uint64_t counter) {
  return counter_mix(seed, counter) >> 63;
}

Mag generate(const GeneratorSpec& spec) {
  const MagSignature& sig = spec.sig;
  const std::uint64_t m = sig.pair_space_size();
  MagBuilder builder(sig);

  switch (spec.kind) {
    case GenKind::Empty:
      break;
    case GenKind::Complete:
      for (std::uint64_t k = 0; k < m; ++k) builder.set_bit(k, true);
      break;
    case GenKind::UniformHalf:
      for (std::uint64_t k = 0; k < m; ++k)
        builder.set_bit(k, counter_bit(spec.seed, k));
      break;
    case GenKind::Banded: {
      if (!sig.time_aspect())
        throw std::invalid_argument("banded generator needs a time aspect");
      const std::uint32_t h = *sig.time_aspect();
      const std::uint64_t n = sig.n_composite();
      std::vector<std::uint32_t> t(n);
      for (std::uint64_t v = 0; v < n; ++v) t[v] = time_coord(sig, v, h);
      std::uint64_t k = 0;
      for (std::uint64_t b = 1; b < n; ++b)
        for (std::uint64_t a = 0; a < b; ++a, ++k) {
          const std::uint32_t gap = t[a] > t[b] ? t[a] - t[b] : t[b] - t[a];
          builder.set_bit(k, gap <= spec.window && counter_bit(spec.seed, k));
        }
      break;
    }
    case GenKind::Periodic: {
      if (spec.period < 1) throw std::invalid_argument("periodic generator needs period >= 1");
      std::vector<bool> pattern(spec.period);
      for (std::uint64_t i = 0; i < spec.period; ++i) pattern[i] = counter_bit(spec.seed, i);
      for (std::uint64_t k = 0; k < m; ++k) builder.set_bit(k, pattern[k % spec.period]);
      break;
    }
  }
  return std::move(builder).freeze();
}

}  // namespace mag
