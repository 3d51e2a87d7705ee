#include "doctest.h"

#include <algorithm>
#include <vector>

#include "mag/certificate.hpp"
#include "mag/compressor.hpp"
#include "mag/generator.hpp"

using namespace mag;

namespace {

Bitstring random_bits(std::uint64_t seed, std::uint64_t n) {
  Bitstring b(n);
  for (std::uint64_t i = 0; i < n; ++i) b.set(i, counter_bit(seed, i));
  return b;
}

}  // namespace

TEST_CASE("constant strings compress hard") {
  const Compressor& c = reference_compressor();
  Bitstring zeros(100);
  Bitstring out = c.compress(zeros);
  CHECK(out.size() < 30);
  CHECK(c.decompress(out) == zeros);

  Bitstring ones(100);
  for (std::uint64_t i = 0; i < 100; ++i) ones.set(i, true);
  Bitstring out1 = c.compress(ones);
  CHECK(out1.size() < 30);
  CHECK(c.decompress(out1) == ones);
}

TEST_CASE("incompressible input costs at most the flag bit") {
  const Compressor& c = reference_compressor();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Bitstring x = random_bits(seed, 4096);
    CHECK(c.compress(x).size() <= x.size() + 1);
  }
}

TEST_CASE("losslessness on random and structured strings") {
  const Compressor& c = reference_compressor();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::uint64_t n = 1 + counter_mix(seed, 0) % 700;
    Bitstring x = random_bits(seed, n);
    CHECK(c.decompress(c.compress(x)) == x);
  }
  // runs, tiles, and single flips
  for (std::uint64_t n : {1, 2, 63, 64, 65, 500}) {
    Bitstring x(n);
    for (std::uint64_t i = 0; i < n; ++i) x.set(i, (i / 7) % 2);
    CHECK(c.decompress(c.compress(x)) == x);
  }
  Bitstring empty;
  CHECK(c.decompress(c.compress(empty)) == empty);
}

TEST_CASE("periodic patterns benefit from the repeated-substring pass") {
  const Compressor& c = reference_compressor();
  Bitstring x(8192);
  for (std::uint64_t i = 0; i < x.size(); ++i)
    x.set(i, counter_bit(3, i % 64));  // 64-bit tile
  Bitstring out = c.compress(x);
  CHECK(out.size() < x.size() / 4);
  CHECK(c.decompress(out) == x);
}

TEST_CASE("deficiency certificate on empty and complete graphs, N=16") {
  MagSignature sig({4, 4});
  for (GenKind kind : {GenKind::Empty, GenKind::Complete}) {
    DeficiencyCertificate cert = deficiency_certificate(generate({sig, kind}));
    CHECK(cert.raw_len == 120);
    CHECK(cert.n_composite == 16);
    CHECK(cert.deficiency_lb == cert.raw_len - cert.compressed_len);
    CHECK(cert.deficiency_lb >= 90);
    CHECK(cert.compressor_id == reference_compressor().id());
  }
}

TEST_CASE("uniform-half graphs do not compress, N=64") {
  MagSignature sig({8, 8});
  const std::uint64_t raw = sig.pair_space_size();
  std::vector<std::uint64_t> lbs;
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    lbs.push_back(deficiency_certificate(generate({sig, GenKind::UniformHalf, seed})).deficiency_lb);
  std::sort(lbs.begin(), lbs.end());
  CHECK(lbs[lbs.size() / 2] <= raw / 20);  // median <= 0.05 * raw_len
}

TEST_CASE("log-randomness test uses the inclusive threshold") {
  DeficiencyCertificate cert;
  cert.n_composite = 16;
  cert.raw_len = 120;

  cert.deficiency_lb = 0;
  CHECK(passes_log_randomness_test(cert, {3.0}));

  cert.deficiency_lb = 12;  // exactly 3 * log2(16)
  CHECK(passes_log_randomness_test(cert, {3.0}));

  cert.deficiency_lb = 90;
  CHECK(!passes_log_randomness_test(cert, {3.0}));
}

TEST_CASE("certificate soundness: deficiency never exceeds raw length") {
  MagSignature sig({4, 8});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DeficiencyCertificate cert =
        deficiency_certificate(generate({sig, GenKind::UniformHalf, seed}));
    CHECK(cert.deficiency_lb <= cert.raw_len);
  }
}
