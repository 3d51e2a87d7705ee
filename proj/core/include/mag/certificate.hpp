#ifndef MAG_CERTIFICATE_HPP
#define MAG_CERTIFICATE_HPP

#include <cstdint>
#include <string>

#include "mag/compressor.hpp"
#include "mag/mag.hpp"

namespace mag {

// Compression-based lower bound on randomness deficiency. A large
// deficiency_lb certifies non-randomness (modulo the compressor-model
// constant); a small one never certifies randomness.
struct DeficiencyCertificate {
  std::uint64_t raw_len = 0;         // C(N,2) bits
  std::uint64_t compressed_len = 0;  // compressor output bits
  std::uint64_t deficiency_lb = 0;   // max(0, raw_len - compressed_len)
  std::string compressor_id;
  std::uint64_t n_composite = 0;
};

// Deficiency class delta(N) = c * log2(N).
struct RandomnessThreshold {
  double c = 3.0;
};

DeficiencyCertificate deficiency_certificate(const Mag& g,
                                             const Compressor& comp = reference_compressor());

// True iff the certificate does not refute O(log N)-C-randomness at
// coefficient thr.c. Never a proof of randomness.
bool passes_log_randomness_test(const DeficiencyCertificate& cert, RandomnessThreshold thr);

}  // namespace mag

#endif
