#include "mag/certificate.hpp"

#include <cmath>

namespace mag {

DeficiencyCertificate deficiency_certificate(const Mag& g, const Compressor& comp) {
  DeficiencyCertificate cert;
  cert.n_composite = g.n_composite();
  cert.raw_len = g.characteristic().size();
  cert.compressed_len = comp.compress(g.characteristic()).size();
  cert.deficiency_lb = cert.raw_len > cert.compressed_len ? cert.raw_len - cert.compressed_len : 0;
  cert.compressor_id = comp.id();
  return cert;
}

bool passes_log_randomness_test(const DeficiencyCertificate& cert, RandomnessThreshold thr) {
  return static_cast<double>(cert.deficiency_lb) <=
         thr.c * std::log2(static_cast<double>(cert.n_composite));
}

}  // namespace mag
