#include "mag/signature.hpp"

#include <cmath>
#include <stdexcept>

namespace mag {

MagSignature::MagSignature(std::vector<std::uint32_t> aspect_sizes,
                           std::optional<std::uint32_t> time_aspect,
                           std::uint64_t max_composite)
    : sizes_(std::move(aspect_sizes)), time_aspect_(time_aspect) {
  if (sizes_.empty()) throw std::invalid_argument("signature: need at least one aspect");
  for (std::uint32_t t : sizes_) {
    if (t == 0) throw std::invalid_argument("signature: aspect sizes must be positive");
    if (n_ > max_composite / t)
      throw std::invalid_argument("signature: composite-vertex count exceeds ceiling");
    n_ *= t;
  }
  if (!time_aspect_ && sizes_.size() >= 2) time_aspect_ = 2;
  if (time_aspect_ && (*time_aspect_ < 1 || *time_aspect_ > sizes_.size()))
    throw std::invalid_argument("signature: time aspect out of range");
}

bool MagSignature::valid_vertex(const CompositeVertex& v) const {
  if (v.coords.size() != sizes_.size()) return false;
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    if (v.coords[i] >= sizes_[i]) return false;
  return true;
}

std::uint64_t MagSignature::composite_index(const CompositeVertex& v) const {
  if (!valid_vertex(v)) throw std::invalid_argument("composite_index: invalid vertex for signature");
  std::uint64_t idx = 0;
  for (std::size_t i = sizes_.size(); i-- > 0;) idx = idx * sizes_[i] + v.coords[i];
  return idx;
}

CompositeVertex MagSignature::vertex_at(std::uint64_t idx) const {
  if (idx >= n_) throw std::out_of_range("vertex_at: index out of range");
  CompositeVertex v;
  v.coords.resize(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    v.coords[i] = static_cast<std::uint32_t>(idx % sizes_[i]);
    idx /= sizes_[i];
  }
  return v;
}

std::string to_string(const CompositeVertex& v) {
  std::string s;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.coords[i]);
  }
  return s;
}

std::uint64_t pair_index(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (a == b) throw std::invalid_argument("pair_index: self-pair");
  if (a >= n || b >= n) throw std::out_of_range("pair_index: vertex index out of range");
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

std::pair<std::uint64_t, std::uint64_t> pair_from_index(std::uint64_t k, std::uint64_t n) {
  if (k >= n * (n - 1) / 2) throw std::out_of_range("pair_from_index: index out of range");
  // b = largest integer with b(b-1)/2 <= k
  auto b = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (b * (b - 1) / 2 > k) --b;
  while ((b + 1) * b / 2 <= k) ++b;
  return {k - b * (b - 1) / 2, b};
}

}  // namespace mag
