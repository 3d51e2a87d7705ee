#ifndef MAG_SIGNATURE_HPP
#define MAG_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mag {

// One coordinate per aspect, aspect 1 first.
struct CompositeVertex {
  std::vector<std::uint32_t> coords;

  bool operator==(const CompositeVertex&) const = default;
};

// Ordered list of aspect sizes (tau_1, ..., tau_p). Fixes the composite-vertex
// space of size N = prod tau_i and the mixed-radix labeling over it, with
// aspect 1 fastest-varying.
class MagSignature {
 public:
  static constexpr std::uint64_t kDefaultMaxComposite = 1u << 16;

  explicit MagSignature(std::vector<std::uint32_t> aspect_sizes,
                        std::optional<std::uint32_t> time_aspect = std::nullopt,
                        std::uint64_t max_composite = kDefaultMaxComposite);

  std::uint32_t order() const { return static_cast<std::uint32_t>(sizes_.size()); }
  std::uint32_t aspect_size(std::uint32_t aspect) const { return sizes_[aspect - 1]; }
  const std::vector<std::uint32_t>& aspect_sizes() const { return sizes_; }
  std::uint64_t n_composite() const { return n_; }
  // 1-based aspect position, defaults to 2 for order >= 2.
  std::optional<std::uint32_t> time_aspect() const { return time_aspect_; }

  bool valid_vertex(const CompositeVertex& v) const;

  // Mixed-radix value, aspect 1 fastest: idx = c1 + tau1*(c2 + tau2*(c3 + ...)).
  std::uint64_t composite_index(const CompositeVertex& v) const;
  CompositeVertex vertex_at(std::uint64_t idx) const;

  std::uint64_t pair_space_size() const { return n_ * (n_ - 1) / 2; }

  bool operator==(const MagSignature& o) const {
    return sizes_ == o.sizes_ && time_aspect_ == o.time_aspect_;
  }

 private:
  std::vector<std::uint32_t> sizes_;
  std::optional<std::uint32_t> time_aspect_;
  std::uint64_t n_ = 1;
};

// Unordered pair of distinct composite vertices, stored with index(a) < index(b).
struct CompositeEdge {
  CompositeVertex a;
  CompositeVertex b;
};

std::string to_string(const CompositeVertex& v);

// Colexicographic pair labeling: for composite indices a < b,
// pair_index = b(b-1)/2 + a. Bijection from unordered pairs onto [0, C(N,2)).
std::uint64_t pair_index(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> pair_from_index(std::uint64_t k, std::uint64_t n);

}  // namespace mag

#endif
