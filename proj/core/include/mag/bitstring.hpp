#ifndef MAG_BITSTRING_HPP
#define MAG_BITSTRING_HPP

#include <cstdint>
#include <vector>

namespace mag {

// Packed bit sequence, bit k lives at byte k/8, bit position k%8.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::uint64_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

  static Bitstring from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t nbits);

  std::uint64_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::uint64_t k) const { return (bytes_[k >> 3] >> (k & 7)) & 1; }
  void set(std::uint64_t k, bool v) {
    if (v)
      bytes_[k >> 3] |= static_cast<std::uint8_t>(1u << (k & 7));
    else
      bytes_[k >> 3] &= static_cast<std::uint8_t>(~(1u << (k & 7)));
  }

  void push_back(bool v) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    ++nbits_;
    set(nbits_ - 1, v);
  }

  std::uint64_t popcount() const;

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool operator==(const Bitstring& o) const { return nbits_ == o.nbits_ && bytes_ == o.bytes_; }
  bool operator!=(const Bitstring& o) const { return !(*this == o); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t nbits_ = 0;
};

}  // namespace mag

#endif
