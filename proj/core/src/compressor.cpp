#include "mag/compressor.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace mag {
namespace {

constexpr std::size_t kMinMatch = 16;    // bits
constexpr std::size_t kWindow = 1 << 13;  // bits
constexpr int kMaxChain = 64;

class BitReader {
 public:
  explicit BitReader(const Bitstring& b) : b_(b) {}
  bool read() {
    if (pos_ >= b_.size()) throw std::runtime_error("compressor: truncated stream");
    return b_.get(pos_++);
  }
  bool at_end() const { return pos_ >= b_.size(); }

 private:
  const Bitstring& b_;
  std::uint64_t pos_ = 0;
};

void write_gamma(Bitstring& out, std::uint64_t v) {
  // v >= 1: (width-1) zeros, then v's binary MSB-first
  const int width = std::bit_width(v);
  for (int i = 0; i < width - 1; ++i) out.push_back(false);
  for (int i = width - 1; i >= 0; --i) out.push_back((v >> i) & 1);
}

std::uint64_t read_gamma(BitReader& in) {
  int zeros = 0;
  while (!in.read()) ++zeros;
  std::uint64_t v = 1;
  for (int i = 0; i < zeros; ++i) v = (v << 1) | (in.read() ? 1 : 0);
  return v;
}

// Stage 1: alternating run lengths, gamma coded, after the value of bit 0.
std::vector<std::uint8_t> rle_encode(const Bitstring& x) {
  Bitstring out;
  out.push_back(x.get(0));
  std::uint64_t i = 0;
  while (i < x.size()) {
    std::uint64_t j = i;
    while (j < x.size() && x.get(j) == x.get(i)) ++j;
    write_gamma(out, j - i);
    i = j;
  }
  std::vector<std::uint8_t> bits(out.size());
  for (std::uint64_t k = 0; k < out.size(); ++k) bits[k] = out.get(k);
  return bits;
}

Bitstring rle_decode(const std::vector<std::uint8_t>& bits) {
  Bitstring packed;
  for (std::uint8_t b : bits) packed.push_back(b != 0);
  BitReader in(packed);
  Bitstring out;
  bool cur = in.read();
  while (!in.at_end()) {
    std::uint64_t run = read_gamma(in);
    for (std::uint64_t i = 0; i < run; ++i) out.push_back(cur);
    cur = !cur;
  }
  return out;
}

std::uint16_t key_at(const std::vector<std::uint8_t>& bits, std::size_t pos) {
  std::uint16_t k = 0;
  for (std::size_t i = 0; i < kMinMatch; ++i) k = static_cast<std::uint16_t>((k << 1) | bits[pos + i]);
  return k;
}

// Stage 2: greedy sliding-window match coding over the stage-1 bit sequence.
// Tokens: 0 + gamma(len) + len literal bits, or 1 + gamma(offset) + gamma(len-kMinMatch+1).
Bitstring lz_encode(const std::vector<std::uint8_t>& bits) {
  Bitstring out;
  const std::size_t n = bits.size();
  std::unordered_map<std::uint16_t, std::vector<std::uint32_t>> table;

  std::size_t lit_start = 0;
  auto flush_literals = [&](std::size_t end) {
    if (end == lit_start) return;
    out.push_back(false);
    write_gamma(out, end - lit_start);
    for (std::size_t i = lit_start; i < end; ++i) out.push_back(bits[i] != 0);
  };

  std::size_t pos = 0;
  while (pos < n) {
    std::size_t best_len = 0, best_off = 0;
    if (pos + kMinMatch <= n) {
      auto it = table.find(key_at(bits, pos));
      if (it != table.end()) {
        const auto& chain = it->second;
        int tried = 0;
        for (std::size_t c = chain.size(); c-- > 0 && tried < kMaxChain;) {
          const std::size_t cand = chain[c];
          if (pos - cand > kWindow) break;
          ++tried;
          std::size_t len = 0;
          while (pos + len < n && bits[cand + len] == bits[pos + len]) ++len;
          if (len > best_len) {
            best_len = len;
            best_off = pos - cand;
          }
        }
      }
    }
    if (best_len >= kMinMatch) {
      flush_literals(pos);
      out.push_back(true);
      write_gamma(out, best_off);
      write_gamma(out, best_len - kMinMatch + 1);
      for (std::size_t i = 0; i < best_len && pos + i + kMinMatch <= n; ++i)
        table[key_at(bits, pos + i)].push_back(static_cast<std::uint32_t>(pos + i));
      pos += best_len;
      lit_start = pos;
    } else {
      if (pos + kMinMatch <= n)
        table[key_at(bits, pos)].push_back(static_cast<std::uint32_t>(pos));
      ++pos;
    }
  }
  flush_literals(n);
  return out;
}

std::vector<std::uint8_t> lz_decode(BitReader& in) {
  std::vector<std::uint8_t> out;
  while (!in.at_end()) {
    if (in.read()) {
      std::uint64_t off = read_gamma(in);
      std::uint64_t len = read_gamma(in) + kMinMatch - 1;
      if (off > out.size()) throw std::runtime_error("compressor: bad match offset");
      for (std::uint64_t i = 0; i < len; ++i) out.push_back(out[out.size() - off]);
    } else {
      std::uint64_t len = read_gamma(in);
      for (std::uint64_t i = 0; i < len; ++i) out.push_back(in.read() ? 1 : 0);
    }
  }
  return out;
}

}  // namespace

Bitstring ReferenceCompressor::compress(const Bitstring& x) const {
  Bitstring raw;
  raw.push_back(false);
  for (std::uint64_t i = 0; i < x.size(); ++i) raw.push_back(x.get(i));
  if (x.empty()) return raw;

  Bitstring piped = lz_encode(rle_encode(x));
  if (piped.size() + 1 < raw.size()) {
    Bitstring out;
    out.push_back(true);
    for (std::uint64_t i = 0; i < piped.size(); ++i) out.push_back(piped.get(i));
    return out;
  }
  return raw;
}

Bitstring ReferenceCompressor::decompress(const Bitstring& c) const {
  if (c.empty()) throw std::runtime_error("compressor: empty stream");
  BitReader in(c);
  if (!in.read()) {
    Bitstring out;
    for (std::uint64_t i = 1; i < c.size(); ++i) out.push_back(c.get(i));
    return out;
  }
  return rle_decode(lz_decode(in));
}

const Compressor& reference_compressor() {
  static const ReferenceCompressor c;
  return c;
}

}  // namespace mag
