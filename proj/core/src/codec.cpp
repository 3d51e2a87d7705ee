#include "mag/codec.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace mag {
namespace {

void append(std::vector<std::uint8_t>& out, const std::string& line) {
  out.insert(out.end(), line.begin(), line.end());
  out.push_back('\n');
}

// Reads one '\n'-terminated line starting at pos; advances pos past the newline.
std::string take_line(const std::vector<std::uint8_t>& bytes, std::size_t& pos) {
  std::string line;
  while (pos < bytes.size() && bytes[pos] != '\n') line.push_back(static_cast<char>(bytes[pos++]));
  if (pos >= bytes.size())
    throw FormatError("magc: truncated header at byte " + std::to_string(pos));
  ++pos;  // newline
  return line;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw FormatError(std::string("magc: bad ") + what + " value '" + s + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::vector<std::uint8_t> serialize(const Mag& g, MagcPayload payload) {
  const MagSignature& sig = g.signature();
  std::vector<std::uint8_t> out;
  append(out, "MAGC 1");
  append(out, "p " + std::to_string(sig.order()));
  std::string tau = "tau";
  for (std::uint32_t t : sig.aspect_sizes()) tau += " " + std::to_string(t);
  append(out, tau);
  append(out, sig.time_aspect() ? "time-aspect " + std::to_string(*sig.time_aspect())
                                : "time-aspect none");
  if (payload == MagcPayload::Bits) {
    append(out, "payload bits");
    append(out, "");
    const auto& bytes = g.characteristic().bytes();
    out.insert(out.end(), bytes.begin(), bytes.end());
  } else {
    append(out, "payload edges");
    append(out, "m " + std::to_string(g.edge_count()));
    append(out, "");
    const std::uint64_t m = g.signature().pair_space_size();
    for (std::uint64_t k = 0; k < m; ++k) {
      if (!g.characteristic().get(k)) continue;
      auto [a, b] = pair_from_index(k, sig.n_composite());
      std::string line;
      CompositeVertex va = sig.vertex_at(a), vb = sig.vertex_at(b);
      for (std::size_t i = 0; i < va.coords.size(); ++i)
        line += (i ? " " : "") + std::to_string(va.coords[i]);
      line += " |";
      for (std::uint32_t c : vb.coords) line += " " + std::to_string(c);
      append(out, line);
    }
  }
  return out;
}

Mag deserialize(const std::vector<std::uint8_t>& bytes) {
  if (bytes.empty()) throw FormatError("magc: empty input");
  std::size_t pos = 0;
  if (take_line(bytes, pos) != "MAGC 1") throw FormatError("magc: magic mismatch at byte 0");

  auto p_line = split_ws(take_line(bytes, pos));
  if (p_line.size() != 2 || p_line[0] != "p") throw FormatError("magc: expected 'p <order>' line");
  const std::uint64_t order = parse_u64(p_line[1], "order");

  auto tau_line = split_ws(take_line(bytes, pos));
  if (tau_line.empty() || tau_line[0] != "tau" || tau_line.size() != order + 1)
    throw FormatError("magc: tau line does not match declared order");
  std::vector<std::uint32_t> sizes;
  for (std::size_t i = 1; i < tau_line.size(); ++i) {
    std::uint64_t t = parse_u64(tau_line[i], "tau");
    if (t == 0 || t > UINT32_MAX) throw FormatError("magc: aspect size out of range");
    sizes.push_back(static_cast<std::uint32_t>(t));
  }

  auto ta_line = split_ws(take_line(bytes, pos));
  if (ta_line.size() != 2 || ta_line[0] != "time-aspect")
    throw FormatError("magc: expected time-aspect line");
  std::optional<std::uint32_t> time_aspect;
  if (ta_line[1] != "none")
    time_aspect = static_cast<std::uint32_t>(parse_u64(ta_line[1], "time-aspect"));

  MagSignature sig(sizes, time_aspect);

  auto pl_line = split_ws(take_line(bytes, pos));
  if (pl_line.size() != 2 || pl_line[0] != "payload")
    throw FormatError("magc: expected payload line");

  if (pl_line[1] == "bits") {
    if (take_line(bytes, pos) != "") throw FormatError("magc: expected blank line before payload");
    const std::uint64_t nbits = sig.pair_space_size();
    const std::uint64_t need = (nbits + 7) / 8;
    if (bytes.size() - pos < need)
      throw FormatError("magc: truncated bit payload at byte " + std::to_string(bytes.size()) +
                        ", need " + std::to_string(pos + need));
    if (bytes.size() - pos > need) throw FormatError("magc: trailing bytes after bit payload");
    std::vector<std::uint8_t> payload(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                                      bytes.end());
    return Mag::from_characteristic(sig, Bitstring::from_bytes(std::move(payload), nbits));
  }
  if (pl_line[1] != "edges") throw FormatError("magc: unknown payload kind '" + pl_line[1] + "'");

  auto m_line = split_ws(take_line(bytes, pos));
  if (m_line.size() != 2 || m_line[0] != "m") throw FormatError("magc: expected 'm <count>' line");
  const std::uint64_t m = parse_u64(m_line[1], "edge count");
  if (take_line(bytes, pos) != "") throw FormatError("magc: expected blank line before payload");

  MagBuilder builder(sig);
  for (std::uint64_t e = 0; e < m; ++e) {
    auto toks = split_ws(take_line(bytes, pos));
    if (toks.size() != 2 * sig.order() + 1 || toks[sig.order()] != "|")
      throw FormatError("magc: malformed edge line " + std::to_string(e));
    CompositeVertex u, v;
    for (std::uint32_t i = 0; i < sig.order(); ++i) {
      u.coords.push_back(static_cast<std::uint32_t>(parse_u64(toks[i], "coordinate")));
      v.coords.push_back(
          static_cast<std::uint32_t>(parse_u64(toks[sig.order() + 1 + i], "coordinate")));
    }
    if (!sig.valid_vertex(u) || !sig.valid_vertex(v))
      throw FormatError("magc: edge line " + std::to_string(e) + " has out-of-range coordinates");
    builder.add_edge(u, v);
  }
  if (pos != bytes.size()) throw FormatError("magc: trailing bytes after edge payload");
  return std::move(builder).freeze();
}

void write_magc_file(const Mag& g, const std::string& path, MagcPayload payload) {
  auto bytes = serialize(g, payload);
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  std::fwrite(bytes.data(), 1, bytes.size(), f);
  std::fclose(f);
}

Mag read_magc_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::vector<std::uint8_t> bytes;
  std::uint8_t buf[65536];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) bytes.insert(bytes.end(), buf, buf + n);
  std::fclose(f);
  return deserialize(bytes);
}

}  // namespace mag
